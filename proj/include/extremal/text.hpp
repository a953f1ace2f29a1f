#pragma once

// Text forms of every object the command line reads or prints. Parsers throw
// ParseError carrying the 1-based line and column of the offending character.

#include "extremal/assignments.hpp"
#include "extremal/families.hpp"
#include "extremal/geometry.hpp"
#include "extremal/invariant.hpp"
#include "extremal/smooth.hpp"
#include "extremal/toric.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace extremal {

// In the single-object parsers, n = 0 means "infer from the text".

/// `{1,2|3|4,5,6}`
SetPartition parse_set_partition(std::string_view text, int n = 0);
std::string format_partition(const SetPartition& p);

/// `[7,3,1,1]`
IntegerPartition parse_integer_partition(std::string_view text, int n = 0);
std::string format_partition(const IntegerPartition& p);

/// `(1,2,(3,4),(5,6))`
LabeledTree parse_tree(std::string_view text, int n = 0);
std::string format_tree(const LabeledTree& tree);

/// `1,2,5`
LabelSet parse_label_list(std::string_view text, int n);

/// `n 6` header followed by one set partition per line; `#` starts a comment.
Assignment parse_assignment(std::string_view text);
std::string format_assignment(const Assignment& z);

/// `n 5` header followed by one label list per line.
ContractionIndicator parse_indicator(std::string_view text);
std::string format_indicator(const ContractionIndicator& c);
SimpleIntersectingFamily parse_family(std::string_view text);
std::string format_family(const SimpleIntersectingFamily& f);

/// `n 12` header followed by one integer partition per line.
InvariantAssignment parse_invariant(std::string_view text);
std::string format_invariant(const InvariantAssignment& f);

/// Vertex count on the first line, then `u v` per edge.
SimpleGraph parse_graph(std::string_view text);
std::string format_graph(const SimpleGraph& g);

/// One marked tree per line: a tree followed by a vertex id.
std::vector<MarkedTree> parse_marked_trees(std::string_view text);

/// `1/3,1/3,1/3,1,1`
WeightData parse_weights(std::string_view text);
std::string format_weights(const WeightData& a);

/// `d=2 gamma=0 c=3/7,3/7,...`
GitParams parse_git(std::string_view text);
std::string format_git(const GitParams& p);

/// `F{1|2|3|4,5,6}`
FCurve parse_fcurve(std::string_view text, int n = 0);
std::string format_fcurve(const FCurve& f);

/// `F(4,2,1,1)`
FType parse_ftype(std::string_view text, int n = 0);
std::string format_ftype(const FType& t);

/// `6*D2+11*D3+8*D4` or `1*D{1,2}-1/2*D{1,3}`. A lone `0` is the zero divisor.
std::variant<Divisor, SymmetricDivisor> parse_divisor(std::string_view text, int n);
std::string format_divisor(const Divisor& d);
std::string format_divisor(const SymmetricDivisor& d);

}  // namespace extremal
