#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace extremal {

// Labels are 1..n, stored as bit (label - 1) of a 32-bit mask.
using LabelSet = std::uint32_t;

inline constexpr int kMaxLabels = 30;

inline constexpr LabelSet label_bit(int label) { return LabelSet{1} << (label - 1); }

inline constexpr LabelSet full_set(int n) { return (LabelSet{1} << n) - 1; }

inline int set_size(LabelSet s) { return std::popcount(s); }

/// Smallest label in a nonempty set.
inline int min_label(LabelSet s) { return std::countr_zero(s) + 1; }

inline bool has_label(LabelSet s, int label) { return (s & label_bit(label)) != 0; }

inline bool is_subset(LabelSet a, LabelSet b) { return (a & ~b) == 0; }

LabelSet make_set(std::initializer_list<int> labels);

std::vector<int> labels_of(LabelSet s);

/// Lexicographic order of the ascending label sequences.
bool lex_less(LabelSet a, LabelSet b);

/// Comma separated, e.g. "1,2,5".
std::string format_labels(LabelSet s);

/// Braced, e.g. "{1,2,5}".
std::string format_set(LabelSet s);

}  // namespace extremal
