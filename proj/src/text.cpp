#include "extremal/text.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <functional>
#include <map>
#include <sstream>

namespace extremal {

namespace {

class Scanner {
 public:
  Scanner(std::string_view text, int line = 1, int column = 1) : text_(text), line_(line), column_(column) {}

  std::size_t pos() const { return pos_; }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
  }

  int integer() {
    skip_space();
    std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > INT_MAX / 2) fail_at(start, "number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number" + found());
    return static_cast<int>(value);
  }

  Rational rational() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    auto digits = [&] {
      std::size_t from = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return pos_ > from;
    };
    if (!digits()) fail_at(start, "expected a rational number" + found_at(start));
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      if (!digits()) fail("expected a denominator" + found());
    }
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      fail_at(start, e.what());
    }
  }

  void finish() {
    if (peek() != '\0') fail("unexpected trailing text" + found());
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t at, const std::string& message) const {
    throw ParseError(message, line_, column_ + static_cast<int>(at));
  }

 private:
  std::string found() const { return found_at(pos_); }
  std::string found_at(std::size_t at) const {
    if (at >= text_.size()) return " but reached the end";
    return std::string(" but found '") + text_[at] + "'";
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int column_;
};

// Tracks which labels have been used and reports duplicates and gaps.
class LabelTracker {
 public:
  LabelTracker(Scanner& s, int n) : s_(s), n_(n) {}

  int take() {
    std::size_t at = (s_.skip_space(), s_.pos());
    int label = s_.integer();
    if (label < 1 || label > kMaxLabels || (n_ > 0 && label > n_))
      s_.fail_at(at, "label " + std::to_string(label) + " out of range");
    if (has_label(used_, label)) s_.fail_at(at, "label " + std::to_string(label) + " appears twice");
    used_ |= label_bit(label);
    return label;
  }

  /// Fixes n (inferring it if needed) and checks that every label appeared.
  int close(std::size_t at) {
    int n = n_ > 0 ? n_ : (used_ == 0 ? 0 : 32 - std::countl_zero(used_));
    for (int l = 1; l <= n; ++l)
      if (!has_label(used_, l)) s_.fail_at(at, "label " + std::to_string(l) + " is missing");
    return n;
  }

 private:
  Scanner& s_;
  int n_;
  LabelSet used_ = 0;
};

std::vector<LabelSet> blocks_between(Scanner& s, LabelTracker& labels, char close) {
  std::vector<LabelSet> blocks{0};
  for (;;) {
    blocks.back() |= label_bit(labels.take());
    if (s.accept(',')) continue;
    if (s.accept('|')) {
      blocks.push_back(0);
      continue;
    }
    s.expect(close);
    return blocks;
  }
}

SetPartition read_set_partition(Scanner& s, int n) {
  s.expect('{');
  LabelTracker labels(s, n);
  std::vector<LabelSet> blocks = blocks_between(s, labels, '}');
  int size = labels.close(s.pos() - 1);
  return SetPartition(size, std::move(blocks));
}

IntegerPartition read_integer_partition(Scanner& s, int n) {
  s.expect('[');
  std::vector<int> parts;
  do {
    std::size_t at = (s.skip_space(), s.pos());
    int part = s.integer();
    if (part < 1) s.fail_at(at, "parts must be positive");
    parts.push_back(part);
  } while (s.accept(','));
  s.expect(']');
  int total = 0;
  for (int p : parts) total += p;
  if (n > 0 && total != n) s.fail("parts sum to " + std::to_string(total) + ", expected " + std::to_string(n));
  if (total > kMaxLabels) s.fail("parts sum beyond " + std::to_string(kMaxLabels));
  return IntegerPartition(std::move(parts));
}

LabeledTree read_tree(Scanner& s, int n) {
  TreeShape shape;
  LabelTracker labels(s, n);
  std::function<int(int)> vertex = [&](int parent) {
    std::size_t open = (s.skip_space(), s.pos());
    s.expect('(');
    int id = static_cast<int>(shape.labels.size());
    shape.labels.push_back(0);
    if (parent >= 0) shape.edges.emplace_back(parent, id);
    int items = 0;
    do {
      if (s.peek() == '(')
        vertex(id);
      else
        shape.labels[id] |= label_bit(labels.take());
      ++items;
    } while (s.accept(','));
    s.expect(')');
    if (items + (parent >= 0 ? 1 : 0) < 3) s.fail_at(open, "vertex has valence below 3");
    return id;
  };
  vertex(-1);
  shape.n = labels.close(s.pos() - 1);
  try {
    return LabeledTree(shape);
  } catch (const Error& e) {
    s.fail_at(0, e.what());
  }
}

LabelSet read_label_list(Scanner& s, int n) {
  LabelTracker labels(s, n);
  LabelSet out = 0;
  do out |= label_bit(labels.take());
  while (s.accept(','));
  return out;
}

FCurve read_fcurve(Scanner& s, int n) {
  s.expect('F');
  s.expect('{');
  LabelTracker labels(s, n);
  std::size_t open = s.pos() - 1;
  std::vector<LabelSet> blocks = blocks_between(s, labels, '}');
  int size = labels.close(s.pos() - 1);
  if (blocks.size() != 4) s.fail_at(open, "an F-curve needs exactly 4 parts");
  return FCurve::make(size, {blocks[0], blocks[1], blocks[2], blocks[3]});
}

struct Line {
  int number = 0;
  int column = 1;
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos) {
      std::size_t last = line.find_last_not_of(" \t\r");
      out.push_back({number, static_cast<int>(first) + 1, line.substr(first, last - first + 1)});
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

int read_header(const std::vector<Line>& lines, bool keyword) {
  if (lines.empty()) throw ParseError(keyword ? "missing 'n <count>' header" : "missing vertex count", 1, 1);
  Scanner s(lines[0].text, lines[0].number, lines[0].column);
  if (keyword) s.expect('n');
  std::size_t at = (s.skip_space(), s.pos());
  int n = s.integer();
  if (n < 1 || n > kMaxLabels) s.fail_at(at, "count must lie in 1.." + std::to_string(kMaxLabels));
  s.finish();
  return n;
}

template <class F>
auto each_body_line(const std::vector<Line>& lines, F&& read) {
  using T = decltype(read(std::declval<Scanner&>()));
  std::vector<T> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Scanner s(lines[i].text, lines[i].number, lines[i].column);
    try {
      out.push_back(read(s));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), lines[i].number, lines[i].column);
    }
    s.finish();
  }
  return out;
}

// Converts library validation errors raised after a successful scan into positioned errors.
template <class F>
auto located(int line, int column, F&& build) {
  try {
    return build();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), line, column);
  }
}

template <class F>
auto single(std::string_view text, F&& read) {
  Scanner s(text);
  auto value = located(1, 1, [&] { return read(s); });
  s.finish();
  return value;
}

std::string join_labels(LabelSet s, const char* sep) {
  std::string out;
  for (int l : labels_of(s)) {
    if (!out.empty()) out += sep;
    out += std::to_string(l);
  }
  return out;
}

std::string format_blocks(const std::vector<LabelSet>& blocks) {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += '|';
    out += join_labels(blocks[i], ",");
  }
  return out;
}

std::string format_label_lines(int n, const std::vector<LabelSet>& sets) {
  std::string out = "n " + std::to_string(n) + "\n";
  for (LabelSet s : sets) out += join_labels(s, ",") + "\n";
  return out;
}

std::string signed_term(bool first, const Rational& c, const std::string& tail) {
  std::string out;
  if (c < 0)
    out += '-';
  else if (!first)
    out += '+';
  Rational magnitude = abs(c);
  return out + to_string(magnitude) + "*" + tail;
}

}  // namespace

SetPartition parse_set_partition(std::string_view text, int n) {
  return single(text, [n](Scanner& s) { return read_set_partition(s, n); });
}

std::string format_partition(const SetPartition& p) { return "{" + format_blocks(p.blocks()) + "}"; }

IntegerPartition parse_integer_partition(std::string_view text, int n) {
  return single(text, [n](Scanner& s) { return read_integer_partition(s, n); });
}

std::string format_partition(const IntegerPartition& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out + "]";
}

LabeledTree parse_tree(std::string_view text, int n) {
  return single(text, [n](Scanner& s) { return read_tree(s, n); });
}

std::string format_tree(const LabeledTree& tree) {
  std::function<std::string(int)> render = [&](int v) {
    std::vector<std::pair<int, std::string>> items;
    for (int l : labels_of(tree.labels_at(v))) items.emplace_back(l, std::to_string(l));
    for (int w : tree.neighbors(v))
      if (w != tree.parent(v)) items.emplace_back(min_label(tree.subtree_labels(w)), render(w));
    std::sort(items.begin(), items.end());
    std::string out = "(";
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) out += ',';
      out += items[i].second;
    }
    return out + ")";
  };
  return render(0);
}

LabelSet parse_label_list(std::string_view text, int n) {
  return single(text, [n](Scanner& s) { return read_label_list(s, n); });
}

Assignment parse_assignment(std::string_view text) {
  auto lines = content_lines(text);
  int n = read_header(lines, true);
  auto gens = each_body_line(lines, [n](Scanner& s) { return read_set_partition(s, n); });
  int line = lines.size() > 1 ? lines[1].number : lines[0].number;
  return located(line, 1, [&] { return normalize(n, std::move(gens)); });
}

std::string format_assignment(const Assignment& z) {
  std::string out = "n " + std::to_string(z.n()) + "\n";
  for (const auto& p : z.generators()) out += format_partition(p) + "\n";
  return out;
}

ContractionIndicator parse_indicator(std::string_view text) {
  auto lines = content_lines(text);
  int n = read_header(lines, true);
  auto sets = each_body_line(lines, [n](Scanner& s) { return read_label_list(s, n); });
  return ContractionIndicator::from_sets(n, std::move(sets));
}

std::string format_indicator(const ContractionIndicator& c) { return format_label_lines(c.n, c.maximal); }

SimpleIntersectingFamily parse_family(std::string_view text) {
  auto lines = content_lines(text);
  int n = read_header(lines, true);
  auto edges = each_body_line(lines, [n](Scanner& s) { return read_label_list(s, n); });
  std::sort(edges.begin(), edges.end());
  return {n, std::move(edges)};
}

std::string format_family(const SimpleIntersectingFamily& f) { return format_label_lines(f.n, f.edges); }

InvariantAssignment parse_invariant(std::string_view text) {
  auto lines = content_lines(text);
  int n = read_header(lines, true);
  auto gens = each_body_line(lines, [n](Scanner& s) { return read_integer_partition(s, n); });
  int line = lines.size() > 1 ? lines[1].number : lines[0].number;
  return located(line, 1, [&] { return normalize_invariant(n, std::move(gens)); });
}

std::string format_invariant(const InvariantAssignment& f) {
  std::string out = "n " + std::to_string(f.n()) + "\n";
  for (const auto& p : f.generators()) out += format_partition(p) + "\n";
  return out;
}

SimpleGraph parse_graph(std::string_view text) {
  auto lines = content_lines(text);
  int m = read_header(lines, false);
  auto edges = each_body_line(lines, [m](Scanner& s) {
    std::pair<int, int> e;
    for (int* end : {&e.first, &e.second}) {
      std::size_t at = (s.skip_space(), s.pos());
      *end = s.integer();
      if (*end < 1 || *end > m) s.fail_at(at, "vertex " + std::to_string(*end) + " out of range");
    }
    return e;
  });
  return located(lines[0].number, 1, [&] { return SimpleGraph(m, std::move(edges)); });
}

std::string format_graph(const SimpleGraph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::vector<MarkedTree> parse_marked_trees(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("no marked trees given", 1, 1);
  std::vector<MarkedTree> out;
  int n = 0;
  for (const auto& line : lines) {
    Scanner s(line.text, line.number, line.column);
    LabeledTree tree = located(line.number, line.column, [&] { return read_tree(s, n); });
    n = tree.n();
    std::size_t at = (s.skip_space(), s.pos());
    int v = s.integer();
    if (v >= tree.vertex_count()) s.fail_at(at, "vertex " + std::to_string(v) + " does not exist");
    s.finish();
    out.push_back({std::move(tree), v});
  }
  return out;
}

WeightData parse_weights(std::string_view text) {
  return single(text, [](Scanner& s) {
    WeightData a;
    do a.push_back(s.rational());
    while (s.accept(','));
    return a;
  });
}

std::string format_weights(const WeightData& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += to_string(a[i]);
  }
  return out;
}

GitParams parse_git(std::string_view text) {
  return single(text, [](Scanner& s) {
    GitParams p;
    bool have_d = false, have_gamma = false, have_c = false;
    while (s.peek() != '\0') {
      std::size_t at = s.pos();
      std::string key;
      while (std::isalpha(static_cast<unsigned char>(s.peek()))) {
        key += s.peek();
        s.accept(s.peek());
      }
      s.expect('=');
      if (key == "d" && !have_d) {
        p.d = s.integer();
        have_d = true;
      } else if (key == "gamma" && !have_gamma) {
        p.gamma = s.rational();
        have_gamma = true;
      } else if (key == "c" && !have_c) {
        do p.c.push_back(s.rational());
        while (s.accept(','));
        have_c = true;
      } else {
        s.fail_at(at, "unknown or repeated key '" + key + "'");
      }
    }
    if (!have_d || !have_gamma || !have_c) s.fail("expected d=, gamma= and c=");
    return p;
  });
}

std::string format_git(const GitParams& p) {
  return "d=" + std::to_string(p.d) + " gamma=" + to_string(p.gamma) + " c=" + format_weights(p.c);
}

FCurve parse_fcurve(std::string_view text, int n) {
  return single(text, [n](Scanner& s) { return read_fcurve(s, n); });
}

std::string format_fcurve(const FCurve& f) {
  return "F{" + format_blocks({f.parts.begin(), f.parts.end()}) + "}";
}

FType parse_ftype(std::string_view text, int n) {
  return single(text, [n](Scanner& s) {
    s.expect('F');
    s.expect('(');
    std::array<int, 4> sizes{};
    for (int i = 0; i < 4; ++i) {
      if (i) s.expect(',');
      sizes[i] = s.integer();
    }
    s.expect(')');
    int total = sizes[0] + sizes[1] + sizes[2] + sizes[3];
    return make_ftype(n > 0 ? n : total, sizes);
  });
}

std::string format_ftype(const FType& t) {
  return "F(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "," +
         std::to_string(t[3]) + ")";
}

std::variant<Divisor, SymmetricDivisor> parse_divisor(std::string_view text, int n) {
  return single(text, [n](Scanner& s) -> std::variant<Divisor, SymmetricDivisor> {
    Divisor full{n, {}};
    SymmetricDivisor sym{n, {}};
    int kinds = 0;  // bit 0: explicit classes seen, bit 1: symmetric classes seen
    if (s.peek() == '0') {
      Scanner probe = s;
      probe.integer();
      if (probe.peek() == '\0') {
        s.integer();
        return sym;
      }
    }
    bool first = true;
    while (first || s.peek() != '\0') {
      Rational sign = 1;
      if (s.accept('-'))
        sign = -1;
      else if (!s.accept('+') && !first)
        s.fail("expected '+' or '-'");
      first = false;
      Rational coeff = 1;
      if (s.peek() != 'D') {
        coeff = s.rational();
        s.expect('*');
      }
      coeff *= sign;
      std::size_t at = s.pos();
      s.expect('D');
      if (s.accept('{')) {
        LabelSet j = read_label_list(s, n);
        s.expect('}');
        if (set_size(j) < 2 || set_size(j) > n - 2) s.fail_at(at, "boundary class needs between 2 and n-2 labels");
        full.coeffs[canonical_boundary(n, j)] += coeff;
        kinds |= 1;
      } else {
        std::size_t kat = (s.skip_space(), s.pos());
        int k = s.integer();
        if (k < 2 || 2 * k > n) s.fail_at(kat, "symmetric class index must lie in 2.." + std::to_string(n / 2));
        sym.coeffs[k] += coeff;
        kinds |= 2;
      }
    }
    if (kinds == 3) s.fail_at(0, "cannot mix explicit and symmetric classes");
    std::erase_if(full.coeffs, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(sym.coeffs, [](const auto& kv) { return kv.second == 0; });
    if (kinds == 1) return full;
    return sym;
  });
}

std::string format_divisor(const Divisor& d) {
  if (d.coeffs.empty()) return "0";
  // Order classes lexicographically by label sequence.
  std::vector<std::pair<LabelSet, Rational>> terms(d.coeffs.begin(), d.coeffs.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i)
    out += signed_term(i == 0, terms[i].second, "D{" + join_labels(terms[i].first, ",") + "}");
  return out;
}

std::string format_divisor(const SymmetricDivisor& d) {
  if (d.coeffs.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : d.coeffs) {
    out += signed_term(first, c, "D" + std::to_string(k));
    first = false;
  }
  return out;
}

}  // namespace extremal
