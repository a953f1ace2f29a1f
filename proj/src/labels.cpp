#include "extremal/labels.hpp"

#include "extremal/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace extremal {

LabelSet make_set(std::initializer_list<int> labels) {
  LabelSet s = 0;
  for (int l : labels) s |= label_bit(l);
  return s;
}

std::vector<int> labels_of(LabelSet s) {
  std::vector<int> out;
  out.reserve(set_size(s));
  while (s != 0) {
    out.push_back(min_label(s));
    s &= s - 1;
  }
  return out;
}

bool lex_less(LabelSet a, LabelSet b) {
  if (a == b) return false;
  LabelSet diff = a ^ b;
  LabelSet low = diff & (~diff + 1);
  LabelSet above = ~(low | (low - 1));
  // Sequences agree below `low`. The one holding `low` is smaller unless the
  // other one has already run out of elements.
  if (a & low) return (b & above) != 0;
  return (a & above) == 0;
}

std::string format_labels(LabelSet s) {
  std::string out;
  for (int l : labels_of(s)) {
    if (!out.empty()) out += ',';
    out += std::to_string(l);
  }
  return out;
}

std::string format_set(LabelSet s) { return "{" + format_labels(s) + "}"; }

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q{mpz_class{n}, d};
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

mpz_class ceil_of(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational sum(const std::vector<Rational>& values) {
  Rational s = 0;
  for (const auto& v : values) s += v;
  return s;
}

}  // namespace extremal
