#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace notakto {

// An element a^i b^j c^k d^l of the 18-element misere quotient monoid,
// generated by a, b, c, d subject to
//   a^2 = 1, b^3 = b, b^2 c = c, c^3 = a c^2, b^2 d = d, c d = a d, d^2 = c^2.
// Always held in reduced normal form.
class MonoidElement {
 public:
  constexpr MonoidElement() = default;

  // Reduces arbitrary non-negative exponents to normal form.
  static MonoidElement reduce(unsigned i, unsigned j, unsigned k, unsigned l);

  static MonoidElement identity() { return {}; }
  static MonoidElement a() { return reduce(1, 0, 0, 0); }
  static MonoidElement b() { return reduce(0, 1, 0, 0); }
  static MonoidElement c() { return reduce(0, 0, 1, 0); }
  static MonoidElement d() { return reduce(0, 0, 0, 1); }

  int i() const { return exps_[0]; }
  int j() const { return exps_[1]; }
  int k() const { return exps_[2]; }
  int l() const { return exps_[3]; }
  const std::array<unsigned char, 4>& exponents() const { return exps_; }

  // Dense index 0..17 in the order of elements().
  int index() const;

  MonoidElement operator*(const MonoidElement& other) const;
  MonoidElement& operator*=(const MonoidElement& other) { return *this = *this * other; }
  MonoidElement pow(unsigned n) const;

  friend auto operator<=>(const MonoidElement&, const MonoidElement&) = default;

 private:
  std::array<unsigned char, 4> exps_{};
};

MonoidElement multiply(const MonoidElement& x, const MonoidElement& y);

// The 18 normal forms, sorted by exponent tuple.
const std::vector<MonoidElement>& elements();

// The P-set {a, b^2, bc, c^2}.
const std::vector<MonoidElement>& p_set();
bool is_p(const MonoidElement& x);

// Grammar: "1" or a run of generators a..d, each optionally "^n".
MonoidElement parse_element(std::string_view text);
std::string render_element(const MonoidElement& x);

// 18x18 multiplication table; first row and column are element headers.
std::string multiplication_table_csv();

}  // namespace notakto
