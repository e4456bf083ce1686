#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cominkl {

// Integer Laurent polynomial in v. Dense storage from the lowest nonzero
// exponent; the zero polynomial has no coefficients. Arithmetic is checked
// and throws std::overflow_error instead of wrapping.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant);  // NOLINT: implicit from integers is handy

  static LaurentPoly monomial(std::int64_t coef, int exp);
  static LaurentPoly v(int exp = 1) { return monomial(1, exp); }

  bool is_zero() const { return c_.empty(); }
  int min_degree() const;  // throws on zero
  int max_degree() const;  // throws on zero
  std::int64_t coeff(int exp) const;
  std::size_t term_count() const;
  std::vector<std::pair<int, std::int64_t>> terms() const;

  LaurentPoly bar() const;
  bool is_bar_invariant() const { return bar() == *this; }
  bool has_nonnegative_coeffs() const;

  // Terms with exponent < 0, resp. > 0.
  LaurentPoly negative_part() const;
  LaurentPoly positive_part() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  LaurentPoly shifted(int k) const;  // times v^k

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Canonical text: increasing exponents, "c*v^e", v^0 elided, e.g.
  // "1 + 2*v^2", "v^-1 - v^1", "0".
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

 private:
  void trim();
  int lo_ = 0;
  std::vector<std::int64_t> c_;
};

struct MonomialInfo {
  bool zero = false;
  bool monic = false;  // exactly one term, coefficient 1
  int exponent = 0;    // valid when monic
};

MonomialInfo is_monic_monomial(const LaurentPoly& p);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace cominkl
