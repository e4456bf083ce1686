#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cominkl/coxeter.hpp"

namespace cominkl {

// Cartan data of type B_n or C_n on simple roots alpha_0..alpha_{n-1},
// where alpha_0 is the special root.
struct CartanData {
  Family family = Family::B;
  int rank = 1;

  // <alpha_j^vee, alpha_i>
  int pairing(int j, int i) const;
};

// Integer polynomial in the simple roots alpha_0..alpha_{n-1}.
class RootPoly {
 public:
  using Monomial = std::vector<int>;  // exponent of each alpha_i

  RootPoly() = default;
  static RootPoly constant(int rank, std::int64_t c);
  static RootPoly root(int rank, int i);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::int64_t constant_term() const;
  const std::map<Monomial, std::int64_t>& terms() const { return terms_; }

  RootPoly& operator+=(const RootPoly& o);
  RootPoly& operator-=(const RootPoly& o);
  RootPoly operator-() const;
  friend RootPoly operator+(RootPoly a, const RootPoly& b) { return a += b; }
  friend RootPoly operator-(RootPoly a, const RootPoly& b) { return a -= b; }
  friend RootPoly operator*(const RootPoly& a, const RootPoly& b);
  friend bool operator==(const RootPoly&, const RootPoly&) = default;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, std::int64_t c);
  int rank_ = 0;
  std::map<Monomial, std::int64_t> terms_;
};

// s_i acting on the root lattice: alpha_j -> alpha_j - <alpha_i^vee, alpha_j> alpha_i.
RootPoly reflect(const CartanData& c, const RootPoly& f, int i);
// (f - s_i f) / alpha_i; throws std::logic_error if the division is not exact.
RootPoly demazure(const CartanData& c, const RootPoly& f, int i);

// Local intersection scalar at (x \ E, ux): product over t in E of the
// value of the nil-Hecke word u_t on the product of its odd roots.
std::int64_t ll_scalar(CosetRep x, CosetRep E, Family f);
// Local intersection scalar at (x_{2n-i}, u x_i) for the quadric, n < i < 2n.
std::int64_t quadric_scalar(int n, int i, Family f);

}  // namespace cominkl
