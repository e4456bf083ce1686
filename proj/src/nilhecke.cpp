#include "cominkl/nilhecke.hpp"

#include <cstdlib>
#include <stdexcept>

#include "cominkl/cominuscule.hpp"
#include "cominkl/laurent.hpp"
#include "cominkl/parabolic.hpp"

namespace cominkl {

int CartanData::pairing(int j, int i) const {
  if (i < 0 || j < 0 || i >= rank || j >= rank) throw std::out_of_range("CartanData: index out of range");
  if (i == j) return 2;
  if (std::abs(i - j) != 1) return 0;
  if (j == 0 && i == 1) return family == Family::B ? -2 : -1;
  if (j == 1 && i == 0) return family == Family::B ? -1 : -2;
  return -1;
}

RootPoly RootPoly::constant(int rank, std::int64_t c) {
  RootPoly p;
  p.rank_ = rank;
  p.add_term(Monomial(rank, 0), c);
  return p;
}

RootPoly RootPoly::root(int rank, int i) {
  if (i < 0 || i >= rank) throw std::out_of_range("RootPoly::root: index out of range");
  RootPoly p;
  p.rank_ = rank;
  Monomial m(rank, 0);
  m[i] = 1;
  p.add_term(m, 1);
  return p;
}

void RootPoly::add_term(const Monomial& m, std::int64_t c) {
  if (c == 0) return;
  auto& slot = terms_[m];
  slot = checked_add(slot, c);
  if (slot == 0) terms_.erase(m);
}

bool RootPoly::is_constant() const {
  for (auto& [m, c] : terms_)
    for (int e : m)
      if (e != 0) return false;
  return true;
}

std::int64_t RootPoly::constant_term() const {
  auto it = terms_.find(Monomial(rank_, 0));
  return it == terms_.end() ? 0 : it->second;
}

namespace {

int common_rank(const RootPoly& a, const RootPoly& b) {
  if (a.rank() != 0 && b.rank() != 0 && a.rank() != b.rank()) throw std::invalid_argument("RootPoly: rank mismatch");
  return a.rank() != 0 ? a.rank() : b.rank();
}

}  // namespace

RootPoly& RootPoly::operator+=(const RootPoly& o) {
  rank_ = common_rank(*this, o);
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

RootPoly RootPoly::operator-() const {
  RootPoly r;
  r.rank_ = rank_;
  for (auto& [m, c] : terms_) r.terms_[m] = checked_mul(c, -1);
  return r;
}

RootPoly& RootPoly::operator-=(const RootPoly& o) { return *this += -o; }

RootPoly operator*(const RootPoly& a, const RootPoly& b) {
  RootPoly r;
  r.rank_ = common_rank(a, b);
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) {
      RootPoly::Monomial m(r.rank_, 0);
      for (int i = 0; i < r.rank_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, checked_mul(ca, cb));
    }
  return r;
}

std::string RootPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += std::to_string(c);
    for (int i = 0; i < rank_; ++i)
      if (m[i] > 0) s += "*a" + std::to_string(i) + (m[i] > 1 ? "^" + std::to_string(m[i]) : "");
  }
  return s;
}

RootPoly reflect(const CartanData& c, const RootPoly& f, int i) {
  int n = c.rank;
  if (f.rank() != 0 && f.rank() != n) throw std::invalid_argument("reflect: rank mismatch");
  // images of the generators
  std::vector<RootPoly> img;
  for (int j = 0; j < n; ++j)
    img.push_back(RootPoly::root(n, j) - RootPoly::constant(n, c.pairing(i, j)) * RootPoly::root(n, i));
  RootPoly out = RootPoly::constant(n, 0);
  for (auto& [m, coef] : f.terms()) {
    RootPoly term = RootPoly::constant(n, coef);
    for (int j = 0; j < n; ++j)
      for (int e = 0; e < m[j]; ++e) term = term * img[j];
    out += term;
  }
  return out;
}

RootPoly demazure(const CartanData& c, const RootPoly& f, int i) {
  RootPoly g = f - reflect(c, f, i);
  RootPoly out = RootPoly::constant(c.rank, 0);
  for (auto& [m, coef] : g.terms()) {
    if (m[i] == 0) throw std::logic_error("demazure: division by alpha_" + std::to_string(i) + " is not exact");
    RootPoly::Monomial q = m;
    --q[i];
    RootPoly t = RootPoly::constant(c.rank, coef);
    for (int j = 0; j < c.rank; ++j)
      for (int e = 0; e < q[j]; ++e) t = t * RootPoly::root(c.rank, j);
    out += t;
  }
  return out;
}

namespace {

// Odd letters of u_t give the barbell product; the even letters act as
// Demazure operators, the last one first.
std::int64_t segment_scalar(const CartanData& c, const Word& u) {
  RootPoly f = RootPoly::constant(c.rank, 1);
  Word even;
  for (int s : u) {
    if (s % 2 == 1)
      f = f * RootPoly::root(c.rank, s);
    else
      even.push_back(s);
  }
  for (auto it = even.rbegin(); it != even.rend(); ++it) f = demazure(c, f, *it);
  if (!f.is_constant()) throw std::logic_error("segment scalar is not a constant: " + f.to_string());
  return f.constant_term();
}

}  // namespace

std::int64_t ll_scalar(CosetRep x, CosetRep E, Family f) {
  if (f == Family::A) throw std::invalid_argument("ll_scalar needs type B or C");
  auto d = segment_decomposition(x, E);
  CartanData c{f, std::max(1, x.max_element())};
  std::int64_t total = 1;
  for (int t : E.elements()) total = checked_mul(total, segment_scalar(c, d.u_word(t)));
  return total;
}

std::int64_t quadric_scalar(int n, int i, Family f) {
  if (f == Family::A) throw std::invalid_argument("quadric_scalar needs type B or C");
  if (n < 2 || i <= n || i >= 2 * n) throw std::invalid_argument("quadric_scalar: need n < i < 2n");
  Quotient q = Quotient::quadric(f, n);
  Word w = reduced_word(q.type(), q.to_group(static_cast<std::uint64_t>(i)));
  // The defect-0 stroll to x_{2n-i}: Up1 ... Up1, Up0 at s_0, Down1 ..., Down0.
  std::vector<int> bits(w.size(), 1);
  std::size_t zero_pos = static_cast<std::size_t>(n - 1);
  bits[zero_pos] = 0;
  bits.back() = 0;
  Stroll st = make_stroll(q, w, bits);
  if (w[zero_pos] != 0 || !st.parabolic || st.defect != 0 || st.end != static_cast<std::uint64_t>(2 * n - i))
    throw std::logic_error("quadric_scalar: unexpected stroll shape");
  CartanData c{f, n};
  RootPoly p = RootPoly::root(n, 0);
  for (std::size_t k = zero_pos + 1; k + 1 < w.size(); ++k) {
    if (st.arrows[k] != Arrow::Down) throw std::logic_error("quadric_scalar: expected a descent");
    p = -reflect(c, p, w[k]);
  }
  p = demazure(c, p, w.back());
  if (!p.is_constant()) throw std::logic_error("quadric_scalar: result is not a constant");
  return p.constant_term();
}

}  // namespace cominkl
