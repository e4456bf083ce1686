#include "cominkl/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cominkl {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly: coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly: coefficient overflow");
  return r;
}

LaurentPoly::LaurentPoly(std::int64_t constant) {
  if (constant != 0) c_.push_back(constant);
}

LaurentPoly LaurentPoly::monomial(std::int64_t coef, int exp) {
  LaurentPoly p;
  if (coef != 0) {
    p.lo_ = exp;
    p.c_.push_back(coef);
  }
  return p;
}

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < c_.size() && c_[first] == 0) ++first;
  if (first == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  std::size_t last = c_.size();
  while (c_[last - 1] == 0) --last;
  if (first > 0 || last < c_.size()) {
    c_ = std::vector<std::int64_t>(c_.begin() + first, c_.begin() + last);
    lo_ += static_cast<int>(first);
  }
}

int LaurentPoly::min_degree() const {
  if (is_zero()) throw std::domain_error("min_degree of zero polynomial");
  return lo_;
}

int LaurentPoly::max_degree() const {
  if (is_zero()) throw std::domain_error("max_degree of zero polynomial");
  return lo_ + static_cast<int>(c_.size()) - 1;
}

std::int64_t LaurentPoly::coeff(int exp) const {
  if (exp < lo_ || exp >= lo_ + static_cast<int>(c_.size())) return 0;
  return c_[exp - lo_];
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](auto x) { return x != 0; }));
}

std::vector<std::pair<int, std::int64_t>> LaurentPoly::terms() const {
  std::vector<std::pair<int, std::int64_t>> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out.emplace_back(lo_ + static_cast<int>(i), c_[i]);
  return out;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  if (is_zero()) return r;
  r.c_.assign(c_.rbegin(), c_.rend());
  r.lo_ = -max_degree();
  return r;
}

bool LaurentPoly::has_nonnegative_coeffs() const {
  return std::all_of(c_.begin(), c_.end(), [](auto x) { return x >= 0; });
}

LaurentPoly LaurentPoly::negative_part() const {
  LaurentPoly r;
  for (auto [e, c] : terms())
    if (e < 0) r += monomial(c, e);
  return r;
}

LaurentPoly LaurentPoly::positive_part() const {
  LaurentPoly r;
  for (auto [e, c] : terms())
    if (e > 0) r += monomial(c, e);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(lo_, o.lo_);
  int hi = std::max(max_degree(), o.max_degree());
  std::vector<std::int64_t> r(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[lo_ - lo + i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    auto& slot = r[o.lo_ - lo + i];
    slot = checked_add(slot, o.c_[i]);
  }
  lo_ = lo;
  c_ = std::move(r);
  trim();
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& x : r.c_) x = checked_mul(x, -1);
  return r;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.lo_ = a.lo_ + b.lo_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      r.c_[i + j] = checked_add(r.c_[i + j], checked_mul(a.c_[i], b.c_[j]));
  }
  r.trim();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.lo_ += k;
  return r;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto [e, c] : terms()) {
    std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "v^" + std::to_string(e);
  }
  return out;
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;
  void skip() {
    while (i < s.size() && s[i] == ' ') ++i;
  }
  bool eat(char ch) {
    skip();
    if (i < s.size() && s[i] == ch) {
      ++i;
      return true;
    }
    return false;
  }
  bool done() {
    skip();
    return i == s.size();
  }
  [[noreturn]] void fail() const {
    throw std::invalid_argument("cannot parse Laurent polynomial: '" + std::string(s) + "'");
  }
  long long number() {
    skip();
    bool neg = false;
    if (i < s.size() && s[i] == '-') {
      neg = true;
      ++i;
    }
    std::size_t start = i;
    long long x = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      x = checked_add(checked_mul(x, 10), s[i] - '0');
      ++i;
    }
    if (i == start) fail();
    return neg ? -x : x;
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  Cursor cur{text};
  LaurentPoly r;
  if (cur.done()) cur.fail();
  std::int64_t sign = 1;
  if (cur.eat('-')) sign = -1;
  while (true) {
    cur.skip();
    std::int64_t coef = 1;
    int exp = 0;
    bool have_coef = cur.i < text.size() && std::isdigit(static_cast<unsigned char>(text[cur.i]));
    if (have_coef) coef = cur.number();
    if (!have_coef || cur.eat('*')) {
      if (!cur.eat('v') || !cur.eat('^')) cur.fail();
      exp = static_cast<int>(cur.number());
    }
    r += monomial(checked_mul(sign, coef), exp);
    if (cur.done()) break;
    if (cur.eat('+'))
      sign = 1;
    else if (cur.eat('-'))
      sign = -1;
    else
      cur.fail();
  }
  return r;
}

MonomialInfo is_monic_monomial(const LaurentPoly& p) {
  MonomialInfo info;
  if (p.is_zero()) {
    info.zero = true;
    return info;
  }
  auto t = p.terms();
  if (t.size() == 1 && t[0].second == 1) {
    info.monic = true;
    info.exponent = t[0].first;
  }
  return info;
}

}  // namespace cominkl
