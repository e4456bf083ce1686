#include "cominkl/cominuscule.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cominkl {

ESet e_set(CosetRep x) {
  auto rows = x.elements();
  ESet E;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    int t = rows[i];
    if (t % 2 != 0) continue;
    bool ok = true;
    for (int j = 1; j <= t / 2 && ok; ++j) {
      std::size_t k = i + static_cast<std::size_t>(j);
      ok = k < rows.size() && t - rows[k] <= 2 * j - 1;
    }
    if (ok) E.mask |= 1ull << (t - 1);
  }
  return E;
}

Word one_two_one_word(int t) {
  if (t < 2 || t % 2 != 0) throw std::invalid_argument("one_two_one_word: t must be even and >= 2");
  Word w;
  for (int k = t - 1; k >= 1; k -= 2) w.push_back(k);
  for (int k = t - 2; k >= 0; k -= 2) w.push_back(k);
  return w;
}

Word SegmentDecomposition::u_word(int t) const {
  Word w;
  for (auto& s : segments)
    if (s.is_u && s.t == t) w.insert(w.end(), s.word.begin(), s.word.end());
  return w;
}

Word SegmentDecomposition::r_word() const {
  Word w;
  for (auto& s : segments)
    if (!s.is_u) w.insert(w.end(), s.word.begin(), s.word.end());
  return w;
}

namespace {

void require_subset_of_e(CosetRep x, ESet E) {
  if (!E.is_subset_of(e_set(x)))
    throw std::invalid_argument("E = " + E.to_string() + " is not contained in E(" + x.to_string() + ")");
}

}  // namespace

SegmentDecomposition segment_decomposition(CosetRep x, ESet E) {
  require_subset_of_e(x, E);
  auto rows = x.elements();
  int k = static_cast<int>(rows.size());
  // owner[r][entry] = t of the u-block covering that box, 0 for none
  std::vector<std::vector<int>> owner(k);
  for (int r = 0; r < k; ++r) owner[r].assign(rows[r], 0);
  auto claim = [&](int r, int entry, int t) {
    if (r >= k || entry < 0 || entry >= rows[r]) throw std::logic_error("u-block leaves the diagram");
    if (owner[r][entry] != 0) throw std::logic_error("u-blocks overlap");
    owner[r][entry] = t;
  };
  for (int r = 0; r < k; ++r) {
    int t = rows[r];
    if (!E.contains(t)) continue;
    claim(r, t - 1, t);
    for (int j = 1; j < t / 2; ++j) {
      claim(r + j, t - 2 * j - 1, t);
      claim(r + j, t - 2 * j, t);
    }
    claim(r + t / 2, 0, t);
  }
  SegmentDecomposition d;
  int max_col = 0;
  for (int r = 0; r < k; ++r) max_col = std::max(max_col, 2 * r + rows[r] - 1);
  for (int col = 0; col <= max_col; ++col)
    for (int r = 0; r < k; ++r) {
      int entry = col - 2 * r;
      if (entry < 0 || entry >= rows[r]) continue;
      int t = owner[r][entry];
      d.column_word.push_back(entry);
      d.bits.push_back(t == 0 ? 1 : 0);
      if (d.segments.empty() || d.segments.back().is_u != (t != 0) || d.segments.back().t != t)
        d.segments.push_back({t != 0, t, {}});
      d.segments.back().word.push_back(entry);
    }
  if (d.column_word != column_word(x)) throw std::logic_error("segment decomposition does not match column word");
  for (int t : E.elements())
    if (d.u_word(t) != one_two_one_word(t)) throw std::logic_error("u-block does not read as u_t");
  return d;
}

CosetRep removal(CosetRep x, ESet E) {
  require_subset_of_e(x, E);
  return set_difference(x, E);
}

Stroll stroll_for_E(const Quotient& q, CosetRep x, ESet E) {
  if (q.is_quadric()) throw std::invalid_argument("stroll_for_E needs a cominuscule quotient");
  auto d = segment_decomposition(x, E);
  Stroll st = make_stroll(q, d.column_word, d.bits);
  if (!st.parabolic) throw std::logic_error("stroll for E is not parabolic");
  if (st.defect != 0) throw std::logic_error("stroll for E has nonzero defect");
  for (std::size_t i = 0; i < st.bits.size(); ++i)
    if (st.arrows[i] == Arrow::Down && st.bits[i] == 1) throw std::logic_error("stroll for E has a (Down,1) step");
  if (st.end != set_difference(x, E).mask) throw std::logic_error("stroll for E ends at the wrong element");
  return st;
}

std::vector<CosetRep> bs_support(CosetRep x) {
  ESet E = e_set(x);
  std::vector<CosetRep> out;
  // iterate over all submasks of E
  std::uint64_t sub = E.mask;
  while (true) {
    out.push_back(set_difference(x, CosetRep{sub}));
    if (sub == 0) break;
    sub = (sub - 1) & E.mask;
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_characteristic(int p) {
  if (p == 0) return;
  if (p < 2) throw std::invalid_argument("characteristic must be 0 or a prime");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("characteristic must be 0 or a prime, got " + std::to_string(p));
}

ModuleElt antispherical_pkl(const KLTable& classical, CosetRep x, int p) {
  check_characteristic(p);
  const Quotient& q = classical.quotient();
  if (q.is_quadric() || classical.kind() != ModuleKind::Antispherical)
    throw std::invalid_argument("antispherical_pkl needs the antispherical cominuscule table");
  if (q.type().family == Family::B && p == 2) return bott_samelson(q, ModuleKind::Antispherical, column_word(x));
  return classical[x.mask];
}

PairMatching ls_matching(CosetRep x, int n) {
  if (x.max_element() > n) throw std::invalid_argument("ls_matching: " + x.to_string() + " not in [n]");
  PairMatching m;
  std::vector<bool> in(n + 1, false);
  for (int t : x.elements()) in[t] = true;
  if (x.size() % 2 == 1) in[0] = true;
  for (int k = 0; k <= n; ++k)
    if (in[k]) m.augmented.push_back(k);
  std::vector<bool> used(n + 1, false);
  for (int j = 0; j <= n; ++j) {
    if (in[j]) continue;
    int bal = 0;
    for (int i = j; i <= n; ++i) {
      bal += in[i] ? 1 : -1;
      if (bal == 0) {
        if (used[i]) throw std::logic_error("ls_matching: element matched twice");
        used[i] = used[j] = true;
        m.step1.emplace_back(i, j);
        break;
      }
    }
  }
  std::vector<int> rest;
  for (int k : m.augmented)
    if (!used[k]) rest.push_back(k);
  std::size_t i = 0;
  for (; i + 1 < rest.size(); i += 2) m.step2.emplace_back(rest[i + 1], rest[i]);
  if (i < rest.size()) m.unmatched.push_back(rest[i]);
  return m;
}

namespace {

// Images of x under every subset of the matched pairs, as (y, #pairs).
std::map<std::uint64_t, int> ls_images(CosetRep x, int n) {
  PairMatching m = ls_matching(x, n);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> moves;  // (remove, add) on bit k <-> element k
  for (auto [i, j] : m.step1) moves.emplace_back(1ull << i, 1ull << j);
  for (auto [i, j] : m.step2) moves.emplace_back((1ull << i) | (1ull << j), 0);
  std::uint64_t base = 0;
  for (int k : m.augmented) base |= 1ull << k;
  std::map<std::uint64_t, int> out;
  for (std::uint64_t sub = 0; sub < (1ull << moves.size()); ++sub) {
    std::uint64_t z = base;
    for (std::size_t k = 0; k < moves.size(); ++k)
      if ((sub >> k) & 1u) z = (z & ~moves[k].first) | moves[k].second;
    std::uint64_t y = z >> 1;  // drop the adjoined 0, shift to row-length bits
    int cnt = std::popcount(sub);
    auto it = out.find(y);
    if (it != out.end()) throw std::logic_error("ls_n: two pair subsets reach the same element");
    out[y] = cnt;
  }
  return out;
}

}  // namespace

LaurentPoly ls_n(CosetRep y, CosetRep x, int n) {
  auto img = ls_images(x, n);
  auto it = img.find(y.mask);
  return it == img.end() ? LaurentPoly() : LaurentPoly::v(it->second);
}

ModuleElt ls_d(CosetRep x, int n) {
  ModuleElt out;
  for (auto [y, k] : ls_images(x, n)) out[y] = LaurentPoly::v(k);
  return out;
}

ModuleElt quadric_bs(int n, int i) {
  if (n < 2) throw std::invalid_argument("quadric_bs: n must be >= 2");
  if (i < 0 || i >= 2 * n) throw std::invalid_argument("quadric_bs: i out of range");
  ModuleElt m = delta(i);
  if (i == 0) return m;
  m[i - 1] = LaurentPoly::v(1);
  if (i > n) {
    m[2 * n - i] = LaurentPoly(1);
    m[2 * n - i - 1] = LaurentPoly::v(1);
  }
  return m;
}

ModuleElt quadric_pkl(const KLTable& classical, int i, int p) {
  check_characteristic(p);
  const Quotient& q = classical.quotient();
  if (!q.is_quadric() || classical.kind() != ModuleKind::Antispherical)
    throw std::invalid_argument("quadric_pkl needs the antispherical quadric table");
  int n = q.type().rank;
  if (i < 0 || i >= 2 * n) throw std::invalid_argument("quadric_pkl: i out of range");
  if (q.type().family == Family::C && p == 2) return quadric_bs(n, i);
  return classical[static_cast<std::uint64_t>(i)];
}

std::pair<std::int64_t, ESet> endo_struct(ESet E, ESet F, Family f) {
  if (f == Family::A) throw std::invalid_argument("endo_struct needs type B or C");
  for (int t : set_union(E, F).elements())
    if (t % 2 != 0) throw std::invalid_argument("endo_struct: E sets must consist of even rows");
  ESet both = set_intersection(E, F);
  std::int64_t scalar = (both.length() / 2) % 2 == 0 ? 1 : -1;
  if (f == Family::B) scalar <<= both.size();
  return {scalar, set_union(E, F)};
}

EndoElt endo_multiply(const EndoElt& a, const EndoElt& b, Family f) {
  EndoElt out;
  for (auto& [E, ca] : a)
    for (auto& [F, cb] : b) {
      auto [scalar, G] = endo_struct(E, F, f);
      Rational& slot = out[G];
      slot += ca * cb * Rational(scalar);
      if (slot.numerator() == 0) out.erase(G);
    }
  return out;
}

EndoElt idempotent(CosetRep x, Family f) {
  ESet E = e_set(x);
  EndoElt out;
  std::uint64_t sub = E.mask;
  while (true) {
    ESet S{sub};
    std::int64_t sign = (S.length() / 2) % 2 == 0 ? 1 : -1;
    if (f == Family::B) {
      std::int64_t den = std::int64_t{1} << S.size();
      if (S.size() % 2 == 1) den = -den;
      out[S] = Rational(sign, den);
    } else {
      if (S.size() % 2 == 1) sign = -sign;
      out[S] = Rational(sign);
    }
    if (sub == 0) break;
    sub = (sub - 1) & E.mask;
  }
  return out;
}

EndoElt idempotent_product_form(CosetRep x, Family f) {
  EndoElt e{{ESet{}, Rational(1)}};
  for (int t : e_set(x).elements()) {
    ESet T = CosetRep::from_elements({t});
    // 1 - c_t phi_t where phi_t^2 = s_t phi_t; c_t = 1/s_t makes it idempotent
    Rational s = Rational(endo_struct(T, T, f).first);
    EndoElt factor{{ESet{}, Rational(1)}, {T, -Rational(1) / s}};
    e = endo_multiply(e, factor, f);
  }
  return e;
}

std::string endo_to_string(const EndoElt& e) {
  std::string s;
  for (auto& [E, c] : e) {
    if (!s.empty()) s += ", ";
    s += E.to_string() + ":" + std::to_string(c.numerator());
    if (c.denominator() != 1) s += "/" + std::to_string(c.denominator());
  }
  return "{" + s + "}";
}

bool in_f_set(CosetRep y, CosetRep x) {
  if (!y.is_subset_of(x)) return false;
  for (int i = 2; i <= 64; ++i)
    if (x.contains(i) && x.contains(i - 1) && !y.contains(i) && y.contains(i - 1)) return false;
  return true;
}

std::vector<CosetRep> f_set(CosetRep x) {
  std::vector<CosetRep> out;
  std::uint64_t sub = x.mask;
  while (true) {
    if (in_f_set(CosetRep{sub}, x)) out.push_back(CosetRep{sub});
    if (sub == 0) break;
    sub = (sub - 1) & x.mask;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool is_staircase(CosetRep x) { return (x.mask & (x.mask + 1)) == 0; }

}  // namespace

SphericalTwoKL spherical_two_kl(int n, DescentChoice choice) {
  Quotient q = Quotient::cominuscule(Family::C, n);
  KLTable classical(q, ModuleKind::Spherical);
  SphericalTwoKL out;
  for (std::uint64_t xm : q.elements()) {
    CosetRep x{xm};
    if (is_staircase(x)) {
      out.table[xm] = classical[xm];
      continue;
    }
    int s = -1;
    for (int i = 1; i < n; ++i) {
      if (q.act(xm, i).kind != StepKind::Down) continue;
      if (s == -1 || choice == DescentChoice::Largest) s = i;
    }
    if (s == -1) {
      out.violations.push_back("no descent with i > 0 for " + x.to_string());
      continue;
    }
    std::uint64_t y = q.act(xm, s).target;
    ModuleElt p = act_bs(q, ModuleKind::Spherical, out.table.at(y), s);
    // expand in {c_x} + {2c_z : z < x}, top term first
    if (!(coeff_of(p, xm) == LaurentPoly(1))) out.violations.push_back("leading coefficient not 1 for " + x.to_string());
    ModuleElt rest = p;
    add_scaled(rest, classical[xm], LaurentPoly(-1));
    while (!rest.empty()) {
      auto it = std::prev(rest.end());
      std::uint64_t z = it->first;
      LaurentPoly mu = it->second;
      auto found = out.table.find(z);
      if (z > xm || found == out.table.end()) {
        out.violations.push_back("term " + CosetRep{z}.to_string() + " out of range for " + x.to_string());
        break;
      }
      add_scaled(rest, found->second, -mu);
      if (in_f_set(CosetRep{z}, x)) continue;
      if (!bruhat_leq(CosetRep{z}, x))
        out.violations.push_back("correction term " + CosetRep{z}.to_string() + " not below " + x.to_string());
      add_scaled(p, found->second, -mu);
    }
    out.table[xm] = std::move(p);
  }
  return out;
}

}  // namespace cominkl
