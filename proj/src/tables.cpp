#include "cominkl/tables.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <json.hpp>
#include <set>
#include <stdexcept>
#include <thread>

#include "cominkl/cominuscule.hpp"
#include "cominkl/hecke.hpp"
#include "cominkl/nilhecke.hpp"

namespace cominkl {

int max_table_rank() {
  if (const char* env = std::getenv("COMINKL_MAX_RANK")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 62) throw std::invalid_argument("COMINKL_MAX_RANK must be an integer in 1..62");
    return static_cast<int>(v);
  }
  return 12;
}

void validate(const RunConfig& cfg) {
  if (cfg.family == Family::A) throw std::invalid_argument("tables need type B or C");
  if (cfg.mode != "cominuscule" && cfg.mode != "quadric" && cfg.mode != "spherical")
    throw std::invalid_argument("unknown mode '" + cfg.mode + "'");
  if (cfg.basis != "kl" && cfg.basis != "pkl" && cfg.basis != "bs")
    throw std::invalid_argument("unknown basis '" + cfg.basis + "'");
  check_characteristic(cfg.p);
  if (cfg.jobs < 1) throw std::invalid_argument("--jobs must be positive");
  int cap = max_table_rank();
  if (cfg.mode == "quadric") {
    cap = kMaxDegree;
    if (cfg.rank < 2) throw std::invalid_argument("quadric mode needs rank >= 2");
  }
  if (cfg.rank < 1 || cfg.rank > cap)
    throw std::invalid_argument("rank " + std::to_string(cfg.rank) + " outside 1.." + std::to_string(cap) +
                                " (set COMINKL_MAX_RANK to raise the cap)");
  if (cfg.mode == "spherical" && cfg.basis == "pkl" && cfg.p == 2 && cfg.family != Family::C)
    throw std::invalid_argument("spherical characteristic-2 basis is only available in type C");
}

LaurentPoly Matrix::entry(std::size_t row, std::size_t col) const { return coeff_of(columns.at(col), order.at(row)); }

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& f) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < count; i = next++) f(i);
    } catch (...) {
      std::lock_guard lk(err_mu);
      if (!err) err = std::current_exception();
      next = count;
    }
  };
  std::vector<std::thread> pool;
  int n = static_cast<int>(std::min<std::size_t>(count, static_cast<std::size_t>(jobs)));
  for (int k = 0; k < n; ++k) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

Matrix build_matrix(const RunConfig& cfg) {
  validate(cfg);
  Matrix m;
  m.cfg = cfg;
  bool quadric = cfg.mode == "quadric";
  Quotient q = quadric ? Quotient::quadric(cfg.family, cfg.rank) : Quotient::cominuscule(cfg.family, cfg.rank);
  ModuleKind kind = cfg.mode == "spherical" ? ModuleKind::Spherical : ModuleKind::Antispherical;
  m.order = q.elements();
  for (auto x : m.order) m.labels.push_back(q.label(x));
  m.columns.resize(m.order.size());

  auto word_of = [&](std::uint64_t x) {
    return quadric ? reduced_word(q.type(), q.to_group(x)) : column_word(CosetRep{x});
  };
  bool use_bs = cfg.basis == "bs";
  if (cfg.basis == "pkl" && cfg.p == 2) {
    if (cfg.mode == "spherical") {
      m.experimental = true;
      auto two = spherical_two_kl(cfg.rank);
      for (auto& v : two.violations) m.warnings.push_back(v);
      for (std::size_t c = 0; c < m.order.size(); ++c) m.columns[c] = two.table.at(m.order[c]);
      return m;
    }
    // both closed forms agree with the Bott-Samelson element on these quotients
    use_bs = cfg.family == (quadric ? Family::C : Family::B);
  }
  if (use_bs) {
    parallel_for(m.order.size(), cfg.jobs,
                 [&](std::size_t c) { m.columns[c] = bott_samelson(q, kind, word_of(m.order[c])); });
    return m;
  }
  KLTable table(q, kind);
  for (std::size_t c = 0; c < m.order.size(); ++c) m.columns[c] = table[m.order[c]];
  return m;
}

namespace {

const char* mode_family(const RunConfig& c) { return c.family == Family::B ? "B" : "C"; }

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

void write_csv(std::ostream& os, const Matrix& m) {
  os << "y\\x";
  for (auto& l : m.labels) os << ',' << csv_quote(l);
  os << '\n';
  for (std::size_t r = 0; r < m.order.size(); ++r) {
    os << csv_quote(m.labels[r]);
    for (std::size_t c = 0; c < m.order.size(); ++c) {
      os << ',';
      LaurentPoly p = m.entry(r, c);
      if (!p.is_zero()) os << p.to_string();
    }
    os << '\n';
  }
}

void write_json(std::ostream& os, const Matrix& m) {
  nlohmann::ordered_json j;
  j["meta"] = {{"type", mode_family(m.cfg)},
               {"mode", m.cfg.mode},
               {"rank", m.cfg.rank},
               {"p", m.cfg.p},
               {"basis", m.cfg.basis},
               {"experimental", m.experimental}};
  j["order"] = m.labels;
  auto entries = nlohmann::ordered_json::array();
  std::map<std::uint64_t, std::size_t> pos;
  for (std::size_t i = 0; i < m.order.size(); ++i) pos[m.order[i]] = i;
  for (std::size_t c = 0; c < m.order.size(); ++c)
    for (auto& [y, p] : m.columns[c]) entries.push_back({pos.at(y), c, p.to_string()});
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return std::make_pair(a[0].template get<std::size_t>(), a[1].template get<std::size_t>()) <
           std::make_pair(b[0].template get<std::size_t>(), b[1].template get<std::size_t>());
  });
  j["entries"] = entries;
  if (!m.warnings.empty()) j["warnings"] = m.warnings;
  os << j.dump() << '\n';
}

Rgb cell_color(const LaurentPoly& p, bool* non_monomial) {
  if (non_monomial) *non_monomial = false;
  if (p.is_zero()) return {255, 255, 255};
  MonomialInfo info = is_monic_monomial(p);
  if (!info.monic) {
    if (non_monomial) *non_monomial = true;
    return {255, 0, 0};
  }
  int k = std::clamp(info.exponent, 0, 5);
  return {static_cast<std::uint8_t>(230 - 36 * k), static_cast<std::uint8_t>(235 - 30 * k), 255};
}

std::size_t write_ppm(std::ostream& os, const Matrix& m) {
  std::size_t n = m.order.size();
  os << "P6\n" << n << ' ' << n << "\n255\n";
  std::vector<char> row(3 * n);
  std::size_t bad = 0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      bool nm = false;
      Rgb px = cell_color(m.entry(r, c), &nm);
      bad += nm;
      row[3 * c] = static_cast<char>(px.r);
      row[3 * c + 1] = static_cast<char>(px.g);
      row[3 * c + 2] = static_cast<char>(px.b);
    }
    os.write(row.data(), static_cast<std::streamsize>(row.size()));
  }
  return bad;
}

std::size_t write_svg(std::ostream& os, const Matrix& m) {
  std::size_t n = m.order.size();
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << n << "\" height=\"" << n << "\" viewBox=\"0 0 " << n
     << ' ' << n << "\" shape-rendering=\"crispEdges\">\n";
  os << "<rect width=\"" << n << "\" height=\"" << n << "\" fill=\"#ffffff\"/>\n";
  std::map<std::uint64_t, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[m.order[i]] = i;
  std::size_t bad = 0;
  for (std::size_t c = 0; c < n; ++c)
    for (auto& [y, p] : m.columns[c]) {
      bool nm = false;
      Rgb px = cell_color(p, &nm);
      bad += nm;
      char hex[8];
      std::snprintf(hex, sizeof hex, "#%02x%02x%02x", px.r, px.g, px.b);
      os << "<rect x=\"" << c << "\" y=\"" << pos.at(y) << "\" width=\"1\" height=\"1\" fill=\"" << hex << "\"/>\n";
    }
  os << "</svg>\n";
  return bad;
}

void SuiteResult::fail(std::string msg) {
  passed = false;
  if (failures.size() < 10) failures.push_back(std::move(msg));
}

namespace {

using Clock = std::chrono::steady_clock;

std::vector<CosetRep> all_sets(int n) {
  std::vector<CosetRep> out;
  for (std::uint64_t m = 0; m < (1ull << n); ++m) out.push_back(CosetRep{m});
  return out;
}

bool all_monic(const ModuleElt& m) {
  for (auto& [y, p] : m)
    if (!is_monic_monomial(p).monic) return false;
  return true;
}

struct Range {
  int lo, hi;
};

void suite_bs_decomp(SuiteResult& r, Range R, int jobs) {
  for (Family f : {Family::B})
    for (int n = R.lo; n <= R.hi; ++n) {
      Quotient q = Quotient::cominuscule(f, n);
      KLTable t(q, ModuleKind::Antispherical);
      auto xs = all_sets(n);
      std::vector<std::string> errs(xs.size());
      parallel_for(xs.size(), jobs, [&](std::size_t i) {
        CosetRep x = xs[i];
        ModuleElt expect;
        for (auto y : bs_support(x)) expect[y.mask] = LaurentPoly(1);
        for (const Word& w : {column_word(x), row_word(x)}) {
          auto got = expand_in_kl(t, bott_samelson(q, ModuleKind::Antispherical, w));
          if (got != expect) errs[i] = std::string(1, family_letter(f)) + std::to_string(n) + " x=" + x.to_string();
        }
      });
      for (auto& e : errs) {
        ++r.checked;
        if (!e.empty()) r.fail("bs decomposition differs at " + e);
      }
    }
}

void suite_defect(SuiteResult& r, Range R) {
  for (Family f : {Family::B, Family::C})
    for (int n = R.lo; n <= R.hi; ++n) {
      Quotient q = Quotient::cominuscule(f, n);
      for (auto x : all_sets(n)) {
        Word w = column_word(x);
        if (w.size() > 15) continue;
        ++r.checked;
        if (defect_expand(q, w) != bott_samelson(q, ModuleKind::Antispherical, w))
          r.fail("defect formula differs for " + x.to_string());
      }
    }
}

void suite_ls(SuiteResult& r, Range R) {
  for (Family f : {Family::B, Family::C})
    for (int n = R.lo; n <= R.hi; ++n) {
      KLTable t(Quotient::cominuscule(f, n), ModuleKind::Antispherical);
      for (auto x : all_sets(n)) {
        ++r.checked;
        if (ls_d(x, n) != t[x.mask]) r.fail(std::string(1, family_letter(f)) + std::to_string(n) + " x=" + x.to_string());
      }
    }
}

void suite_monomial(SuiteResult& r, Range R, int jobs) {
  for (Family f : {Family::B, Family::C})
    for (int n = R.lo; n <= R.hi; ++n) {
      Quotient q = Quotient::cominuscule(f, n);
      KLTable t(q, ModuleKind::Antispherical);
      auto xs = all_sets(n);
      std::vector<std::string> errs(xs.size());
      parallel_for(xs.size(), jobs, [&](std::size_t i) {
        CosetRep x = xs[i];
        std::string tag = std::string(1, family_letter(f)) + std::to_string(n) + " x=" + x.to_string();
        if (!all_monic(t[x.mask])) errs[i] = "d_x " + tag;
        if (!all_monic(antispherical_pkl(t, x, 2))) errs[i] = "2d_x " + tag;
        if (!all_monic(bott_samelson(q, ModuleKind::Antispherical, column_word(x)))) errs[i] = "d_ux " + tag;
      });
      for (auto& e : errs) {
        ++r.checked;
        if (!e.empty()) r.fail("non-monomial coefficient in " + e);
      }
    }
}

void suite_scalars(SuiteResult& r, Range R) {
  for (int n = R.lo; n <= R.hi; ++n)
    for (auto x : all_sets(n)) {
      ESet E = e_set(x);
      std::uint64_t sub = E.mask;
      while (true) {
        ESet S{sub};
        std::int64_t sign = (S.length() / 2) % 2 == 0 ? 1 : -1;
        r.checked += 2;
        if (ll_scalar(x, S, Family::B) != (sign << S.size()))
          r.fail("type B scalar at x=" + x.to_string() + " E=" + S.to_string());
        if (ll_scalar(x, S, Family::C) != sign) r.fail("type C scalar at x=" + x.to_string() + " E=" + S.to_string());
        if (sub == 0) break;
        sub = (sub - 1) & E.mask;
      }
    }
  for (int n = std::max(2, R.lo); n <= R.hi; ++n)
    for (int i = n + 1; i < 2 * n; ++i) {
      std::int64_t sign = (i - n) % 2 == 0 ? 1 : -1;
      r.checked += 2;
      if (quadric_scalar(n, i, Family::C) != 2 * sign) r.fail("type C quadric scalar n=" + std::to_string(n) + " i=" + std::to_string(i));
      if (quadric_scalar(n, i, Family::B) != sign) r.fail("type B quadric scalar n=" + std::to_string(n) + " i=" + std::to_string(i));
    }
}

void suite_growth(SuiteResult& r, Range R) {
  for (int n = R.lo; n <= R.hi; ++n) {
    CosetRep top{(1ull << n) - 1};
    r.checked += 2;
    if (e_set(top).size() != n / 2) r.fail("|E| wrong for n=" + std::to_string(n));
    if (bs_support(top).size() != (1ull << (n / 2))) r.fail("support size wrong for n=" + std::to_string(n));
  }
}

void suite_idempotents(SuiteResult& r, Range R) {
  for (Family f : {Family::B, Family::C})
    for (int n = R.lo; n <= R.hi; ++n)
      for (auto x : all_sets(n)) {
        EndoElt e = idempotent(x, f);
        ++r.checked;
        std::string tag = std::string(1, family_letter(f)) + " x=" + x.to_string();
        if (endo_multiply(e, e, f) != e) r.fail("e*e != e for " + tag);
        for (int t : e_set(x).elements()) {
          EndoElt phi{{CosetRep::from_elements({t}), Rational(1)}};
          if (!endo_multiply(phi, e, f).empty()) r.fail("phi_t e != 0 for " + tag);
        }
        if (idempotent_product_form(x, f) != e) r.fail("product form differs for " + tag);
      }
}

void suite_quadrics(SuiteResult& r, Range R) {
  for (Family f : {Family::B, Family::C})
    for (int n = std::max(2, R.lo); n <= R.hi; ++n) {
      Quotient q = Quotient::quadric(f, n);
      KLTable t(q, ModuleKind::Antispherical);
      for (int i = 0; i < 2 * n; ++i) {
        ++r.checked;
        std::string tag = std::string(1, family_letter(f)) + std::to_string(n) + " i=" + std::to_string(i);
        Word w = reduced_word(q.type(), q.to_group(i));
        ModuleElt bs = bott_samelson(q, ModuleKind::Antispherical, w);
        if (bs != quadric_bs(n, i)) r.fail("quadric_bs differs from bott_samelson at " + tag);
        ModuleElt expect = delta(i);
        if (i > n) expect[2 * n - i] = LaurentPoly(1);
        if (expand_in_kl(t, bs) != expect) r.fail("KL expansion wrong at " + tag);
        ModuleElt d = delta(i);
        if (i > 0) d[i - 1] = LaurentPoly::v(1);
        if (t[i] != d) r.fail("d_x wrong at " + tag);
      }
    }
}

void suite_spherical(SuiteResult& r, Range R) {
  for (int n = R.lo; n <= R.hi; ++n) {
    Quotient q = Quotient::cominuscule(Family::C, n);
    KLTable c(q, ModuleKind::Spherical);
    ModuleBar bar(q, ModuleKind::Spherical);
    auto two = spherical_two_kl(n);
    for (auto& v : two.violations) r.fail("n=" + std::to_string(n) + ": " + v);
    for (auto x : all_sets(n)) {
      ++r.checked;
      const ModuleElt& b = two.table.at(x.mask);
      std::string tag = "n=" + std::to_string(n) + " x=" + x.to_string();
      if (coeff_of(b, x.mask) != LaurentPoly(1)) r.fail("leading term wrong at " + tag);
      if (bar(b) != b) r.fail("not bar invariant at " + tag);
      if ((x.mask & (x.mask + 1)) == 0 && b != c[x.mask]) r.fail("base case differs from c_x at " + tag);
      for (auto& [y, p] : b)
        if (y != x.mask && (!bruhat_leq(CosetRep{y}, x) || !p.has_nonnegative_coeffs()))
          r.fail("coefficient condition fails at " + tag);
      ModuleElt diff = b;
      add_scaled(diff, c[x.mask], LaurentPoly(-1));
      for (auto& [y, p] : expand_in_kl(c, diff))
        if (!p.has_nonnegative_coeffs()) r.fail("difference to c_x not positive at " + tag);
    }
  }
}

void suite_hexagon(SuiteResult& r) {
  CoxeterType a7{Family::A, 7};
  Word hex{5, 6, 7, 3, 4, 5, 6, 2, 3, 4, 5, 1, 2, 3};
  Word w{2, 3, 2, 5, 6, 5};
  r.checked = 1;
  if (!is_reduced(a7, hex) || !is_reduced(a7, w)) {
    r.fail("hexagon words are not reduced");
    return;
  }
  GroupElement gh = evaluate_word(a7, hex);
  HeckeKLTable t(a7, gh);
  HeckeElt lhs = bs_product(a7, hex);
  HeckeElt rhs = t.b(gh);
  add_scaled(rhs, t.b(evaluate_word(a7, w)), LaurentPoly(1));
  if (lhs != rhs) r.fail("b_hex-word != b_hex + b_w");
}

void suite_figures(SuiteResult& r, int n, int jobs) {
  RunConfig cfg;
  cfg.family = Family::B;
  cfg.rank = n;
  cfg.basis = "pkl";
  cfg.jobs = jobs;
  cfg.p = 0;
  Matrix m0 = build_matrix(cfg);
  cfg.p = 2;
  Matrix m2 = build_matrix(cfg);
  std::size_t side = std::size_t{1} << n;
  r.checked = 2;
  if (m0.order.size() != side || m2.order.size() != side) r.fail("figure size wrong");
  bool strict = false;
  for (std::size_t c = 0; c < side; ++c) {
    for (auto& [y, p] : m0.columns[c])
      if (m2.columns[c].count(y) == 0) r.fail("p=0 support not contained in p=2 support");
    for (const Matrix* m : {&m0, &m2})
      for (auto& [y, p] : m->columns[c]) {
        auto info = is_monic_monomial(p);
        if (!info.monic || info.exponent < 0 || info.exponent > 5) r.fail("cell outside the v^0..v^5 palette");
      }
    if (m2.columns[c].size() > m0.columns[c].size()) strict = true;
  }
  if (!strict) r.fail("p=2 support equals p=0 support");
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"bs-decomp",  "defect-formula", "ls-closed-form", "monomial", "intersection-scalars", "exp-growth",
          "idempotents", "quadrics",      "spherical",      "hexagon",  "figures"};
}

SuiteResult run_suite(const std::string& name, int rank, int jobs) {
  SuiteResult r;
  r.name = name;
  auto start = Clock::now();
  auto pick = [&](int def) { return rank > 0 ? Range{rank, rank} : Range{1, def}; };
  if (name == "bs-decomp")
    suite_bs_decomp(r, pick(9), jobs);
  else if (name == "defect-formula")
    suite_defect(r, pick(5));
  else if (name == "ls-closed-form")
    suite_ls(r, pick(8));
  else if (name == "monomial")
    suite_monomial(r, pick(9), jobs);
  else if (name == "intersection-scalars")
    suite_scalars(r, pick(7));
  else if (name == "exp-growth")
    suite_growth(r, pick(12));
  else if (name == "idempotents")
    suite_idempotents(r, pick(9));
  else if (name == "quadrics")
    suite_quadrics(r, pick(12));
  else if (name == "spherical")
    suite_spherical(r, pick(7));
  else if (name == "hexagon")
    suite_hexagon(r);
  else if (name == "figures")
    suite_figures(r, rank > 0 ? rank : 9, jobs);
  else
    throw std::invalid_argument("unknown suite '" + name + "'");
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

}  // namespace cominkl
