#include "cominkl/parabolic.hpp"

#include <stdexcept>

namespace cominkl {

namespace {

constexpr int kMaxCominusculeRank = 62;

}  // namespace

Quotient Quotient::cominuscule(Family f, int n) {
  if (f == Family::A) throw std::invalid_argument("cominuscule quotient needs type B or C");
  if (n < 1 || n > kMaxCominusculeRank) throw std::invalid_argument("rank out of range");
  Quotient q;
  q.type_ = {f, n};
  return q;
}

Quotient Quotient::quadric(Family f, int n) {
  if (f == Family::A) throw std::invalid_argument("quadric quotient needs type B or C");
  if (n < 2) throw std::invalid_argument("quadric quotient needs rank >= 2");
  Quotient q;
  q.type_ = {f, n};
  q.type_.validate();
  q.quadric_ = true;
  auto par = quadric_parabolic(q.type_);
  std::vector<GroupElement> frontier{identity(q.type_)};
  q.index_[frontier[0]] = 0;
  q.reps_.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (auto& w : frontier)
      for (int s : q.type_.generators()) {
        auto ws = mul_right(q.type_, w, s);
        if (q.index_.count(ws) || !is_min_coset_rep(q.type_, ws, par)) continue;
        if (cominkl::length(q.type_, ws) <= cominkl::length(q.type_, w)) continue;
        q.index_[ws] = q.reps_.size();
        q.reps_.push_back(ws);
        next.push_back(ws);
      }
    frontier = std::move(next);
  }
  for (std::size_t i = 0; i < q.reps_.size(); ++i)
    if (cominkl::length(q.type_, q.reps_[i]) != static_cast<int>(i))
      throw std::logic_error("quadric quotient is not a chain");
  q.table_.resize(q.reps_.size());
  for (std::size_t i = 0; i < q.reps_.size(); ++i)
    for (int s : q.type_.generators()) {
      auto ws = mul_right(q.type_, q.reps_[i], s);
      auto it = q.index_.find(ws);
      if (it == q.index_.end())
        q.table_[i].push_back({StepKind::Exit, i});
      else
        q.table_[i].push_back({it->second > i ? StepKind::Up : StepKind::Down, it->second});
    }
  return q;
}

std::uint64_t Quotient::size() const { return quadric_ ? reps_.size() : (1ull << type_.rank); }

std::vector<std::uint64_t> Quotient::elements() const {
  std::vector<std::uint64_t> out(size());
  for (std::uint64_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

int Quotient::length(std::uint64_t x) const {
  return quadric_ ? static_cast<int>(x) : CosetRep{x}.length();
}

Step Quotient::act(std::uint64_t x, int s) const {
  if (!type_.is_generator(s)) throw std::invalid_argument("generator " + std::to_string(s) + " not in " + type_.name());
  if (x >= size()) throw std::out_of_range("element not in quotient");
  if (quadric_) return table_[x][s];
  CosetRep y = subset_action(CosetRep{x}, s);
  if (y.mask == x) return {StepKind::Exit, x};
  return {y.length() > CosetRep{x}.length() ? StepKind::Up : StepKind::Down, y.mask};
}

bool Quotient::leq(std::uint64_t y, std::uint64_t x) const {
  return quadric_ ? y <= x : bruhat_leq(CosetRep{y}, CosetRep{x});
}

std::string Quotient::label(std::uint64_t x) const {
  return quadric_ ? "x" + std::to_string(x) : CosetRep{x}.to_string();
}

int Quotient::recursion_descent(std::uint64_t x) const {
  if (x == 0) throw std::invalid_argument("identity has no descent");
  if (!quadric_) {
    auto rows = CosetRep{x}.elements();
    return rows.back() - 1;
  }
  for (int s : type_.generators())
    if (act(x, s).kind == StepKind::Down) return s;
  throw std::logic_error("no descent found");
}

std::optional<std::uint64_t> Quotient::from_group(const GroupElement& w) const {
  if (quadric_) {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  if (!is_min_coset_rep(type_, w, cominuscule_parabolic(type_))) return std::nullopt;
  return negative_positions(w).mask;
}

GroupElement Quotient::to_group(std::uint64_t x) const {
  if (quadric_) return reps_.at(x);
  return coset_rep_element(type_, CosetRep{x});
}

ModuleElt delta(std::uint64_t x) { return {{x, LaurentPoly(1)}}; }

void add_scaled(ModuleElt& a, const ModuleElt& b, const LaurentPoly& c) {
  if (c.is_zero()) return;
  for (auto& [x, p] : b) {
    auto& slot = a[x];
    slot += p * c;
    if (slot.is_zero()) a.erase(x);
  }
}

LaurentPoly coeff_of(const ModuleElt& a, std::uint64_t x) {
  auto it = a.find(x);
  return it == a.end() ? LaurentPoly() : it->second;
}

std::string module_to_string(const Quotient& q, const ModuleElt& a) {
  if (a.empty()) return "0";
  std::string s;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += "(" + it->second.to_string() + ")*" + q.label(it->first);
  }
  return s;
}

namespace {

void accumulate(ModuleElt& out, std::uint64_t x, const LaurentPoly& p) {
  if (p.is_zero()) return;
  auto& slot = out[x];
  slot += p;
  if (slot.is_zero()) out.erase(x);
}

}  // namespace

ModuleElt act_bs(const Quotient& q, ModuleKind kind, const ModuleElt& m, int s) {
  ModuleElt out;
  for (auto& [x, p] : m) {
    Step st = q.act(x, s);
    switch (st.kind) {
      case StepKind::Up:
        accumulate(out, st.target, p);
        accumulate(out, x, p.shifted(1));
        break;
      case StepKind::Down:
        accumulate(out, st.target, p);
        accumulate(out, x, p.shifted(-1));
        break;
      case StepKind::Exit:
        if (kind == ModuleKind::Spherical) accumulate(out, x, p.shifted(1) + p.shifted(-1));
        break;
    }
  }
  return out;
}

ModuleElt act_delta_s(const Quotient& q, ModuleKind kind, const ModuleElt& m, int s) {
  ModuleElt out;
  for (auto& [x, p] : m) {
    Step st = q.act(x, s);
    switch (st.kind) {
      case StepKind::Up:
        accumulate(out, st.target, p);
        break;
      case StepKind::Down:
        accumulate(out, st.target, p);
        accumulate(out, x, p.shifted(-1) - p.shifted(1));
        break;
      case StepKind::Exit:
        accumulate(out, x, kind == ModuleKind::Spherical ? p.shifted(-1) : -p.shifted(1));
        break;
    }
  }
  return out;
}

ModuleElt bott_samelson(const Quotient& q, ModuleKind kind, const Word& w) {
  ModuleElt m = delta(0);
  for (int s : w) m = act_bs(q, kind, m, s);
  return m;
}

ModuleBar::ModuleBar(const Quotient& q, ModuleKind kind) {
  bar_delta_[0] = delta(0);
  for (std::uint64_t x : q.elements()) {
    if (x == 0) continue;
    int s = q.recursion_descent(x);
    std::uint64_t y = q.act(x, s).target;
    // delta_s^{-1} = delta_s + (v - v^{-1})
    const ModuleElt& by = bar_delta_.at(y);
    ModuleElt r = act_delta_s(q, kind, by, s);
    add_scaled(r, by, LaurentPoly::v(1) - LaurentPoly::v(-1));
    bar_delta_[x] = std::move(r);
  }
}

ModuleElt ModuleBar::operator()(const ModuleElt& m) const {
  ModuleElt out;
  for (auto& [x, p] : m) add_scaled(out, bar_delta_.at(x), p.bar());
  return out;
}

KLTable::KLTable(const Quotient& q, ModuleKind kind) : q_(q), kind_(kind) {
  basis_[0] = delta(0);
  for (std::uint64_t x : q.elements()) {
    if (x == 0) continue;
    int s = q.recursion_descent(x);
    std::uint64_t y = q.act(x, s).target;
    ModuleElt p = act_bs(q, kind, basis_.at(y), s);
    if (coeff_of(p, x) != LaurentPoly(1)) throw std::logic_error("KL recursion: leading coefficient is not 1");
    std::uint64_t bound = x;
    while (true) {
      auto it = p.lower_bound(bound);
      if (it == p.begin()) break;
      --it;
      std::uint64_t z = it->first;
      if (!it->second.negative_part().is_zero()) throw std::logic_error("KL recursion: negative degree coefficient");
      std::int64_t c0 = it->second.coeff(0);
      if (c0 != 0) add_scaled(p, basis_.at(z), LaurentPoly(-c0));
      bound = z;
    }
    basis_[x] = std::move(p);
  }
}

ModuleElt expand_in_basis(const std::map<std::uint64_t, ModuleElt>& basis, ModuleElt m) {
  ModuleElt out;
  while (!m.empty()) {
    auto it = std::prev(m.end());
    std::uint64_t x = it->first;
    LaurentPoly c = it->second;
    auto b = basis.find(x);
    if (b == basis.end()) throw std::invalid_argument("expand: no basis element for id " + std::to_string(x));
    if (coeff_of(b->second, x) != LaurentPoly(1)) throw std::logic_error("expand: basis element is not unitriangular");
    out[x] = c;
    add_scaled(m, b->second, -c);
    if (m.count(x)) throw std::logic_error("expand: elimination failed");
  }
  return out;
}

ModuleElt expand_in_kl(const KLTable& t, const ModuleElt& m) { return expand_in_basis(t.basis(), m); }

std::string stroll_to_string(const Stroll& s) {
  std::string out;
  for (std::size_t i = 0; i < s.word.size(); ++i) {
    if (i) out += " ";
    out += s.arrows[i] == Arrow::Up ? "U" : "D";
    out += std::to_string(s.bits[i]);
  }
  return out;
}

Stroll make_stroll(const Quotient& q, const Word& w, const std::vector<int>& bits) {
  if (w.size() != bits.size()) throw std::invalid_argument("stroll: word and bits differ in length");
  const CoxeterType& t = q.type();
  Stroll st;
  st.word = w;
  st.bits = bits;
  st.parabolic = true;
  GroupElement g = identity(t);
  int len = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (bits[i] != 0 && bits[i] != 1) throw std::invalid_argument("stroll: bits must be 0 or 1");
    GroupElement gs = mul_right(t, g, w[i]);
    int ls = length(t, gs);
    Arrow a = ls > len ? Arrow::Up : Arrow::Down;
    st.arrows.push_back(a);
    if (st.parabolic && !q.from_group(gs)) st.parabolic = false;
    if (a == Arrow::Up && bits[i] == 0) ++st.defect;
    if (a == Arrow::Down && bits[i] == 0) --st.defect;
    if (bits[i] == 1) {
      g = gs;
      len = ls;
    }
  }
  if (st.parabolic) st.end = *q.from_group(g);
  return st;
}

std::vector<Stroll> enumerate_strolls(const Quotient& q, const Word& w) {
  if (w.size() > 24) throw std::invalid_argument("enumerate_strolls: word too long");
  std::vector<Stroll> out;
  for (std::uint64_t m = 0; m < (1ull << w.size()); ++m) {
    std::vector<int> bits(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) bits[i] = (m >> i) & 1u;
    out.push_back(make_stroll(q, w, bits));
  }
  return out;
}

namespace {

struct DefectSearch {
  const Quotient& q;
  const Word& w;
  ModuleElt out;

  void run(std::size_t i, const GroupElement& g, int len, int defect) {
    if (i == w.size()) {
      accumulate(out, *q.from_group(g), LaurentPoly::v(defect));
      return;
    }
    const CoxeterType& t = q.type();
    GroupElement gs = mul_right(t, g, w[i]);
    if (!q.from_group(gs)) return;
    int ls = length(t, gs);
    bool up = ls > len;
    run(i + 1, g, len, defect + (up ? 1 : -1));
    run(i + 1, gs, ls, defect);
  }
};

}  // namespace

ModuleElt defect_expand(const Quotient& q, const Word& w) {
  DefectSearch d{q, w, {}};
  d.run(0, identity(q.type()), 0, 0);
  return d.out;
}

}  // namespace cominkl
