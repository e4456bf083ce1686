#include "cominkl/hecke.hpp"

#include <stdexcept>

namespace cominkl {

HeckeElt hecke_delta(const GroupElement& w) { return {{w, LaurentPoly(1)}}; }

namespace {

void accumulate(HeckeElt& out, const GroupElement& w, const LaurentPoly& p) {
  if (p.is_zero()) return;
  auto& slot = out[w];
  slot += p;
  if (slot.is_zero()) out.erase(w);
}

}  // namespace

void add_scaled(HeckeElt& a, const HeckeElt& b, const LaurentPoly& c) {
  if (c.is_zero()) return;
  for (auto& [w, p] : b) accumulate(a, w, p * c);
}

LaurentPoly coeff_of(const HeckeElt& a, const GroupElement& w) {
  auto it = a.find(w);
  return it == a.end() ? LaurentPoly() : it->second;
}

std::string hecke_to_string(const HeckeElt& h) {
  if (h.empty()) return "0";
  std::string s;
  for (auto& [w, p] : h) {
    if (!s.empty()) s += " + ";
    s += "(" + p.to_string() + ")*" + element_to_string(w);
  }
  return s;
}

HeckeElt mul_delta_s(const CoxeterType& t, const HeckeElt& h, int s, Side side) {
  HeckeElt out;
  for (auto& [w, p] : h) {
    GroupElement ws = side == Side::Right ? mul_right(t, w, s) : mul_left(t, s, w);
    accumulate(out, ws, p);
    if (length(t, ws) < length(t, w)) accumulate(out, w, p.shifted(-1) - p.shifted(1));
  }
  return out;
}

HeckeElt mul_b_s(const CoxeterType& t, const HeckeElt& h, int s, Side side) {
  HeckeElt out = mul_delta_s(t, h, s, side);
  add_scaled(out, h, LaurentPoly::v(1));
  return out;
}

HeckeElt bs_product(const CoxeterType& t, const Word& w) {
  HeckeElt h = hecke_delta(identity(t));
  for (int s : w) h = mul_b_s(t, h, s);
  return h;
}

HeckeElt hecke_bar(const CoxeterType& t, const HeckeElt& h) {
  HeckeElt out;
  for (auto& [w, p] : h) {
    // bar(delta_w) = bar(delta_{s1}) ... bar(delta_{sk}), bar(delta_s) = delta_s + v - v^{-1}
    HeckeElt b = hecke_delta(identity(t));
    for (int s : reduced_word(t, w)) {
      HeckeElt next = mul_delta_s(t, b, s);
      add_scaled(next, b, LaurentPoly::v(1) - LaurentPoly::v(-1));
      b = std::move(next);
    }
    add_scaled(out, b, p.bar());
  }
  return out;
}

HeckeKLTable::HeckeKLTable(const CoxeterType& t, const GroupElement& w)
    : type_(t), elems_(bruhat_interval_below(t, w)) {
  basis_.resize(elems_.size());
  for (std::size_t i = 0; i < elems_.size(); ++i) pos_[elems_[i]] = i;
  std::vector<int> len(elems_.size());
  for (std::size_t i = 0; i < elems_.size(); ++i) len[i] = length(t, elems_[i]);
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    const GroupElement& x = elems_[i];
    if (len[i] == 0) {
      basis_[i] = hecke_delta(x);
      continue;
    }
    int s = -1;
    GroupElement y;
    for (int g : t.generators()) {
      y = mul_right(t, x, g);
      if (length(t, y) < len[i]) {
        s = g;
        break;
      }
    }
    HeckeElt p = mul_b_s(t, basis_[pos_.at(y)], s);
    // Eliminate constant terms from the top down, ordered by length.
    std::map<std::pair<int, GroupElement>, bool> todo;
    for (auto& [z, c] : p)
      if (!(z == x)) todo[{length(t, z), z}] = true;
    while (!todo.empty()) {
      auto it = std::prev(todo.end());
      GroupElement z = it->first.second;
      todo.erase(it);
      LaurentPoly c = coeff_of(p, z);
      if (!c.is_zero() && !c.negative_part().is_zero())
        throw std::logic_error("Hecke KL recursion: negative degree coefficient");
      std::int64_t c0 = c.coeff(0);
      if (c0 == 0) continue;
      const HeckeElt& bz = basis_[pos_.at(z)];
      for (auto& [u, q] : bz) {
        accumulate(p, u, q * LaurentPoly(-c0));
        if (!(u == z)) todo[{length(t, u), u}] = true;
      }
    }
    basis_[i] = std::move(p);
  }
}

const HeckeElt& HeckeKLTable::b(const GroupElement& x) const {
  auto it = pos_.find(x);
  if (it == pos_.end()) throw std::out_of_range("element not in KL table interval");
  return basis_[it->second];
}

HeckeElt kl_b(const CoxeterType& t, const GroupElement& w) { return HeckeKLTable(t, w).b(w); }

HeckeElt expand_in_kl(const HeckeKLTable& table, const HeckeElt& h) {
  HeckeElt r = h;
  HeckeElt out;
  while (!r.empty()) {
    GroupElement top;
    int best = -1;
    for (auto& [w, p] : r) {
      int l = length(table.type(), w);
      if (l > best) {
        best = l;
        top = w;
      }
    }
    LaurentPoly c = r.at(top);
    out[top] = c;
    add_scaled(r, table.b(top), -c);
  }
  return out;
}

namespace {

struct SubexpressionSum {
  const CoxeterType& t;
  const Word& w;
  HeckeElt out;

  void run(std::size_t i, const GroupElement& g, int len, int defect) {
    if (i == w.size()) {
      accumulate(out, g, LaurentPoly::v(defect));
      return;
    }
    GroupElement gs = mul_right(t, g, w[i]);
    int ls = length(t, gs);
    bool up = ls > len;
    run(i + 1, g, len, defect + (up ? 1 : -1));
    run(i + 1, gs, ls, defect);
  }
};

}  // namespace

HeckeElt defect_expand_full(const CoxeterType& t, const Word& w) {
  if (w.size() > 24) throw std::invalid_argument("defect_expand_full: word longer than 24");
  SubexpressionSum d{t, w, {}};
  d.run(0, identity(t), 0, 0);
  return d.out;
}

}  // namespace cominkl
