#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "cominkl/coxeter.hpp"
#include "cominkl/laurent.hpp"

namespace cominkl {

// Element of the Hecke algebra in the standard basis, normalised so that
// (delta_s + v)(delta_s - v^{-1}) = 0 and b_s = delta_s + v.
using HeckeElt = std::map<GroupElement, LaurentPoly>;

enum class Side { Left, Right };

HeckeElt hecke_delta(const GroupElement& w);
void add_scaled(HeckeElt& a, const HeckeElt& b, const LaurentPoly& c);
LaurentPoly coeff_of(const HeckeElt& a, const GroupElement& w);
std::string hecke_to_string(const HeckeElt& h);

HeckeElt mul_delta_s(const CoxeterType& t, const HeckeElt& h, int s, Side side = Side::Right);
HeckeElt mul_b_s(const CoxeterType& t, const HeckeElt& h, int s, Side side = Side::Right);
HeckeElt bs_product(const CoxeterType& t, const Word& w);  // b_{s1} ... b_{sk}
HeckeElt hecke_bar(const CoxeterType& t, const HeckeElt& h);

// KL basis of the Hecke algebra for every element of the lower interval [e, w].
class HeckeKLTable {
 public:
  HeckeKLTable(const CoxeterType& t, const GroupElement& w);
  const CoxeterType& type() const { return type_; }
  const std::vector<GroupElement>& elements() const { return elems_; }
  const HeckeElt& b(const GroupElement& x) const;
  bool contains(const GroupElement& x) const { return pos_.count(x) > 0; }

 private:
  CoxeterType type_;
  std::vector<GroupElement> elems_;
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> pos_;
  std::vector<HeckeElt> basis_;
};

HeckeElt kl_b(const CoxeterType& t, const GroupElement& w);
// Coefficients of h in the KL basis; the support of h must lie in the table.
HeckeElt expand_in_kl(const HeckeKLTable& table, const HeckeElt& h);

// Sum over all 2^k subexpressions of v^defect delta_end; k <= 24.
HeckeElt defect_expand_full(const CoxeterType& t, const Word& w);

}  // namespace cominkl
