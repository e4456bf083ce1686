#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cominkl/coxeter.hpp"
#include "cominkl/laurent.hpp"

namespace cominkl {

enum class ModuleKind { Spherical, Antispherical };
enum class StepKind { Up, Down, Exit };

struct Step {
  StepKind kind;
  std::uint64_t target;  // equals the source on Exit
};

// Minimal coset representatives of a parabolic quotient, indexed by ids that
// increase along a linear extension of the Bruhat order.
//   cominuscule: id = subset mask (so ids sort by zeta), any rank up to 62
//   quadric:     id = i for the representative x_i of length i
class Quotient {
 public:
  static Quotient cominuscule(Family f, int n);
  static Quotient quadric(Family f, int n);

  const CoxeterType& type() const { return type_; }
  bool is_quadric() const { return quadric_; }
  std::uint64_t size() const;
  std::vector<std::uint64_t> elements() const;
  int length(std::uint64_t x) const;
  Step act(std::uint64_t x, int s) const;
  bool leq(std::uint64_t y, std::uint64_t x) const;
  std::string label(std::uint64_t x) const;
  // Generator s with xs < x used by the KL recursion. For cominuscule
  // quotients this removes a box from the smallest row.
  int recursion_descent(std::uint64_t x) const;

  std::optional<std::uint64_t> from_group(const GroupElement& w) const;
  GroupElement to_group(std::uint64_t x) const;

 private:
  CoxeterType type_;
  bool quadric_ = false;
  std::vector<GroupElement> reps_;
  std::map<GroupElement, std::uint64_t> index_;
  std::vector<std::vector<Step>> table_;
};

// Sparse element of the (anti)spherical module in the standard basis.
using ModuleElt = std::map<std::uint64_t, LaurentPoly>;

ModuleElt delta(std::uint64_t x);
void add_scaled(ModuleElt& a, const ModuleElt& b, const LaurentPoly& c);
LaurentPoly coeff_of(const ModuleElt& a, std::uint64_t x);
std::string module_to_string(const Quotient& q, const ModuleElt& a);

ModuleElt act_bs(const Quotient& q, ModuleKind kind, const ModuleElt& m, int s);
ModuleElt act_delta_s(const Quotient& q, ModuleKind kind, const ModuleElt& m, int s);
ModuleElt bott_samelson(const Quotient& q, ModuleKind kind, const Word& w);

// Bar involution on the module, from bar(delta_e) = delta_e and
// bar(m delta_s) = bar(m) delta_s^{-1}.
class ModuleBar {
 public:
  ModuleBar(const Quotient& q, ModuleKind kind);
  ModuleElt operator()(const ModuleElt& m) const;

 private:
  std::map<std::uint64_t, ModuleElt> bar_delta_;
};

// Classical Kazhdan-Lusztig basis of the module for every element of q.
class KLTable {
 public:
  KLTable(const Quotient& q, ModuleKind kind);
  const Quotient& quotient() const { return q_; }
  ModuleKind kind() const { return kind_; }
  const ModuleElt& operator[](std::uint64_t x) const { return basis_.at(x); }
  const std::map<std::uint64_t, ModuleElt>& basis() const { return basis_; }

 private:
  Quotient q_;
  ModuleKind kind_;
  std::map<std::uint64_t, ModuleElt> basis_;
};

// Coefficients of m in a basis whose element for x is x-unitriangular; the
// basis is looked up in `basis`. Throws if m is not in its span.
ModuleElt expand_in_basis(const std::map<std::uint64_t, ModuleElt>& basis, ModuleElt m);
ModuleElt expand_in_kl(const KLTable& t, const ModuleElt& m);

enum class Arrow { Up, Down };

struct Stroll {
  Word word;
  std::vector<int> bits;
  std::vector<Arrow> arrows;
  std::uint64_t end = 0;  // valid only when parabolic
  int defect = 0;  // #(Up,0) - #(Down,0)
  bool parabolic = false;
};

std::string stroll_to_string(const Stroll& s);

// Arrows are taken in the full Coxeter group; the stroll is parabolic when
// x_{i-1} s_i stays in the quotient at every step.
Stroll make_stroll(const Quotient& q, const Word& w, const std::vector<int>& bits);
std::vector<Stroll> enumerate_strolls(const Quotient& q, const Word& w);
// Sum of v^defect delta_end over parabolic strolls (antispherical module).
ModuleElt defect_expand(const Quotient& q, const Word& w);

}  // namespace cominkl
