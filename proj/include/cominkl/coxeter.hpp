#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cominkl {

enum class Family { A, B, C };

char family_letter(Family f);
Family parse_family(std::string_view s);

// Type A_n acts on {1..n+1} with s_i = (i,i+1), 1 <= i <= n.
// Types B_n/C_n act by signed permutations of {1..n}: s_0 negates 1 and
// s_i = (i,i+1) for 0 < i < n. B and C share the Coxeter group; they only
// differ in the Cartan data (see nilhecke.hpp).
struct CoxeterType {
  Family family = Family::B;
  int rank = 1;

  int first_generator() const { return family == Family::A ? 1 : 0; }
  int last_generator() const { return family == Family::A ? rank : rank - 1; }
  std::vector<int> generators() const;
  int degree() const { return family == Family::A ? rank + 1 : rank; }
  bool is_generator(int s) const { return s >= first_generator() && s <= last_generator(); }
  void validate() const;
  std::string name() const;
};

inline constexpr int kMaxDegree = 24;

using Word = std::vector<int>;
std::string word_to_string(const Word& w);

// w is stored by its images w(1..deg); signs only occur in types B/C.
struct GroupElement {
  std::array<std::int8_t, kMaxDegree> img{};
  std::uint8_t deg = 0;
  int operator()(int i) const;  // w(i) for 1 <= i <= deg, w(-i) = -w(i)
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const;
};

GroupElement identity(const CoxeterType& t);
GroupElement generator(const CoxeterType& t, int s);
GroupElement compose(const GroupElement& a, const GroupElement& b);  // a o b
GroupElement inverse(const GroupElement& a);
GroupElement mul_right(const CoxeterType& t, const GroupElement& w, int s);  // w s
GroupElement mul_left(const CoxeterType& t, int s, const GroupElement& w);   // s w
int length(const CoxeterType& t, const GroupElement& w);
GroupElement evaluate_word(const CoxeterType& t, const Word& w);
bool is_reduced(const CoxeterType& t, const Word& w);
Word reduced_word(const CoxeterType& t, const GroupElement& w);
std::string element_to_string(const GroupElement& w);

// All products of subwords of a reduced word for w, i.e. the lower Bruhat
// interval [e, w]. Sorted by (length, element).
std::vector<GroupElement> bruhat_interval_below(const CoxeterType& t, const GroupElement& w);
std::vector<GroupElement> all_elements(const CoxeterType& t);

// Minimal length representative of W_I w, where I is given as a bitmask over
// generator indices.
bool is_min_coset_rep(const CoxeterType& t, const GroupElement& w, std::uint64_t parabolic);
std::uint64_t cominuscule_parabolic(const CoxeterType& t);  // S \ {s_0}
std::uint64_t quadric_parabolic(const CoxeterType& t);      // S \ {s_{n-1}}

// Minimal coset representative of the cominuscule quotient, encoded as a
// strict partition (= a finite set of positive integers). Bit t-1 of mask
// is set iff t is a row length.
struct CosetRep {
  std::uint64_t mask = 0;

  static CosetRep from_elements(const std::vector<int>& rows);
  static CosetRep parse(std::string_view text);  // "{6,4,2,1}", "{}"
  std::vector<int> elements() const;             // decreasing
  bool contains(int t) const { return t >= 1 && t <= 64 && ((mask >> (t - 1)) & 1u); }
  int size() const;
  int length() const;  // sum of rows
  int max_element() const;  // 0 for the empty set
  bool is_subset_of(CosetRep o) const { return (mask & ~o.mask) == 0; }
  std::string to_string() const;
  friend auto operator<=>(const CosetRep&, const CosetRep&) = default;
};

CosetRep set_union(CosetRep a, CosetRep b);
CosetRep set_intersection(CosetRep a, CosetRep b);
CosetRep set_difference(CosetRep a, CosetRep b);

// Right action x -> xs on subsets. Equal to x iff xs leaves the quotient.
CosetRep subset_action(CosetRep x, int s);
// Bruhat order on the quotient: containment of shifted Young diagrams.
bool bruhat_leq(CosetRep y, CosetRep x);
Word row_word(CosetRep x);
Word column_word(CosetRep x);
std::uint64_t zeta(CosetRep x);  // sum of 2^t over t in x

// Set of negative positions of w; a bijection from cominuscule minimal
// coset representatives onto subsets of {1..n}.
CosetRep negative_positions(const GroupElement& w);
// Throws std::invalid_argument if w is not a minimal representative.
CosetRep to_coset_rep(const CoxeterType& t, const GroupElement& w);
GroupElement coset_rep_element(const CoxeterType& t, CosetRep x);

}  // namespace cominkl
