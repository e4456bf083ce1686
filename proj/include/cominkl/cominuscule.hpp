#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cominkl/coxeter.hpp"
#include "cominkl/laurent.hpp"
#include "cominkl/parabolic.hpp"

namespace cominkl {

// Sets of even row lengths of x are stored like any other set of rows.
using ESet = CosetRep;

ESet e_set(CosetRep x);
Word one_two_one_word(int t);

// Pieces of column_word(x), in order. A u_t block is usually contiguous, but
// when a long row above it reaches past its right column the boxes of that
// row interleave, so a block can be split into several pieces.
struct Segment {
  bool is_u = false;
  int t = 0;  // row length of the u-block, 0 for r-pieces
  Word word;
};

struct SegmentDecomposition {
  Word column_word;
  std::vector<Segment> segments;
  std::vector<int> bits;  // 0 on u-boxes, 1 elsewhere

  Word u_word(int t) const;  // all pieces of u_t, concatenated
  Word r_word() const;       // all r-pieces, concatenated
};

SegmentDecomposition segment_decomposition(CosetRep x, ESet E);
CosetRep removal(CosetRep x, ESet E);
Stroll stroll_for_E(const Quotient& q, CosetRep x, ESet E);
std::vector<CosetRep> bs_support(CosetRep x);

// p = 0 or a prime. `classical` must be the antispherical KL table of a
// cominuscule quotient.
ModuleElt antispherical_pkl(const KLTable& classical, CosetRep x, int p);

struct PairMatching {
  std::vector<int> augmented;  // x, plus 0 when |x| is odd; increasing
  std::vector<std::pair<int, int>> step1;  // (i, j), i in x, j not in x
  std::vector<std::pair<int, int>> step2;  // (t_{2k}, t_{2k-1}), larger first
  std::vector<int> unmatched;
};

PairMatching ls_matching(CosetRep x, int n);
LaurentPoly ls_n(CosetRep y, CosetRep x, int n);
ModuleElt ls_d(CosetRep x, int n);

ModuleElt quadric_bs(int n, int i);
// `classical` must be the antispherical KL table of the quadric quotient.
ModuleElt quadric_pkl(const KLTable& classical, int i, int p);

using Rational = boost::rational<std::int64_t>;
using EndoElt = std::map<ESet, Rational>;

std::pair<std::int64_t, ESet> endo_struct(ESet E, ESet F, Family f);
EndoElt endo_multiply(const EndoElt& a, const EndoElt& b, Family f);
EndoElt idempotent(CosetRep x, Family f);
// prod over t in E(x) of (1 - c_t phi_t), expanded in the presentation
EndoElt idempotent_product_form(CosetRep x, Family f);
std::string endo_to_string(const EndoElt& e);

bool in_f_set(CosetRep y, CosetRep x);
std::vector<CosetRep> f_set(CosetRep x);

enum class DescentChoice { Largest, Smallest };

struct SphericalTwoKL {
  std::map<std::uint64_t, ModuleElt> table;
  std::vector<std::string> violations;  // empty when every check passed
};

// Experimental characteristic-2 spherical basis (type C, cominuscule).
SphericalTwoKL spherical_two_kl(int n, DescentChoice choice = DescentChoice::Largest);

// Parse p as 0 or a prime; throws for anything else.
void check_characteristic(int p);

}  // namespace cominkl
