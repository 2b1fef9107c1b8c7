#pragma once

#include <vector>

#include "swapalg/swap_poly.hpp"

namespace swapalg {

// The (n+1)x(n+1) determinant of pair variables whose (i, j) entry is
// x_i y_j. Its full expansions generate the rank-n ideal.
struct DeterminantSpec {
  std::vector<int> xs;
  std::vector<int> ys;
};

// Sizes 2..4 (ranks 1..3); naive permutation-sum expansion.
DeterminantSpec make_det_spec(const PointSetPtr& ps, const std::vector<std::string>& xs,
                              const std::vector<std::string>& ys);
DeterminantSpec make_det_spec_at(const PointSetPtr& ps, std::vector<int> xs, std::vector<int> ys);

SwapPoly determinant(const PointSetPtr& ps, const DeterminantSpec& spec);

// One summand of the one-sided expansion of {ab, Delta}: the linking-number
// coefficient, the pair factor (x_d b or a y_d), and the spec with a (resp.
// b) substituted at the slot. Summands whose pair factor degenerates to a
// same-point pair are identically zero and omitted.
struct DeltaTerm {
  Rat coeff;           // linking number J
  PairVar factor;      // x_d b  (x side)  or  a y_d  (y side)
  bool x_side;         // which sum the term came from
  int slot;            // 0-based substitution slot d
  DeterminantSpec sub; // spec with a at xs[d] (x side) or b at ys[d] (y side)
};

// Right-side expansion: sums over the points of the spec lying on the right
// side of the directed chord a->b, including those coinciding with a or b;
// the auxiliary point u sits strictly on the left. The left-side expansion
// mirrors it with the auxiliary point v strictly on the right.
std::vector<DeltaTerm> delta_r_terms(const PointSetPtr& ps, int a, int b,
                                     const DeterminantSpec& spec);
std::vector<DeltaTerm> delta_l_terms(const PointSetPtr& ps, int a, int b,
                                     const DeterminantSpec& spec);

SwapPoly delta_R(const PointSetPtr& ps, int a, int b, const DeterminantSpec& spec);
SwapPoly delta_L(const PointSetPtr& ps, int a, int b, const DeterminantSpec& spec);

}  // namespace swapalg
