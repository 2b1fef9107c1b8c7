#pragma once

#include <string>
#include <vector>

#include "swapalg/swap_fraction.hpp"

namespace swapalg {

// The cross fraction of four points: (xz * yt) / (xt * yz). Defined whenever
// x != t and y != z; the remaining coincidences are allowed and give the
// degenerate values 0 and 1.
SwapFraction cross_fraction(PointSetPtr ps, const std::string& x, const std::string& y,
                            const std::string& z, const std::string& t);
SwapFraction cross_fraction_at(PointSetPtr ps, int x, int y, int z, int t);

// One algebraic identity checked on cross fractions of a concrete point set.
struct CrossRatioCheck {
  std::string name;
  std::string statement;
  bool verifiable;  // false when the identity as written has an unbound symbol
  bool holds;       // meaningful only when verifiable
  std::string detail;
};

// Runs the cross-fraction identity battery on the first points of ps:
// the swap symmetry, the vanishing and unit loci, the chain rule in the last
// argument, and the two-overlap product rule. Needs at least six points.
std::vector<CrossRatioCheck> check_cross_ratio_identities(PointSetPtr ps);

}  // namespace swapalg
