#pragma once

#include "swapalg/linking.hpp"
#include "swapalg/swap_fraction.hpp"
#include "swapalg/swap_poly.hpp"

namespace swapalg {

// The swapping bracket {rx, sy} = J(rx, sy) * ry * sx on generators,
// extended to Z(P) by bilinearity and the Leibniz rule, and to fractions by
// {a, 1/b} = -{a, b}/b^2.

SwapPoly bracket_generators(const PointSetPtr& ps, PairVar rx, PairVar sy);
SwapPoly bracket_generators(const PointSetPtr& ps, const std::string& r, const std::string& x,
                            const std::string& s, const std::string& y);

SwapPoly bracket_poly(const SwapPoly& f, const SwapPoly& g);

// {a/b, c/d} = ({a,c} bd - {a,d} bc - {b,c} ad + {b,d} ac) / (b^2 d^2).
SwapFraction bracket_fraction(const SwapFraction& F, const SwapFraction& G);

}  // namespace swapalg
