#pragma once

#include <string>

#include "swapalg/swap_poly.hpp"

namespace swapalg {

// Formal fraction over Z(P). Z(P) is an integral domain, so equality is
// decided by cross-multiplication; no gcd cancellation is ever attempted.
class SwapFraction {
 public:
  // den must be nonzero as a polynomial.
  SwapFraction(SwapPoly num, SwapPoly den);
  static SwapFraction from_poly(SwapPoly num);
  static SwapFraction one(PointSetPtr ps);

  const SwapPoly& num() const { return num_; }
  const SwapPoly& den() const { return den_; }
  const PointSetPtr& point_set() const { return num_.point_set(); }
  bool is_zero() const { return num_.is_zero(); }

  SwapFraction operator-() const;
  SwapFraction operator+(const SwapFraction& rhs) const;
  SwapFraction operator-(const SwapFraction& rhs) const;
  SwapFraction operator*(const SwapFraction& rhs) const;
  SwapFraction operator/(const SwapFraction& rhs) const;
  SwapFraction inverse() const;

  // Equality in the fraction field of Z(P): a/b = c/d iff ad = cb.
  bool eq_in_QP(const SwapFraction& rhs) const;

  // "(num)/(den)"; re-parsable. Denominator 1 prints as the numerator alone.
  std::string str() const;

 private:
  SwapPoly num_;
  SwapPoly den_;
};

}  // namespace swapalg
