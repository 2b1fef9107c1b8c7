#include "swapalg/swap_fraction.hpp"

namespace swapalg {

SwapFraction::SwapFraction(SwapPoly num, SwapPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("fraction with zero denominator");
}

SwapFraction SwapFraction::from_poly(SwapPoly num) {
  auto ps = num.point_set();
  return SwapFraction(std::move(num), SwapPoly::constant(ps, Rat(1)));
}

SwapFraction SwapFraction::one(PointSetPtr ps) {
  return from_poly(SwapPoly::constant(std::move(ps), Rat(1)));
}

SwapFraction SwapFraction::operator-() const { return SwapFraction(-num_, den_); }

SwapFraction SwapFraction::operator+(const SwapFraction& rhs) const {
  return SwapFraction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

SwapFraction SwapFraction::operator-(const SwapFraction& rhs) const {
  return SwapFraction(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

SwapFraction SwapFraction::operator*(const SwapFraction& rhs) const {
  return SwapFraction(num_ * rhs.num_, den_ * rhs.den_);
}

SwapFraction SwapFraction::operator/(const SwapFraction& rhs) const {
  return *this * rhs.inverse();
}

SwapFraction SwapFraction::inverse() const {
  if (num_.is_zero()) throw DivisionByZero("inverting a zero fraction");
  return SwapFraction(den_, num_);
}

bool SwapFraction::eq_in_QP(const SwapFraction& rhs) const {
  return (num_ * rhs.den_ - rhs.num_ * den_).is_zero();
}

std::string SwapFraction::str() const {
  const auto& dt = den_.terms();
  if (dt.size() == 1 && dt.begin()->first.empty() && dt.begin()->second == 1) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace swapalg
