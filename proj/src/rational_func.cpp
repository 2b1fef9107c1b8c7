#include "swapalg/rational_func.hpp"

#include "swapalg/errors.hpp"

namespace swapalg {

RationalFunc::RationalFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("zero denominator");
  if (num_.is_zero()) den_ = Poly::constant(Rat(1));
}

RationalFunc RationalFunc::from_poly(Poly num) {
  return RationalFunc(std::move(num), Poly::constant(Rat(1)));
}

RationalFunc RationalFunc::constant(const Rat& c) { return from_poly(Poly::constant(c)); }

RationalFunc RationalFunc::var(int v) { return from_poly(Poly::var(v)); }

RationalFunc RationalFunc::operator-() const { return RationalFunc(-num_, den_); }

RationalFunc RationalFunc::operator+(const RationalFunc& rhs) const {
  return RationalFunc(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunc RationalFunc::operator-(const RationalFunc& rhs) const {
  return RationalFunc(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunc RationalFunc::operator*(const RationalFunc& rhs) const {
  return RationalFunc(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunc RationalFunc::operator/(const RationalFunc& rhs) const {
  return *this * rhs.inverse();
}

RationalFunc RationalFunc::inverse() const {
  if (num_.is_zero()) throw DivisionByZero("inverse of zero");
  return RationalFunc(den_, num_);
}

RationalFunc RationalFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return RationalFunc(num_.pow(e), den_.pow(e));
}

bool RationalFunc::eq(const RationalFunc& rhs) const {
  return num_ * rhs.den_ == rhs.num_ * den_;
}

RationalFunc RationalFunc::derivative(int v) const {
  return RationalFunc(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

namespace {

RationalFunc subst_poly(const Poly& f, const std::vector<RationalFunc>& vals) {
  RationalFunc acc;
  for (const auto& [pp, c] : f.terms()) {
    RationalFunc term = RationalFunc::constant(c);
    for (const auto& [v, e] : pp) {
      if (v < 0 || v >= static_cast<int>(vals.size()))
        throw BadParams("substitution misses variable " + std::to_string(v));
      term = term * vals[static_cast<size_t>(v)].pow(e);
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace

RationalFunc RationalFunc::substitute(const std::vector<RationalFunc>& vals) const {
  return subst_poly(num_, vals) / subst_poly(den_, vals);
}

std::string RationalFunc::str(const std::function<std::string(int)>& var_name) const {
  if (den_.is_constant() && den_ == Poly::constant(Rat(1))) return num_.str(var_name);
  return "(" + num_.str(var_name) + ")/(" + den_.str(var_name) + ")";
}

}  // namespace swapalg
