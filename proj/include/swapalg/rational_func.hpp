#pragma once

#include <functional>
#include <string>
#include <vector>

#include "swapalg/poly.hpp"

namespace swapalg {

// Ratio of two Poly values. Polynomial rings over the rationals are integral
// domains, so equality is decided by cross-multiplication; no gcd reduction.
class RationalFunc {
 public:
  RationalFunc() : num_(), den_(Poly::constant(Rat(1))) {}
  // den must be nonzero as a polynomial.
  RationalFunc(Poly num, Poly den);
  static RationalFunc from_poly(Poly num);
  static RationalFunc constant(const Rat& c);
  static RationalFunc var(int v);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunc operator-() const;
  RationalFunc operator+(const RationalFunc& rhs) const;
  RationalFunc operator-(const RationalFunc& rhs) const;
  RationalFunc operator*(const RationalFunc& rhs) const;
  RationalFunc operator/(const RationalFunc& rhs) const;
  RationalFunc inverse() const;
  // Negative exponents go through inverse().
  RationalFunc pow(int e) const;

  bool eq(const RationalFunc& rhs) const;

  // Quotient rule.
  RationalFunc derivative(int v) const;

  // Evaluates with variable v replaced by vals[v]; every variable of num and
  // den must be in range.
  RationalFunc substitute(const std::vector<RationalFunc>& vals) const;

  std::string str(const std::function<std::string(int)>& var_name) const;

 private:
  Poly num_;
  Poly den_;
};

}  // namespace swapalg
