#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "swapalg/rational.hpp"

namespace swapalg {

// Power product over integer-indexed variables: (variable, exponent) pairs,
// variables strictly ascending, exponents positive.
using PowerProduct = std::vector<std::pair<int, int>>;

int pp_degree(const PowerProduct& p);
PowerProduct pp_mul(const PowerProduct& a, const PowerProduct& b);

struct PPLess {
  bool operator()(const PowerProduct& a, const PowerProduct& b) const {
    const int da = pp_degree(a), db = pp_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

// Sparse multivariate polynomial with exact rational coefficients. Shared by
// the rank-n vector/covector model and the cluster coordinate algebra.
class Poly {
 public:
  using TermMap = std::map<PowerProduct, Rat, PPLess>;

  Poly() = default;
  static Poly constant(const Rat& c);
  static Poly var(int v, int exp = 1);
  static Poly from_terms(TermMap terms);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? -1 : pp_degree(terms_.rbegin()->first); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  bool is_constant() const;

  Poly operator-() const;
  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator*(const Poly& rhs) const;
  Poly operator*(const Rat& c) const;
  friend Poly operator*(const Rat& c, const Poly& f) { return f * c; }
  Poly pow(int e) const;  // e >= 0

  bool operator==(const Poly& rhs) const { return terms_ == rhs.terms_; }

  Poly derivative(int v) const;
  Rat eval(const std::vector<Rat>& values) const;

  void add_term(const PowerProduct& m, const Rat& c);

  std::string str(const std::function<std::string(int)>& var_name) const;

 private:
  TermMap terms_;
};

}  // namespace swapalg
