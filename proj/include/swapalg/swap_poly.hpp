#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "swapalg/point_set.hpp"
#include "swapalg/rational.hpp"

namespace swapalg {

// Ordered pair of circle positions: the generator "xy" with x = left point,
// y = right point. Pairs with l == r are the relation xx = 0 and never occur
// inside a stored monomial.
struct PairVar {
  int l;
  int r;
  auto operator<=>(const PairVar&) const = default;
};

// Multiset of pair variables, kept sorted; repeated factors appear repeatedly.
using Monomial = std::vector<PairVar>;

// Graded order, ties broken lexicographically by the (l, r)-sorted factor
// sequence. Any fixed total order gives canonical storage; degree-first makes
// printed polynomials read constant terms first.
struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Element of the swapping ring Z(P): a sparse rational-coefficient polynomial
// in pair variables over a fixed PointSet. Immutable value semantics; all
// arithmetic returns new values.
class SwapPoly {
 public:
  using TermMap = std::map<Monomial, Rat, MonoLess>;

  static SwapPoly zero(PointSetPtr ps);
  static SwapPoly constant(PointSetPtr ps, const Rat& c);
  // The generator xy; returns the zero polynomial when x == y.
  static SwapPoly pair(PointSetPtr ps, const std::string& x, const std::string& y);
  static SwapPoly pair_at(PointSetPtr ps, int x, int y);
  static SwapPoly monomial(PointSetPtr ps, const Rat& c, Monomial m);
  // Assembles a polynomial from accumulated terms; monomials must be sorted
  // and free of same-endpoint pairs, zero coefficients are dropped.
  static SwapPoly from_terms(PointSetPtr ps, TermMap terms);

  const PointSetPtr& point_set() const { return ps_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Total degree of the leading term; -1 for the zero polynomial.
  int degree() const;
  int term_count() const { return static_cast<int>(terms_.size()); }

  SwapPoly operator-() const;
  SwapPoly operator+(const SwapPoly& rhs) const;
  SwapPoly operator-(const SwapPoly& rhs) const;
  SwapPoly operator*(const SwapPoly& rhs) const;
  SwapPoly operator*(const Rat& c) const;
  friend SwapPoly operator*(const Rat& c, const SwapPoly& f) { return f * c; }

  bool operator==(const SwapPoly& rhs) const;

  // Largest monomial dividing every term (empty for the zero polynomial).
  Monomial content_monomial() const;
  // Exact division by a monomial that divides every term.
  SwapPoly divide_by_monomial(const Monomial& m) const;

  // Canonical print, re-parsable by the expression grammar: terms in storage
  // order, factors as p(x,y), repeated factors written out.
  std::string str() const;

 private:
  explicit SwapPoly(PointSetPtr ps) : ps_(std::move(ps)) {}
  void add_term(const Monomial& m, const Rat& c);
  void require_same_set(const SwapPoly& rhs) const;

  PointSetPtr ps_;
  TermMap terms_;
};

// Divides the multiset n by the multiset d (d must divide n).
Monomial monomial_div(const Monomial& n, const Monomial& d);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
int monomial_degree_of(const Monomial& m);

}  // namespace swapalg
