#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "swapalg/bracket.hpp"
#include "swapalg/determinant.hpp"
#include "swapalg/errors.hpp"
#include "swapalg/expr.hpp"

using namespace swapalg;

namespace {

SwapFraction ev(const std::string& text, const PointSetPtr& ps) {
  return eval_expr(parse_expr(text, ps), ps);
}

}  // namespace

TEST_CASE("literals and arithmetic evaluate with exact rationals") {
  auto ps = mk_point_set({"x", "y"});
  CHECK(ev("1+2*3", ps).eq_in_QP(SwapFraction::from_poly(SwapPoly::constant(ps, Rat(7)))));
  CHECK(ev("2-3-4", ps).num() == SwapPoly::constant(ps, Rat(-5)));
  CHECK(ev("12/3/2", ps).eq_in_QP(SwapFraction::from_poly(SwapPoly::constant(ps, Rat(2)))));
  CHECK(ev("1/2", ps).num() == SwapPoly::constant(ps, Rat(1, 2)));
  CHECK(ev("-(1/2 + 1/3)", ps).num() == SwapPoly::constant(ps, Rat(-5, 6)));
  CHECK(ev("007", ps).num() == SwapPoly::constant(ps, Rat(7)));
  CHECK(ev("2*(3+4)", ps).num() == SwapPoly::constant(ps, Rat(14)));
}

TEST_CASE("builtins evaluate to their library counterparts") {
  auto ps = mk_point_set({"x", "t", "z", "y"});
  CHECK(ev("p(x,z)", ps).num() == SwapPoly::pair(ps, "x", "z"));
  CHECK(ev("p(x,x)", ps).is_zero());

  const SwapFraction cr = ev("cr(x,y,z,t)", ps);
  const SwapFraction want(SwapPoly::pair(ps, "x", "z") * SwapPoly::pair(ps, "y", "t"),
                          SwapPoly::pair(ps, "x", "t") * SwapPoly::pair(ps, "y", "z"));
  CHECK(cr.eq_in_QP(want));

  const auto spec = make_det_spec(ps, {"x", "z", "y"}, {"z", "x", "t"});
  CHECK(ev("det([x,z,y],[z,x,t])", ps).num() == determinant(ps, spec));

  CHECK(ev("br(p(x,z), p(t,y))", ps).num() ==
        bracket_generators(ps, "x", "z", "t", "y"));
  CHECK(ev("br(p(x,z), det([x,z,y],[z,x,t]))", ps).is_zero());
}

TEST_CASE("brackets of fractions follow the quotient rule in the grammar") {
  auto ps = mk_point_set({"a", "b", "c", "d"});
  const SwapFraction got = ev("br(p(a,b), 1/p(c,d))", ps);
  const SwapPoly br = bracket_generators(ps, "a", "b", "c", "d");
  const SwapPoly cd = SwapPoly::pair(ps, "c", "d");
  CHECK(got.eq_in_QP(SwapFraction(-br, cd * cd)));
}

TEST_CASE("parse errors carry position information") {
  auto ps = mk_point_set({"x", "y"});
  CHECK_THROWS_AS(parse_expr("p(x,)", ps), ParseError);
  CHECK_THROWS_AS(parse_expr("", ps), ParseError);
  CHECK_THROWS_AS(parse_expr("p(x,y", ps), ParseError);
  CHECK_THROWS_AS(parse_expr("q(x,y)", ps), ParseError);
  CHECK_THROWS_AS(parse_expr("1/0", ps), ParseError);
  CHECK_THROWS_AS(parse_expr("p(x,y) +", ps), ParseError);
  CHECK_THROWS_AS(parse_expr("(p(x,y)", ps), ParseError);
  CHECK_THROWS_AS(parse_expr("p(x,y))", ps), ParseError);
  try {
    parse_expr("p(x,)", ps);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.column == 5);
    CHECK(std::string(e.what()).find("line 1, column 5") != std::string::npos);
  }
}

TEST_CASE("semantic errors surface with their own types") {
  auto ps = mk_point_set({"x", "y", "z", "t"});
  CHECK_THROWS_AS(parse_expr("p(x,w)", ps), UnknownPoint);
  CHECK_THROWS_AS(parse_expr("cr(x,y,z,x)", ps), IllegalCrossFraction);
  CHECK_THROWS_AS(parse_expr("det([x,y],[z])", ps), BadSpec);
  CHECK_THROWS_AS(parse_expr("det([x],[z])", ps), BadSpec);
  CHECK_THROWS_AS(eval_expr(parse_expr("1/(p(x,y)-p(x,y))", ps), ps), DivisionByZero);
  CHECK_THROWS_AS(eval_expr(parse_expr("1/p(x,x)", ps), ps), DivisionByZero);
}

TEST_CASE("printing after parsing is the identity on printed strings") {
  auto ps = mk_point_set({"x", "t", "z", "y"});
  const char* samples[] = {
      "p(x,z)",
      "1/2*p(x,y) - p(y,x)*p(z,t)",
      "br(p(x,z), det([x,z,y],[z,x,t]))",
      "-(p(x,y) + p(y,z))*p(z,t)",
      "cr(x,y,z,t)/cr(y,x,t,z)",
      "2 - 3 - 4",
      "1/2/2",
      "-1/2 + p(x,y)/p(z,t)/p(x,t)",
      "br(br(p(x,y), p(y,z)), p(z,t) - det([x,y],[z,t]))",
  };
  for (const char* s : samples) {
    const ExprPtr e = parse_expr(s, ps);
    const std::string printed = print_expr(e, ps);
    const ExprPtr e2 = parse_expr(printed, ps);
    CHECK(print_expr(e2, ps) == printed);
    // printing preserves the value as well
    CHECK(eval_expr(e, ps).eq_in_QP(eval_expr(e2, ps)));
  }
}

TEST_CASE("polynomial strings parse back to the same polynomial") {
  auto ps = mk_point_set({"a", "b", "c", "d", "e"});
  std::mt19937_64 rng(808);
  static const Rat coeffs[] = {Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(1, 2), Rat(-1, 2)};
  for (int i = 0; i < 40; ++i) {
    SwapPoly f = SwapPoly::zero(ps);
    const int nterms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < nterms; ++t) {
      SwapPoly term = SwapPoly::constant(ps, coeffs[rng() % 6]);
      const int deg = static_cast<int>(rng() % 3);
      for (int d = 0; d < deg; ++d) {
        const int l = static_cast<int>(rng() % 5);
        int r = static_cast<int>(rng() % 5);
        if (r == l) r = (r + 1) % 5;
        term = term * SwapPoly::pair_at(ps, l, r);
      }
      f = f + term;
    }
    const SwapFraction back = ev(f.str(), ps);
    CHECK(back.num() == f * back.den());
  }
}

TEST_CASE("fraction strings parse back to an equal fraction") {
  auto ps = mk_point_set({"x", "y", "z", "t"});
  const SwapFraction F(SwapPoly::pair(ps, "x", "y") - SwapPoly::pair(ps, "z", "x"),
                       SwapPoly::pair(ps, "z", "t") * SwapPoly::pair(ps, "t", "x"));
  CHECK(ev(F.str(), ps).eq_in_QP(F));
  const SwapFraction G = SwapFraction::from_poly(-SwapPoly::pair(ps, "x", "y"));
  CHECK(ev(G.str(), ps).eq_in_QP(G));
}
