#include <random>

#include "doctest.h"
#include "swapalg/errors.hpp"
#include "swapalg/linking.hpp"
#include "swapalg/swap_fraction.hpp"
#include "swapalg/swap_poly.hpp"

using namespace swapalg;

namespace {

SwapPoly random_poly(const PointSetPtr& ps, std::mt19937_64& rng) {
  static const Rat coeffs[] = {Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(1, 2), Rat(-1, 2)};
  const int p = ps->size();
  SwapPoly f = SwapPoly::zero(ps);
  const int nterms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < nterms; ++t) {
    SwapPoly term = SwapPoly::constant(ps, coeffs[rng() % 6]);
    const int deg = static_cast<int>(rng() % 3);
    for (int d = 0; d < deg; ++d) {
      const int l = static_cast<int>(rng() % p);
      int r = static_cast<int>(rng() % p);
      if (r == l) r = (r + 1) % p;
      term = term * SwapPoly::pair_at(ps, l, r);
    }
    f = f + term;
  }
  return f;
}

}  // namespace

TEST_CASE("point sets validate names and resolve indices") {
  auto ps = mk_point_set({"x", "t", "z", "y"});
  CHECK(ps->size() == 4);
  CHECK(ps->name(0) == "x");
  CHECK(ps->name(3) == "y");
  CHECK(ps->index_of("z") == 2);
  CHECK(ps->contains("t"));
  CHECK(!ps->contains("w"));
  CHECK_THROWS_AS(ps->index_of("w"), UnknownPoint);
  CHECK_THROWS_AS(mk_point_set({"a", "b", "a"}), DuplicatePoint);

  auto rot = mk_point_set(ps->rotated_names(1));
  CHECK(rot->name(0) == "t");
  CHECK(rot->name(3) == "x");
  CHECK(*rot == *mk_point_set({"t", "z", "y", "x"}));
}

TEST_CASE("pair variables of a point with itself vanish") {
  auto ps = mk_point_set({"x", "y"});
  CHECK(SwapPoly::pair(ps, "x", "x").is_zero());
  CHECK(SwapPoly::pair_at(ps, 1, 1).is_zero());
  CHECK(!SwapPoly::pair(ps, "x", "y").is_zero());
  CHECK(SwapPoly::pair(ps, "x", "y").degree() == 1);
  CHECK(SwapPoly::pair(ps, "x", "y").term_count() == 1);
}

TEST_CASE("polynomial arithmetic satisfies the commutative ring axioms") {
  auto ps = mk_point_set({"a", "b", "c", "d", "e"});
  std::mt19937_64 rng(20240811);
  const SwapPoly one = SwapPoly::constant(ps, Rat(1));
  for (int i = 0; i < 400; ++i) {
    const SwapPoly f = random_poly(ps, rng);
    const SwapPoly g = random_poly(ps, rng);
    const SwapPoly h = random_poly(ps, rng);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f - f).is_zero());
    CHECK(f * one == f);
    CHECK((f * SwapPoly::zero(ps)).is_zero());
    CHECK(-(-f) == f);
    CHECK(Rat(3) * f == f + f + f);
  }
}

TEST_CASE("mixing polynomials over different point sets is rejected") {
  auto ps1 = mk_point_set({"x", "y"});
  auto ps2 = mk_point_set({"x", "z"});
  CHECK_THROWS_AS(SwapPoly::pair(ps1, "x", "y") + SwapPoly::pair(ps2, "x", "z"),
                  PointSetMismatch);
}

TEST_CASE("content monomial extraction and division invert each other") {
  auto ps = mk_point_set({"x", "y", "z"});
  const SwapPoly xy = SwapPoly::pair(ps, "x", "y");
  const SwapPoly yz = SwapPoly::pair(ps, "y", "z");
  const SwapPoly zx = SwapPoly::pair(ps, "z", "x");
  const SwapPoly f = xy * yz * zx + Rat(2) * xy * xy * yz;
  const Monomial content = f.content_monomial();
  REQUIRE(!content.empty());
  const SwapPoly g = f.divide_by_monomial(content);
  CHECK(g == zx + Rat(2) * xy);
  CHECK(g.content_monomial().empty());
}

TEST_CASE("polynomial strings name the pair variables") {
  auto ps = mk_point_set({"x", "y"});
  CHECK(SwapPoly::zero(ps).str() == "0");
  CHECK(SwapPoly::pair(ps, "x", "y").str() == "p(x,y)");
  CHECK((-SwapPoly::pair(ps, "y", "x")).str() == "-p(y,x)");
}

TEST_CASE("linking numbers take the five sign values from the chord picture") {
  // positions on the 4-circle: x=0, t=1, z=2, y=3, anticlockwise
  CHECK(linking_number_pos(Rat(0), Rat(2), Rat(1), Rat(3), 4) == Rat(1));
  CHECK(linking_number_pos(Rat(0), Rat(2), Rat(5, 2), Rat(1), 4) == Rat(-1));
  CHECK(linking_number_pos(Rat(0), Rat(1), Rat(2), Rat(3), 4) == Rat(0));
  CHECK(linking_number_pos(Rat(0), Rat(2), Rat(0), Rat(1), 4) == Rat(-1, 2));
  auto ps = mk_point_set({"x", "t", "z", "y"});
  CHECK(linking_number(*ps, "x", "z", "t", "y") == Rat(1));
  CHECK(linking_number(*ps, "x", "z", "x", "t") == Rat(-1, 2));
}

TEST_CASE("linking numbers are antisymmetric under swapping the chords") {
  const int m = 5;
  for (int r = 0; r < m; ++r)
    for (int x = 0; x < m; ++x)
      for (int s = 0; s < m; ++s)
        for (int y = 0; y < m; ++y) {
          if (r == x || s == y) continue;
          const Rat lhs = linking_number_pos(Rat(r), Rat(x), Rat(s), Rat(y), m);
          const Rat rhs = linking_number_pos(Rat(s), Rat(y), Rat(r), Rat(x), m);
          CHECK(lhs == -rhs);
        }
}

TEST_CASE("linking numbers do not depend on the admissible cut") {
  const int m = 5;
  const Rat cuts[] = {Rat(-1, 3), Rat(-2, 7), Rat(7, 2), Rat(13, 3)};
  for (int r = 0; r < m; ++r)
    for (int x = 0; x < m; ++x)
      for (int s = 0; s < m; ++s)
        for (int y = 0; y < m; ++y) {
          if (r == x || s == y) continue;
          const Rat base = linking_number_pos(Rat(r), Rat(x), Rat(s), Rat(y), m);
          for (const Rat& cut : cuts)
            CHECK(base == linking_number_pos_cut(Rat(r), Rat(x), Rat(s), Rat(y), m, cut));
        }
}

TEST_CASE("linking numbers are invariant under rotating the circle") {
  auto ps = mk_point_set({"a", "b", "c", "d", "e"});
  for (int shift = 1; shift < 5; ++shift) {
    auto rot = mk_point_set(ps->rotated_names(shift));
    for (int r = 0; r < 5; ++r)
      for (int x = 0; x < 5; ++x)
        for (int s = 0; s < 5; ++s)
          for (int y = 0; y < 5; ++y) {
            if (r == x || s == y) continue;
            CHECK(linking_number(*ps, ps->name(r), ps->name(x), ps->name(s), ps->name(y)) ==
                  linking_number(*rot, ps->name(r), ps->name(x), ps->name(s), ps->name(y)));
          }
  }
}

TEST_CASE("side of chord splits the circle into the two open arcs") {
  CHECK(side_of_chord(Rat(0), Rat(2), Rat(1), 4) == 1);
  CHECK(side_of_chord(Rat(0), Rat(2), Rat(3), 4) == -1);
  CHECK(side_of_chord(Rat(0), Rat(2), Rat(0), 4) == 0);
  CHECK(side_of_chord(Rat(0), Rat(2), Rat(2), 4) == 0);
  CHECK(side_of_chord(Rat(3), Rat(1), Rat(0), 4) == 1);
  CHECK(side_of_chord(Rat(3), Rat(1), Rat(2), 4) == -1);
  CHECK(just_after(3, 4) == Rat(7, 2));
  CHECK(just_after(0, 4) == Rat(1, 2));
}

TEST_CASE("fractions reduce questions to cross multiplication") {
  auto ps = mk_point_set({"x", "y", "z", "t"});
  const SwapPoly xy = SwapPoly::pair(ps, "x", "y");
  const SwapPoly zt = SwapPoly::pair(ps, "z", "t");
  CHECK_THROWS_AS(SwapFraction(xy, SwapPoly::zero(ps)), DivisionByZero);

  const SwapFraction a(xy * zt, zt);
  CHECK(a.eq_in_QP(SwapFraction::from_poly(xy)));
  CHECK(!a.eq_in_QP(SwapFraction::from_poly(zt)));

  const SwapFraction b = SwapFraction(xy, zt);
  CHECK((a * b).eq_in_QP(SwapFraction(xy * xy, zt)));
  CHECK((b / b).eq_in_QP(SwapFraction::one(ps)));
  CHECK((b - b).is_zero());
  CHECK(b.inverse().eq_in_QP(SwapFraction(zt, xy)));
  CHECK_THROWS_AS(SwapFraction::from_poly(SwapPoly::zero(ps)).inverse(), DivisionByZero);
  CHECK((b + b.inverse()).eq_in_QP(SwapFraction(xy * xy + zt * zt, xy * zt)));
}
