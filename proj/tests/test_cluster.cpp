#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "swapalg/cluster.hpp"
#include "swapalg/errors.hpp"
#include "swapalg/rank_model.hpp"

using namespace swapalg;

TEST_CASE("edges canonicalize and validate as polygon diagonals") {
  CHECK(mk_edge(3, 1) == Edge{1, 3});
  CHECK(edge_name(mk_edge(0, 2)) == "v1v3");
  CHECK(is_polygon_diagonal(5, mk_edge(0, 2)));
  CHECK(!is_polygon_diagonal(5, mk_edge(0, 1)));
  CHECK(!is_polygon_diagonal(5, mk_edge(0, 4)));  // boundary edge closing the cycle
  CHECK(!is_polygon_diagonal(5, mk_edge(0, 5)));
  CHECK(edges_cross(mk_edge(0, 2), mk_edge(1, 3)));
  CHECK(!edges_cross(mk_edge(0, 2), mk_edge(0, 3)));
  CHECK(!edges_cross(mk_edge(0, 2), mk_edge(2, 4)));
}

TEST_CASE("triangulation constructors reject malformed diagonal sets") {
  CHECK_THROWS_AS(Triangulation(3, {}), UnsupportedSize);
  CHECK_THROWS_AS(Triangulation(11, {}), BadParams);  // wrong diagonal count
  CHECK_THROWS_AS(enumerate_triangulations(3), UnsupportedSize);
  CHECK_THROWS_AS(enumerate_triangulations(11), UnsupportedSize);
  CHECK_THROWS_AS(Triangulation(5, {mk_edge(0, 1), mk_edge(0, 3)}), NotADiagonal);
  CHECK_THROWS_AS(Triangulation(5, {mk_edge(0, 2)}), BadParams);
  CHECK_THROWS_AS(Triangulation(5, {mk_edge(0, 2), mk_edge(0, 2)}), BadParams);
  CHECK_THROWS_AS(Triangulation(5, {mk_edge(0, 2), mk_edge(1, 3)}), BadParams);
  CHECK_THROWS_AS(Triangulation(6, {mk_edge(0, 2), mk_edge(0, 3), mk_edge(1, 5)}), BadParams);
}

TEST_CASE("triangulation counts follow the Catalan numbers") {
  CHECK(enumerate_triangulations(4).size() == 2);
  CHECK(enumerate_triangulations(5).size() == 5);
  CHECK(enumerate_triangulations(6).size() == 14);
  CHECK(enumerate_triangulations(7).size() == 42);
  // enumeration is duplicate free
  auto tris = enumerate_triangulations(6);
  std::set<std::vector<Edge>> seen;
  for (const auto& T : tris) seen.insert(T.diagonals());
  CHECK(seen.size() == tris.size());
}

TEST_CASE("triangles tile each triangulation") {
  for (int k = 4; k <= 7; ++k) {
    for (const auto& T : enumerate_triangulations(k)) {
      const auto tris = T.triangles();
      CHECK(static_cast<int>(tris.size()) == k - 2);
      // each diagonal borders exactly two triangles, each boundary edge one
      std::map<Edge, int> count;
      for (const auto& t : tris) {
        ++count[mk_edge(t.u, t.v)];
        ++count[mk_edge(t.v, t.w)];
        ++count[mk_edge(t.u, t.w)];
      }
      for (const Edge& d : T.diagonals()) CHECK(count[d] == 2);
      for (int i = 0; i < k; ++i) CHECK(count[mk_edge(i, (i + 1) % k)] == 1);
    }
  }
}

TEST_CASE("the quadrilateral around a diagonal lists its corners anticlockwise") {
  Triangulation T(5, {mk_edge(1, 3), mk_edge(1, 4)});
  const Quad q1 = quad_of(T, mk_edge(1, 3));
  CHECK(q1.x == 1);
  CHECK(q1.y == 2);
  CHECK(q1.z == 3);
  CHECK(q1.t == 4);
  const Quad q2 = quad_of(T, mk_edge(1, 4));
  CHECK(q2.x == 1);
  CHECK(q2.y == 3);
  CHECK(q2.z == 4);
  CHECK(q2.t == 0);
  CHECK_THROWS_AS(quad_of(T, mk_edge(0, 2)), NotADiagonal);
}

TEST_CASE("flips replace a diagonal by the opposite one and are involutive") {
  for (int k = 4; k <= 7; ++k) {
    for (const auto& T : enumerate_triangulations(k)) {
      for (const Edge& e : T.diagonals()) {
        const auto [T2, e2] = flip(T, e);
        CHECK(!T2.has_diagonal(e));
        CHECK(T2.has_diagonal(e2));
        const auto [T3, e3] = flip(T2, e2);
        CHECK(T3 == T);
        CHECK(e3 == e);
      }
    }
  }
}

TEST_CASE("the pentagon flip graph is a five cycle") {
  const auto tris = enumerate_triangulations(5);
  std::map<std::vector<Edge>, std::set<std::vector<Edge>>> nbrs;
  for (const auto& T : tris)
    for (const Edge& e : T.diagonals())
      nbrs[T.diagonals()].insert(flip(T, e).first.diagonals());
  for (const auto& [node, adj] : nbrs) CHECK(adj.size() == 2);
  // connected: walk from one node
  std::set<std::vector<Edge>> seen;
  std::vector<std::vector<Edge>> work = {tris[0].diagonals()};
  while (!work.empty()) {
    auto cur = work.back();
    work.pop_back();
    if (!seen.insert(cur).second) continue;
    for (const auto& nb : nbrs[cur]) work.push_back(nb);
  }
  CHECK(seen.size() == 5);
}

TEST_CASE("exchange matrices are antisymmetric with the documented entries") {
  Triangulation P(5, {mk_edge(0, 2), mk_edge(0, 3)});
  CHECK(epsilon_entry(P, mk_edge(0, 2), mk_edge(0, 3)) == 1);
  CHECK(epsilon_entry(P, mk_edge(0, 3), mk_edge(0, 2)) == -1);

  Triangulation F(6, {mk_edge(0, 2), mk_edge(0, 3), mk_edge(0, 4)});
  CHECK(epsilon_entry(F, mk_edge(0, 2), mk_edge(0, 3)) == 1);
  CHECK(epsilon_entry(F, mk_edge(0, 3), mk_edge(0, 4)) == 1);
  CHECK(epsilon_entry(F, mk_edge(0, 2), mk_edge(0, 4)) == 0);

  for (int k = 4; k <= 7; ++k)
    for (const auto& T : enumerate_triangulations(k)) {
      const auto eps = epsilon_matrix(T);
      const int d = static_cast<int>(eps.size());
      CHECK(d == k - 3);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          CHECK(eps[i][j] == -eps[j][i]);
          CHECK(std::abs(eps[i][j]) <= 1);
        }
    }
}

TEST_CASE("coordinate images are the negative quadrilateral ratio") {
  auto ps = polygon_points(5);
  Triangulation T(5, {mk_edge(0, 2), mk_edge(0, 3)});
  const SwapFraction th = theta_edge(ps, T, mk_edge(0, 2));
  // quad v1, v2, v3, v4: -(yz tx)/(tz yx)
  const SwapFraction want(
      -(SwapPoly::pair(ps, "v2", "v3") * SwapPoly::pair(ps, "v4", "v1")),
      SwapPoly::pair(ps, "v4", "v3") * SwapPoly::pair(ps, "v2", "v1"));
  CHECK(th.eq_in_QP(want));
  CHECK_THROWS_AS(theta_edge(mk_point_set({"a", "b"}), T, mk_edge(0, 2)), PointSetMismatch);
}

TEST_CASE("theta extends to rational functions as a ring homomorphism") {
  auto ps = polygon_points(6);
  Triangulation T(6, {mk_edge(0, 2), mk_edge(2, 4), mk_edge(4, 0)});
  const auto d = T.diagonals();
  const RationalFunc X0 = RationalFunc::var(0), X1 = RationalFunc::var(1),
                     X2 = RationalFunc::var(2);
  const SwapFraction t0 = theta_edge(ps, T, d[0]);
  const SwapFraction t1 = theta_edge(ps, T, d[1]);
  const SwapFraction t2 = theta_edge(ps, T, d[2]);
  CHECK(theta_apply(ps, T, X0 * X1 + X2).eq_in_QP(t0 * t1 + t2));
  CHECK(theta_apply(ps, T, (X0 + X1) / X2).eq_in_QP((t0 + t1) / t2));
  CHECK(theta_apply(ps, T, RationalFunc::constant(Rat(3, 2)))
            .eq_in_QP(SwapFraction::from_poly(SwapPoly::constant(ps, Rat(3, 2)))));
}

TEST_CASE("seeds mutate consistently with flipping the triangulation") {
  for (int k = 4; k <= 6; ++k) {
    for (const auto& T : enumerate_triangulations(k)) {
      const Seed s = make_seed(T);
      CHECK(s.eps == epsilon_matrix(T));
      for (const Edge& e : T.diagonals()) {
        const Seed s2 = mutate(s, e);
        const auto [T2, e2] = flip(T, e);
        CHECK(s2.tri == T2);
        CHECK(s2.eps == epsilon_matrix(T2));
        // mutating back restores the seed exactly
        const Seed s3 = mutate(s2, e2);
        CHECK(s3.tri == T);
        CHECK(s3.eps == s.eps);
        for (size_t i = 0; i < s.coords.size(); ++i)
          CHECK(s3.coords[i].eq(s.coords[i]));
      }
    }
  }
}

TEST_CASE("numeric coordinates from circle values match the defining ratio") {
  Triangulation T(4, {mk_edge(0, 2)});
  const auto vals = fg_from_points({Rat(0), Rat(1), Rat(2), Rat(3)}, T);
  REQUIRE(vals.size() == 1);
  CHECK(vals[0] == Rat(3));

  Triangulation P(5, {mk_edge(0, 2), mk_edge(0, 3)});
  CHECK_THROWS_AS(fg_from_points({Rat(0), Rat(1), Rat(2)}, P), BadParams);
  CHECK_THROWS_AS(fg_from_points({Rat(0), Rat(1), Rat(1), Rat(3), Rat(4)}, P),
                  DegenerateFlags);

  // increasing values model the anticlockwise order, so coordinates are positive
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 4 + static_cast<int>(rng() % 5);
    std::vector<Rat> vs;
    Rat cur(0);
    for (int i = 0; i < k; ++i) {
      cur += Rat(1 + static_cast<int>(rng() % 20), 1 + static_cast<int>(rng() % 7));
      vs.push_back(cur);
    }
    const auto tris = enumerate_triangulations(k);
    const auto& T2 = tris[rng() % tris.size()];
    for (const Rat& x : fg_from_points(vs, T2)) CHECK(x > 0);
  }
}

TEST_CASE("flip paths connect any two triangulations") {
  const Triangulation fan0(6, {mk_edge(0, 2), mk_edge(0, 3), mk_edge(0, 4)});
  const Triangulation fan1(6, {mk_edge(1, 3), mk_edge(1, 4), mk_edge(1, 5)});
  const auto path = flip_path(fan0, fan1);
  CHECK(!path.empty());
  CHECK(path.size() <= 6);
  Triangulation cur = fan0;
  for (const Edge& e : path) cur = flip(cur, e).first;
  CHECK(cur == fan1);
  CHECK(flip_path(fan0, fan0).empty());
  CHECK_THROWS_AS(flip_path(fan0, Triangulation(5, {mk_edge(0, 2), mk_edge(0, 3)})),
                  BadParams);
}

TEST_CASE("mutation along a flip path keeps the exchange relations") {
  const Triangulation fan0(6, {mk_edge(0, 2), mk_edge(0, 3), mk_edge(0, 4)});
  const Triangulation fan1(6, {mk_edge(1, 3), mk_edge(1, 4), mk_edge(1, 5)});
  const auto rep = check_flip_path(fan0, flip_path(fan0, fan1));
  CHECK(rep.passed());
  CHECK(!rep.items.empty());
}

TEST_CASE("the consistency batteries pass on small polygons") {
  for (int k = 4; k <= 5; ++k) {
    for (const auto& T : enumerate_triangulations(k)) {
      CHECK(check_theta_poisson(T).passed());
      for (const Edge& e : T.diagonals()) {
        CHECK(check_flip_compat(T, e).passed());
        CHECK(check_mutation_poisson(T, e).passed());
      }
    }
  }
}
