#pragma once

#include <string>
#include <vector>

#include "swapalg/rational_func.hpp"
#include "swapalg/swap_fraction.hpp"
#include "swapalg/triangulation.hpp"

namespace swapalg {

// Vertex set of the k-gon as circle points v1..vk, anticlockwise.
PointSetPtr polygon_points(int k);

// A seed: a triangulation together with its exchange matrix and one
// coordinate per diagonal. Coordinates are rational functions of the base
// seed's variables, so flip sequences stay exactly composable.
struct Seed {
  Triangulation tri;
  std::vector<std::vector<int>> eps;
  std::vector<RationalFunc> coords;
};

// Fresh seed: eps from the triangulation, coordinate i the variable X_i.
Seed make_seed(const Triangulation& T);

// Coordinate image of one diagonal: for the quadrilateral x,y,z,t around
// e = {x,z}, theta(X_e) = -(yz * tx)/(tz * yx) over the polygon vertex set.
SwapFraction theta_edge(PointSetPtr ps, const Triangulation& T, Edge e);

// Ring-homomorphic extension: variable i is the i-th diagonal of T.
SwapFraction theta_apply(PointSetPtr ps, const Triangulation& T, const RationalFunc& f);

// Bracket determined by {X_a, X_b} = eps(a,b) X_a X_b, extended as a
// biderivation with the quotient rule.
RationalFunc fg_bracket(const std::vector<std::vector<int>>& eps, const RationalFunc& f,
                        const RationalFunc& g);

// Coordinate transition of the mutation at e: entry i is g_e(X_i) as a
// rational function of the current seed's variables.
std::vector<RationalFunc> mutation_formulas(const std::vector<std::vector<int>>& eps, int eidx,
                                            int count);
// Mutated exchange matrix in the current indexing (e identified with e').
std::vector<std::vector<int>> mutated_epsilon(const std::vector<std::vector<int>>& eps,
                                              int eidx);

// Full mutation: flips the triangulation, mutates eps, composes coordinates;
// everything reindexed to the flipped triangulation's diagonal order.
Seed mutate(const Seed& s, Edge e);

// Numeric coordinates from one rational value per vertex (pairwise distinct):
// X_e = -((y-z)/(t-z)) * ((t-x)/(y-x)) per diagonal.
std::vector<Rat> fg_from_points(const std::vector<Rat>& values, const Triangulation& T);

struct CheckItem {
  std::string label;
  bool ok;
  std::string detail;
};

struct CheckReport {
  std::string name;
  std::vector<CheckItem> items;
  bool passed() const;
};

// For every pair of diagonals: bracket of the theta images equals
// eps(i,j) times their product, in the rank-2 quotient.
CheckReport check_theta_poisson(const Triangulation& T);

// For every coordinate: theta_T(g_e(X_i)) equals theta_T'(X_i') in the
// rank-2 quotient, with e identified with the flipped edge.
CheckReport check_flip_compat(const Triangulation& T, Edge e);

// For every coordinate pair: {g_e(X_i), g_e(X_j)} under the old eps equals
// eps'(i,j) g_e(X_i) g_e(X_j), as exact rational-function identities.
CheckReport check_mutation_poisson(const Triangulation& T, Edge e);

// Shortest flip sequence turning one triangulation into another.
std::vector<Edge> flip_path(const Triangulation& from, const Triangulation& to);

// Mutates along the given edges from a fresh seed of `start`; after each step
// checks eps against the flipped triangulation and verifies the composed
// coordinates satisfy the current exchange relations in the base bracket.
CheckReport check_flip_path(const Triangulation& start, const std::vector<Edge>& flips);

}  // namespace swapalg
