#pragma once

#include <string>
#include <utility>
#include <vector>

namespace swapalg {

// Unordered edge of the convex k-gon with vertices 0..k-1 in anticlockwise
// order; stored with u < v.
struct Edge {
  int u;
  int v;
  auto operator<=>(const Edge&) const = default;
};

Edge mk_edge(int u, int v);
std::string edge_name(Edge e);  // "v1v3" style, 1-based

// Triangle with ascending vertex indices; ascending order is anticlockwise.
struct Triangle {
  int u;
  int v;
  int w;
  auto operator<=>(const Triangle&) const = default;
};

bool is_polygon_diagonal(int k, Edge e);
bool edges_cross(Edge a, Edge b);

// A triangulation of the convex k-gon: k-3 pairwise non-crossing diagonals.
class Triangulation {
 public:
  Triangulation(int k, std::vector<Edge> diagonals);

  int k() const { return k_; }
  const std::vector<Edge>& diagonals() const { return diagonals_; }
  bool has_diagonal(Edge e) const;
  // Position of a diagonal in the sorted diagonal list.
  int index_of(Edge e) const;
  std::vector<Triangle> triangles() const;

  bool operator==(const Triangulation& other) const = default;
  std::string str() const;

 private:
  int k_;
  std::vector<Edge> diagonals_;  // sorted
};

// All triangulations of the convex k-gon, 4 <= k <= 10, canonically sorted.
std::vector<Triangulation> enumerate_triangulations(int k);

// The quadrilateral around a diagonal {x,z}, traversed anticlockwise as
// x,y,z,t: x < z, y is the apex on the arc from x to z, t the other apex.
struct Quad {
  int x;
  int y;
  int z;
  int t;
};
Quad quad_of(const Triangulation& T, Edge e);

// Replaces the diagonal e by the opposite diagonal of its quadrilateral.
std::pair<Triangulation, Edge> flip(const Triangulation& T, Edge e);

// Exchange matrix indexed by diagonal positions: for each triangle with
// anticlockwise vertices (u,v,w) the ordered pairs (uv,uw), (vw,vu), (wu,wv)
// contribute +1, their reverses -1, restricted to diagonals.
std::vector<std::vector<int>> epsilon_matrix(const Triangulation& T);
int epsilon_entry(const Triangulation& T, Edge a, Edge b);

}  // namespace swapalg
