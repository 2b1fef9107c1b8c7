#include "swapalg/triangulation.hpp"

#include <algorithm>

#include "swapalg/errors.hpp"

namespace swapalg {

Edge mk_edge(int u, int v) {
  if (u > v) std::swap(u, v);
  return Edge{u, v};
}

std::string edge_name(Edge e) {
  return "v" + std::to_string(e.u + 1) + "v" + std::to_string(e.v + 1);
}

bool is_polygon_diagonal(int k, Edge e) {
  if (e.u < 0 || e.v >= k || e.u >= e.v) return false;
  const bool boundary = (e.v == e.u + 1) || (e.u == 0 && e.v == k - 1);
  return !boundary;
}

bool edges_cross(Edge a, Edge b) {
  // Proper crossing of chords in convex position: endpoints interleave.
  const auto inside = [](int x, Edge e) { return e.u < x && x < e.v; };
  return (inside(b.u, a) && !inside(b.v, a) && b.v != a.u && b.v != a.v) ||
         (inside(b.v, a) && !inside(b.u, a) && b.u != a.u && b.u != a.v);
}

Triangulation::Triangulation(int k, std::vector<Edge> diagonals) : k_(k) {
  if (k < 4) throw UnsupportedSize("triangulation needs a polygon with at least 4 vertices");
  for (const Edge& e : diagonals)
    if (!is_polygon_diagonal(k, e))
      throw NotADiagonal(edge_name(e) + " is not a diagonal of the " + std::to_string(k) +
                         "-gon");
  std::sort(diagonals.begin(), diagonals.end());
  if (std::adjacent_find(diagonals.begin(), diagonals.end()) != diagonals.end())
    throw BadParams("duplicate diagonal");
  if (static_cast<int>(diagonals.size()) != k - 3)
    throw BadParams("a triangulation of the " + std::to_string(k) + "-gon has " +
                    std::to_string(k - 3) + " diagonals");
  for (size_t i = 0; i < diagonals.size(); ++i)
    for (size_t j = i + 1; j < diagonals.size(); ++j)
      if (edges_cross(diagonals[i], diagonals[j]))
        throw BadParams("diagonals " + edge_name(diagonals[i]) + " and " +
                        edge_name(diagonals[j]) + " cross");
  diagonals_ = std::move(diagonals);
}

bool Triangulation::has_diagonal(Edge e) const {
  return std::binary_search(diagonals_.begin(), diagonals_.end(), e);
}

int Triangulation::index_of(Edge e) const {
  const auto it = std::lower_bound(diagonals_.begin(), diagonals_.end(), e);
  if (it == diagonals_.end() || *it != e)
    throw NotADiagonal(edge_name(e) + " is not a diagonal of this triangulation");
  return static_cast<int>(it - diagonals_.begin());
}

std::vector<Triangle> Triangulation::triangles() const {
  // In convex position every 3-clique of the edge graph bounds a face.
  std::vector<std::vector<bool>> adj(static_cast<size_t>(k_),
                                     std::vector<bool>(static_cast<size_t>(k_), false));
  const auto connect = [&](int a, int b) {
    adj[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
    adj[static_cast<size_t>(b)][static_cast<size_t>(a)] = true;
  };
  for (int i = 0; i < k_; ++i) connect(i, (i + 1) % k_);
  for (const Edge& e : diagonals_) connect(e.u, e.v);
  std::vector<Triangle> out;
  for (int u = 0; u < k_; ++u)
    for (int v = u + 1; v < k_; ++v) {
      if (!adj[static_cast<size_t>(u)][static_cast<size_t>(v)]) continue;
      for (int w = v + 1; w < k_; ++w)
        if (adj[static_cast<size_t>(u)][static_cast<size_t>(w)] &&
            adj[static_cast<size_t>(v)][static_cast<size_t>(w)])
          out.push_back(Triangle{u, v, w});
    }
  return out;
}

std::string Triangulation::str() const {
  std::string s = "{";
  for (size_t i = 0; i < diagonals_.size(); ++i) {
    if (i) s += ", ";
    s += edge_name(diagonals_[i]);
  }
  return s + "}";
}

namespace {

// Triangulations of the sub-polygon lo, lo+1, ..., hi, as diagonal lists
// that exclude the chord {lo, hi} itself: split on the apex of the triangle
// over that chord.
std::vector<std::vector<Edge>> enumerate_range(int lo, int hi) {
  std::vector<std::vector<Edge>> out;
  if (hi - lo < 2) {
    out.emplace_back();
    return out;
  }
  for (int m = lo + 1; m < hi; ++m) {
    const auto left = enumerate_range(lo, m);
    const auto right = enumerate_range(m, hi);
    for (const auto& l : left)
      for (const auto& r : right) {
        std::vector<Edge> full;
        if (m > lo + 1) full.push_back(Edge{lo, m});
        if (hi > m + 1) full.push_back(Edge{m, hi});
        full.insert(full.end(), l.begin(), l.end());
        full.insert(full.end(), r.begin(), r.end());
        out.push_back(std::move(full));
      }
  }
  return out;
}

}  // namespace

std::vector<Triangulation> enumerate_triangulations(int k) {
  if (k < 4 || k > 10)
    throw UnsupportedSize("triangulation enumeration supports 4 <= k <= 10");
  std::vector<std::vector<Edge>> raw = enumerate_range(0, k - 1);
  std::vector<Triangulation> out;
  out.reserve(raw.size());
  for (auto& d : raw) out.emplace_back(k, std::move(d));
  std::sort(out.begin(), out.end(),
            [](const Triangulation& a, const Triangulation& b) {
              return a.diagonals() < b.diagonals();
            });
  return out;
}

Quad quad_of(const Triangulation& T, Edge e) {
  T.index_of(e);  // throws NotADiagonal when absent
  int apex_in = -1, apex_out = -1;
  for (const Triangle& t : T.triangles()) {
    const int vs[3] = {t.u, t.v, t.w};
    int other = -1;
    int hit = 0;
    for (int x : vs) {
      if (x == e.u || x == e.v)
        ++hit;
      else
        other = x;
    }
    if (hit == 2) {
      if (e.u < other && other < e.v)
        apex_in = other;
      else
        apex_out = other;
    }
  }
  return Quad{e.u, apex_in, e.v, apex_out};
}

std::pair<Triangulation, Edge> flip(const Triangulation& T, Edge e) {
  const Quad q = quad_of(T, e);
  const Edge replacement = mk_edge(q.y, q.t);
  std::vector<Edge> diags;
  diags.reserve(T.diagonals().size());
  for (const Edge& d : T.diagonals()) diags.push_back(d == e ? replacement : d);
  return {Triangulation(T.k(), std::move(diags)), replacement};
}

std::vector<std::vector<int>> epsilon_matrix(const Triangulation& T) {
  const int d = static_cast<int>(T.diagonals().size());
  std::vector<std::vector<int>> eps(static_cast<size_t>(d),
                                    std::vector<int>(static_cast<size_t>(d), 0));
  const auto add = [&](Edge a, Edge b, int val) {
    if (!T.has_diagonal(a) || !T.has_diagonal(b)) return;
    const int i = T.index_of(a), j = T.index_of(b);
    eps[static_cast<size_t>(i)][static_cast<size_t>(j)] += val;
    eps[static_cast<size_t>(j)][static_cast<size_t>(i)] -= val;
  };
  for (const Triangle& t : T.triangles()) {
    add(mk_edge(t.u, t.v), mk_edge(t.u, t.w), 1);
    add(mk_edge(t.v, t.w), mk_edge(t.v, t.u), 1);
    add(mk_edge(t.w, t.u), mk_edge(t.w, t.v), 1);
  }
  return eps;
}

int epsilon_entry(const Triangulation& T, Edge a, Edge b) {
  const auto eps = epsilon_matrix(T);
  return eps[static_cast<size_t>(T.index_of(a))][static_cast<size_t>(T.index_of(b))];
}

}  // namespace swapalg
