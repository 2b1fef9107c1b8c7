#include "swapalg/cluster.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "swapalg/bracket.hpp"
#include "swapalg/errors.hpp"
#include "swapalg/rank_model.hpp"

namespace swapalg {

PointSetPtr polygon_points(int k) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(k));
  for (int i = 1; i <= k; ++i) names.push_back("v" + std::to_string(i));
  return mk_point_set(std::move(names));
}

Seed make_seed(const Triangulation& T) {
  Seed s{T, epsilon_matrix(T), {}};
  const int d = static_cast<int>(T.diagonals().size());
  s.coords.reserve(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) s.coords.push_back(RationalFunc::var(i));
  return s;
}

SwapFraction theta_edge(PointSetPtr ps, const Triangulation& T, Edge e) {
  if (ps->size() != T.k()) throw PointSetMismatch("point set does not match the polygon");
  const Quad q = quad_of(T, e);
  const auto pv = [&](int a, int b) { return SwapPoly::pair_at(ps, a, b); };
  SwapPoly num = -(pv(q.y, q.z) * pv(q.t, q.x));
  SwapPoly den = pv(q.t, q.z) * pv(q.y, q.x);
  return SwapFraction(std::move(num), std::move(den));
}

namespace {

SwapFraction frac_pow(const SwapFraction& f, int e) {
  SwapFraction base = e < 0 ? f.inverse() : f;
  SwapFraction acc = SwapFraction::one(f.point_set());
  for (int i = 0; i < (e < 0 ? -e : e); ++i) acc = acc * base;
  return acc;
}

SwapFraction theta_poly(PointSetPtr ps, const std::vector<SwapFraction>& images,
                        const Poly& f) {
  SwapFraction acc = SwapFraction::from_poly(SwapPoly::zero(ps));
  for (const auto& [pp, c] : f.terms()) {
    SwapFraction term = SwapFraction::from_poly(SwapPoly::constant(ps, c));
    for (const auto& [v, e] : pp) {
      if (v < 0 || v >= static_cast<int>(images.size()))
        throw BadParams("coordinate index " + std::to_string(v) + " outside the seed");
      term = term * frac_pow(images[static_cast<size_t>(v)], e);
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace

SwapFraction theta_apply(PointSetPtr ps, const Triangulation& T, const RationalFunc& f) {
  std::vector<SwapFraction> images;
  images.reserve(T.diagonals().size());
  for (const Edge& e : T.diagonals()) images.push_back(theta_edge(ps, T, e));
  return theta_poly(ps, images, f.num()) / theta_poly(ps, images, f.den());
}

RationalFunc fg_bracket(const std::vector<std::vector<int>>& eps, const RationalFunc& f,
                        const RationalFunc& g) {
  const int d = static_cast<int>(eps.size());
  RationalFunc acc;
  for (int a = 0; a < d; ++a) {
    const RationalFunc fa = f.derivative(a);
    if (fa.is_zero()) continue;
    for (int b = 0; b < d; ++b) {
      const int e = eps[static_cast<size_t>(a)][static_cast<size_t>(b)];
      if (e == 0) continue;
      const RationalFunc gb = g.derivative(b);
      if (gb.is_zero()) continue;
      RationalFunc term = RationalFunc::constant(Rat(e)) * RationalFunc::var(a) *
                          RationalFunc::var(b) * fa * gb;
      acc = acc + term;
    }
  }
  return acc;
}

std::vector<RationalFunc> mutation_formulas(const std::vector<std::vector<int>>& eps, int eidx,
                                            int count) {
  if (eidx < 0 || eidx >= count) throw BadParams("mutation index outside the seed");
  std::vector<RationalFunc> out;
  out.reserve(static_cast<size_t>(count));
  const RationalFunc xe = RationalFunc::var(eidx);
  const RationalFunc one_plus = RationalFunc::constant(Rat(1)) + xe;
  const RationalFunc one_plus_inv = RationalFunc::constant(Rat(1)) + xe.inverse();
  for (int i = 0; i < count; ++i) {
    if (i == eidx) {
      out.push_back(xe.inverse());
      continue;
    }
    const int eie = eps[static_cast<size_t>(i)][static_cast<size_t>(eidx)];
    if (eie <= 0)
      out.push_back(RationalFunc::var(i) * one_plus.pow(-eie));
    else
      out.push_back(RationalFunc::var(i) * one_plus_inv.pow(-eie));
  }
  return out;
}

std::vector<std::vector<int>> mutated_epsilon(const std::vector<std::vector<int>>& eps,
                                              int eidx) {
  const int d = static_cast<int>(eps.size());
  std::vector<std::vector<int>> out(static_cast<size_t>(d),
                                    std::vector<int>(static_cast<size_t>(d), 0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const int eij = eps[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (i == eidx || j == eidx) {
        out[static_cast<size_t>(i)][static_cast<size_t>(j)] = -eij;
      } else {
        const int eie = eps[static_cast<size_t>(i)][static_cast<size_t>(eidx)];
        const int eej = eps[static_cast<size_t>(eidx)][static_cast<size_t>(j)];
        out[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            eij + eie * std::max(0, eie * eej);
      }
    }
  return out;
}

Seed mutate(const Seed& s, Edge e) {
  const int eidx = s.tri.index_of(e);
  const int d = static_cast<int>(s.tri.diagonals().size());
  const std::vector<RationalFunc> g = mutation_formulas(s.eps, eidx, d);
  std::vector<RationalFunc> composed;
  composed.reserve(static_cast<size_t>(d));
  for (const RationalFunc& gi : g) composed.push_back(gi.substitute(s.coords));
  const std::vector<std::vector<int>> eps_new = mutated_epsilon(s.eps, eidx);

  auto [tri2, e2] = flip(s.tri, e);
  // Old index i carries over to the slot of its edge in the flipped
  // triangulation; e goes to the slot of the replacement edge.
  std::vector<int> to_new(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    const Edge old_edge = s.tri.diagonals()[static_cast<size_t>(i)];
    to_new[static_cast<size_t>(i)] = tri2.index_of(i == eidx ? e2 : old_edge);
  }
  Seed out{tri2,
           std::vector<std::vector<int>>(static_cast<size_t>(d),
                                         std::vector<int>(static_cast<size_t>(d), 0)),
           std::vector<RationalFunc>(static_cast<size_t>(d))};
  for (int i = 0; i < d; ++i) {
    out.coords[static_cast<size_t>(to_new[static_cast<size_t>(i)])] =
        composed[static_cast<size_t>(i)];
    for (int j = 0; j < d; ++j)
      out.eps[static_cast<size_t>(to_new[static_cast<size_t>(i)])]
             [static_cast<size_t>(to_new[static_cast<size_t>(j)])] =
          eps_new[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return out;
}

std::vector<Rat> fg_from_points(const std::vector<Rat>& values, const Triangulation& T) {
  if (static_cast<int>(values.size()) != T.k())
    throw BadParams("need one value per polygon vertex");
  for (size_t i = 0; i < values.size(); ++i)
    for (size_t j = i + 1; j < values.size(); ++j)
      if (values[i] == values[j]) throw DegenerateFlags("coinciding vertex values");
  std::vector<Rat> out;
  out.reserve(T.diagonals().size());
  for (const Edge& e : T.diagonals()) {
    const Quad q = quad_of(T, e);
    const Rat x = values[static_cast<size_t>(q.x)], y = values[static_cast<size_t>(q.y)],
              z = values[static_cast<size_t>(q.z)], t = values[static_cast<size_t>(q.t)];
    out.push_back(-((y - z) / (t - z)) * ((t - x) / (y - x)));
  }
  return out;
}

bool CheckReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.ok; });
}

CheckReport check_theta_poisson(const Triangulation& T) {
  const PointSetPtr ps = polygon_points(T.k());
  const auto& diags = T.diagonals();
  const int d = static_cast<int>(diags.size());
  const auto eps = epsilon_matrix(T);
  std::vector<SwapFraction> images;
  images.reserve(diags.size());
  for (const Edge& e : diags) images.push_back(theta_edge(ps, T, e));
  CheckReport rep{"theta_poisson " + T.str(), {}};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const SwapFraction lhs = bracket_fraction(images[static_cast<size_t>(i)],
                                                images[static_cast<size_t>(j)]);
      const Rat eij(eps[static_cast<size_t>(i)][static_cast<size_t>(j)]);
      const SwapFraction rhs =
          SwapFraction::from_poly(SwapPoly::constant(ps, eij)) *
          images[static_cast<size_t>(i)] * images[static_cast<size_t>(j)];
      const bool ok = eq_in_Qn(lhs, rhs, 2);
      rep.items.push_back({"{" + edge_name(diags[static_cast<size_t>(i)]) + ", " +
                               edge_name(diags[static_cast<size_t>(j)]) + "}",
                           ok, ok ? "" : "bracket does not match eps * product"});
    }
  return rep;
}

CheckReport check_flip_compat(const Triangulation& T, Edge e) {
  const PointSetPtr ps = polygon_points(T.k());
  const int eidx = T.index_of(e);
  const int d = static_cast<int>(T.diagonals().size());
  const auto eps = epsilon_matrix(T);
  const std::vector<RationalFunc> g = mutation_formulas(eps, eidx, d);
  auto [T2, e2] = flip(T, e);
  CheckReport rep{"flip_compat " + T.str() + " at " + edge_name(e), {}};
  for (int i = 0; i < d; ++i) {
    const Edge target = i == eidx ? e2 : T.diagonals()[static_cast<size_t>(i)];
    const SwapFraction lhs = theta_apply(ps, T, g[static_cast<size_t>(i)]);
    const SwapFraction rhs = theta_edge(ps, T2, target);
    const bool ok = eq_in_Qn(lhs, rhs, 2);
    rep.items.push_back({"coordinate " + edge_name(T.diagonals()[static_cast<size_t>(i)]), ok,
                         ok ? "" : "theta of the transition misses the flipped theta"});
  }
  return rep;
}

CheckReport check_mutation_poisson(const Triangulation& T, Edge e) {
  const int eidx = T.index_of(e);
  const int d = static_cast<int>(T.diagonals().size());
  const auto eps = epsilon_matrix(T);
  const std::vector<RationalFunc> g = mutation_formulas(eps, eidx, d);
  const auto eps2 = mutated_epsilon(eps, eidx);
  CheckReport rep{"mutation_poisson " + T.str() + " at " + edge_name(e), {}};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const RationalFunc lhs =
          fg_bracket(eps, g[static_cast<size_t>(i)], g[static_cast<size_t>(j)]);
      const RationalFunc rhs =
          RationalFunc::constant(Rat(eps2[static_cast<size_t>(i)][static_cast<size_t>(j)])) *
          g[static_cast<size_t>(i)] * g[static_cast<size_t>(j)];
      const bool ok = lhs.eq(rhs);
      rep.items.push_back({"{g(" + edge_name(T.diagonals()[static_cast<size_t>(i)]) + "), g(" +
                               edge_name(T.diagonals()[static_cast<size_t>(j)]) + ")}",
                           ok, ok ? "" : "transition does not transform the bracket by eps'"});
    }
  return rep;
}

std::vector<Edge> flip_path(const Triangulation& from, const Triangulation& to) {
  if (from.k() != to.k()) throw BadParams("flip path needs equal polygon sizes");
  if (from == to) return {};
  std::map<std::vector<Edge>, std::pair<std::vector<Edge>, Edge>> parent;
  std::deque<Triangulation> queue{from};
  parent[from.diagonals()] = {from.diagonals(), Edge{-1, -1}};
  while (!queue.empty()) {
    const Triangulation cur = queue.front();
    queue.pop_front();
    for (const Edge& e : cur.diagonals()) {
      const Triangulation next = flip(cur, e).first;
      if (parent.count(next.diagonals())) continue;
      parent[next.diagonals()] = {cur.diagonals(), e};
      if (next == to) {
        std::vector<Edge> path;
        std::vector<Edge> walk = next.diagonals();
        while (walk != from.diagonals()) {
          const auto& [prev, via] = parent.at(walk);
          path.push_back(via);
          walk = prev;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(next);
    }
  }
  throw BadParams("no flip path found");  // unreachable: the flip graph is connected
}

CheckReport check_flip_path(const Triangulation& start, const std::vector<Edge>& flips) {
  Seed seed = make_seed(start);
  const auto base_eps = seed.eps;
  const int d = static_cast<int>(start.diagonals().size());
  CheckReport rep{"flip_path from " + start.str(), {}};
  int step = 0;
  for (const Edge& e : flips) {
    seed = mutate(seed, e);
    ++step;
    const std::string at = "step " + std::to_string(step) + " (flip " + edge_name(e) + ")";
    const bool eps_ok = seed.eps == epsilon_matrix(seed.tri);
    rep.items.push_back({at + " eps", eps_ok,
                         eps_ok ? "" : "mutated eps differs from the flipped triangulation's"});
    // Composed coordinates must satisfy the current exchange relations under
    // the base seed's bracket.
    bool rel_ok = true;
    std::string bad;
    for (int i = 0; i < d && rel_ok; ++i)
      for (int j = 0; j < d && rel_ok; ++j) {
        const RationalFunc lhs =
            fg_bracket(base_eps, seed.coords[static_cast<size_t>(i)],
                       seed.coords[static_cast<size_t>(j)]);
        const RationalFunc rhs =
            RationalFunc::constant(
                Rat(seed.eps[static_cast<size_t>(i)][static_cast<size_t>(j)])) *
            seed.coords[static_cast<size_t>(i)] * seed.coords[static_cast<size_t>(j)];
        if (!lhs.eq(rhs)) {
          rel_ok = false;
          bad = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    rep.items.push_back({at + " bracket", rel_ok, bad});
  }
  return rep;
}

}  // namespace swapalg
