#include "swapalg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <thread>

#include "json.hpp"
#include "swapalg/bracket.hpp"
#include "swapalg/cluster.hpp"
#include "swapalg/cross_ratio.hpp"
#include "swapalg/determinant.hpp"
#include "swapalg/errors.hpp"
#include "swapalg/rank_model.hpp"

namespace swapalg {

namespace {

using Params = std::map<std::string, std::string>;

// ---- parameter handling ----

class ParamReader {
 public:
  explicit ParamReader(const Params& given) : given_(given) {}

  int get_int(const std::string& key, int def, int lo, int hi) {
    const std::string raw = take(key, std::to_string(def));
    int v = 0;
    try {
      size_t pos = 0;
      v = std::stoi(raw, &pos);
      if (pos != raw.size()) throw std::invalid_argument(raw);
    } catch (const std::exception&) {
      throw BadParams("parameter " + key + " needs an integer, got '" + raw + "'");
    }
    if (v < lo || v > hi)
      throw BadParams("parameter " + key + " = " + raw + " outside [" + std::to_string(lo) +
                      ", " + std::to_string(hi) + "]");
    canon_[key] = std::to_string(v);
    return v;
  }

  std::string get_choice(const std::string& key, const std::string& def,
                         const std::vector<std::string>& allowed) {
    const std::string v = take(key, def);
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) {
      std::string opts;
      for (const auto& a : allowed) opts += (opts.empty() ? "" : ", ") + a;
      throw BadParams("parameter " + key + " must be one of: " + opts);
    }
    return v;
  }

  void finish() const {
    for (const auto& [k, v] : given_)
      if (!used_.count(k)) throw BadParams("unknown parameter " + k);
  }

  const Params& canonical() const { return canon_; }

 private:
  std::string take(const std::string& key, const std::string& def) {
    used_.insert(key);
    const auto it = given_.find(key);
    const std::string v = it == given_.end() ? def : it->second;
    canon_[key] = v;
    return v;
  }

  const Params& given_;
  Params canon_;
  std::set<std::string> used_;
};

// Rank parameters reject 1 explicitly: the rank-1 quotient has zero
// divisors, so none of the quotient-based suites apply there.
int get_rank(ParamReader& pr, int def) {
  const int n = pr.get_int("n", def, 1, 4);
  if (n < 2) throw BadParams("rank 1 unsupported: the rank-1 quotient is not an integral domain");
  return n;
}

// ---- deterministic parallel runner ----

struct UnitResult {
  int checks = 0;
  std::vector<Failure> failures;
};

int thread_cap() {
  if (const char* env = std::getenv("SWAPALG_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return std::min(v, 64);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(std::min(hc, 64u));
}

UnitResult run_units(int units, const std::function<UnitResult(int)>& unit) {
  const auto safe_unit = [&](int u) -> UnitResult {
    try {
      return unit(u);
    } catch (const std::exception& e) {
      return UnitResult{0, {Failure{"unit " + std::to_string(u), "no exception", e.what()}}};
    }
  };
  std::vector<UnitResult> results(static_cast<size_t>(std::max(units, 0)));
  const int threads = std::min(thread_cap(), std::max(units, 1));
  if (threads <= 1) {
    for (int u = 0; u < units; ++u) results[static_cast<size_t>(u)] = safe_unit(u);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&]() {
        for (int u = next.fetch_add(1); u < units; u = next.fetch_add(1))
          results[static_cast<size_t>(u)] = safe_unit(u);
      });
    for (auto& th : pool) th.join();
  }
  UnitResult merged;
  for (auto& r : results) {
    merged.checks += r.checks;
    merged.failures.insert(merged.failures.end(), r.failures.begin(), r.failures.end());
  }
  return merged;
}

std::mt19937_64 unit_rng(std::uint64_t seed, int unit) {
  std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(unit + 1)));
  rng.discard(7);
  return rng;
}

// ---- random element generators ----

int random_index(std::mt19937_64& rng, int n) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

Rat random_coeff(std::mt19937_64& rng) {
  static const Rat pool[6] = {rat(1), rat(-1), rat(2), rat(-2), rat(1, 2), rat(-1, 2)};
  return pool[random_index(rng, 6)];
}

PairVar random_pair(std::mt19937_64& rng, int p) {
  const int l = random_index(rng, p);
  int r = random_index(rng, p - 1);
  if (r >= l) ++r;
  return PairVar{l, r};
}

SwapPoly random_monomial(const PointSetPtr& ps, std::mt19937_64& rng, int max_deg) {
  const int d = 1 + random_index(rng, max_deg);
  Monomial m;
  m.reserve(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) m.push_back(random_pair(rng, ps->size()));
  std::sort(m.begin(), m.end());
  return SwapPoly::monomial(ps, random_coeff(rng), std::move(m));
}

SwapPoly random_poly(const PointSetPtr& ps, std::mt19937_64& rng, int max_deg, int max_terms) {
  const int t = 1 + random_index(rng, max_terms);
  SwapPoly f = SwapPoly::zero(ps);
  for (int i = 0; i < t; ++i) f = f + random_monomial(ps, rng, max_deg);
  return f;
}

std::vector<int> random_distinct(std::mt19937_64& rng, int p, int count) {
  std::vector<int> idx(static_cast<size_t>(p));
  for (int i = 0; i < p; ++i) idx[static_cast<size_t>(i)] = i;
  for (int i = 0; i < count; ++i)
    std::swap(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(i + random_index(rng, p - i))]);
  idx.resize(static_cast<size_t>(count));
  return idx;
}

DeterminantSpec random_spec(const PointSetPtr& ps, std::mt19937_64& rng, int size) {
  return make_det_spec_at(ps, random_distinct(rng, ps->size(), size),
                          random_distinct(rng, ps->size(), size));
}

PointSetPtr letter_points(int p) {
  static const char* kNames[] = {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l"};
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(p));
  for (int i = 0; i < p; ++i) names.emplace_back(kNames[i]);
  return mk_point_set(std::move(names));
}

std::string points_str(const PointSetPtr& ps) {
  std::string s;
  for (int i = 0; i < ps->size(); ++i) {
    if (i) s += ",";
    s += ps->name(i);
  }
  return s;
}

std::string spec_str(const PointSetPtr& ps, const DeterminantSpec& spec) {
  std::string s = "det([";
  for (size_t i = 0; i < spec.xs.size(); ++i) {
    if (i) s += ",";
    s += ps->name(spec.xs[i]);
  }
  s += "],[";
  for (size_t i = 0; i < spec.ys.size(); ++i) {
    if (i) s += ",";
    s += ps->name(spec.ys[i]);
  }
  return s + "])";
}

std::string pair_str(const PointSetPtr& ps, int l, int r) {
  return "p(" + ps->name(l) + "," + ps->name(r) + ")";
}

std::vector<std::vector<int>> distinct_tuples(int p, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(static_cast<size_t>(p), false);
  const std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < p; ++i) {
      if (used[static_cast<size_t>(i)]) continue;
      used[static_cast<size_t>(i)] = true;
      cur.push_back(i);
      rec();
      cur.pop_back();
      used[static_cast<size_t>(i)] = false;
    }
  };
  rec();
  return out;
}

// ---- suites ----

SuiteReport suite_jacobi(const Params& given, std::uint64_t seed) {
  ParamReader pr(given);
  const std::string mode = pr.get_choice("mode", "exhaustive", {"exhaustive", "random"});
  const int points = pr.get_int("points", mode == "exhaustive" ? 5 : 8, 2, 12);
  const int trials = mode == "random" ? pr.get_int("trials", 1000, 1, 1000000) : 0;
  pr.finish();
  const PointSetPtr ps = letter_points(points);
  SuiteReport rep{"jacobi", pr.canonical(), seed, 0, {}, 0};
  UnitResult merged;
  if (mode == "exhaustive") {
    std::vector<PairVar> gens;
    for (int l = 0; l < points; ++l)
      for (int r = 0; r < points; ++r)
        if (l != r) gens.push_back(PairVar{l, r});
    const int G = static_cast<int>(gens.size());
    merged = run_units(G, [&](int u) {
      UnitResult res;
      const SwapPoly f = SwapPoly::pair_at(ps, gens[static_cast<size_t>(u)].l,
                                           gens[static_cast<size_t>(u)].r);
      const std::string fs = pair_str(ps, gens[static_cast<size_t>(u)].l,
                                      gens[static_cast<size_t>(u)].r);
      for (int j = 0; j < G; ++j) {
        const SwapPoly g = SwapPoly::pair_at(ps, gens[static_cast<size_t>(j)].l,
                                             gens[static_cast<size_t>(j)].r);
        const std::string gs = pair_str(ps, gens[static_cast<size_t>(j)].l,
                                        gens[static_cast<size_t>(j)].r);
        ++res.checks;
        const SwapPoly anti = bracket_poly(f, g) + bracket_poly(g, f);
        if (!anti.is_zero())
          res.failures.push_back({"points=" + points_str(ps) + "; br(" + fs + "," + gs +
                                      ") + br(" + gs + "," + fs + ")",
                                  "0", anti.str()});
        for (int k = 0; k < G; ++k) {
          const SwapPoly h = SwapPoly::pair_at(ps, gens[static_cast<size_t>(k)].l,
                                               gens[static_cast<size_t>(k)].r);
          ++res.checks;
          const SwapPoly jac = bracket_poly(f, bracket_poly(g, h)) +
                               bracket_poly(g, bracket_poly(h, f)) +
                               bracket_poly(h, bracket_poly(f, g));
          if (!jac.is_zero())
            res.failures.push_back(
                {"points=" + points_str(ps) + "; jacobi(" + fs + "," + gs + "," +
                     pair_str(ps, gens[static_cast<size_t>(k)].l, gens[static_cast<size_t>(k)].r) +
                     ")",
                 "0", jac.str()});
        }
      }
      return res;
    });
  } else {
    merged = run_units(trials, [&](int u) {
      UnitResult res;
      auto rng = unit_rng(seed, u);
      const SwapPoly f = random_monomial(ps, rng, 3);
      const SwapPoly g = random_monomial(ps, rng, 3);
      const SwapPoly h = random_monomial(ps, rng, 3);
      const std::string inputs = "points=" + points_str(ps) + "; f=" + f.str() +
                                 "; g=" + g.str() + "; h=" + h.str();
      ++res.checks;
      const SwapPoly anti = bracket_poly(f, g) + bracket_poly(g, f);
      if (!anti.is_zero()) res.failures.push_back({inputs + "; antisymmetry", "0", anti.str()});
      ++res.checks;
      const SwapPoly jac = bracket_poly(f, bracket_poly(g, h)) +
                           bracket_poly(g, bracket_poly(h, f)) +
                           bracket_poly(h, bracket_poly(f, g));
      if (!jac.is_zero()) res.failures.push_back({inputs + "; jacobi", "0", jac.str()});
      return res;
    });
  }
  rep.trials = merged.checks;
  rep.failures = std::move(merged.failures);
  return rep;
}

SuiteReport suite_poisson_ideal(const Params& given, std::uint64_t seed) {
  ParamReader pr(given);
  const int n = get_rank(pr, 2);
  const int size = pr.get_int("size", n + 1, 2, 4);
  const int points = pr.get_int("points", 6, size, 12);
  const int trials = pr.get_int("trials", 200, 1, 100000);
  pr.finish();
  const PointSetPtr ps = letter_points(points);
  SuiteReport rep{"poisson_ideal", pr.canonical(), seed, 0, {}, 0};
  UnitResult merged = run_units(trials, [&](int u) {
    UnitResult res;
    auto rng = unit_rng(seed, u);
    const DeterminantSpec spec = random_spec(ps, rng, size);
    const SwapPoly det = determinant(ps, spec);
    for (int a = 0; a < points; ++a)
      for (int b = 0; b < points; ++b) {
        if (a == b) continue;
        ++res.checks;
        const SwapPoly br = bracket_poly(SwapPoly::pair_at(ps, a, b), det);
        if (!is_zero_Zn(br, n))
          res.failures.push_back({"points=" + points_str(ps) + "; br(" + pair_str(ps, a, b) +
                                      "," + spec_str(ps, spec) + ")",
                                  "0 in the rank-" + std::to_string(n) + " quotient",
                                  "nonzero normal form"});
      }
    return res;
  });
  rep.trials = merged.checks;
  rep.failures = std::move(merged.failures);
  return rep;
}

SuiteReport suite_delta_r_l(const Params& given, std::uint64_t seed) {
  ParamReader pr(given);
  const std::string mode = pr.get_choice("mode", "exhaustive", {"exhaustive", "random"});
  const int size = pr.get_int("size", 3, 2, 4);
  const int points = pr.get_int("points", mode == "exhaustive" ? 6 : 8, size, 12);
  const int trials = mode == "random" ? pr.get_int("trials", 100, 1, 100000) : 0;
  pr.finish();
  const PointSetPtr ps = letter_points(points);
  SuiteReport rep{"delta_r_l", pr.canonical(), seed, 0, {}, 0};

  const auto check_config = [&](UnitResult& res, int a, int b, const DeterminantSpec& spec) {
    const SwapPoly det = determinant(ps, spec);
    const SwapPoly lhs = bracket_poly(SwapPoly::pair_at(ps, a, b), det);
    const std::string label = "points=" + points_str(ps) + "; br(" + pair_str(ps, a, b) + "," +
                              spec_str(ps, spec) + ")";
    ++res.checks;
    const SwapPoly dr = delta_R(ps, a, b, spec);
    if (!(lhs == dr))
      res.failures.push_back({label + "; right expansion", lhs.str(), dr.str()});
    ++res.checks;
    const SwapPoly dl = delta_L(ps, a, b, spec);
    if (!(lhs == dl))
      res.failures.push_back({label + "; left expansion", lhs.str(), dl.str()});
  };

  UnitResult merged;
  if (mode == "exhaustive") {
    const std::vector<std::vector<int>> tuples = distinct_tuples(points, size);
    std::vector<std::pair<int, int>> abs;
    for (int a = 0; a < points; ++a)
      for (int b = 0; b < points; ++b)
        if (a != b) abs.emplace_back(a, b);
    merged = run_units(static_cast<int>(abs.size()), [&](int u) {
      UnitResult res;
      const auto [a, b] = abs[static_cast<size_t>(u)];
      for (const auto& xs : tuples)
        for (const auto& ys : tuples)
          check_config(res, a, b, make_det_spec_at(ps, xs, ys));
      return res;
    });
  } else {
    merged = run_units(trials, [&](int u) {
      UnitResult res;
      auto rng = unit_rng(seed, u);
      const int a = random_index(rng, points);
      int b = random_index(rng, points - 1);
      if (b >= a) ++b;
      check_config(res, a, b, random_spec(ps, rng, size));
      return res;
    });
  }
  rep.trials = merged.checks;
  rep.failures = std::move(merged.failures);
  return rep;
}

SuiteReport suite_domain(const Params& given, std::uint64_t seed) {
  ParamReader pr(given);
  const int n = get_rank(pr, 2);
  const int points = pr.get_int("points", 5, 2, 12);
  const int trials = pr.get_int("trials", 100, 1, 100000);
  const int degree = pr.get_int("degree", 2, 1, 3);
  pr.finish();
  const PointSetPtr ps = letter_points(points);
  SuiteReport rep{"domain", pr.canonical(), seed, 0, {}, 0};
  UnitResult merged = run_units(trials, [&](int u) {
    UnitResult res;
    auto rng = unit_rng(seed, u);
    const auto nonzero_elem = [&]() {
      for (int attempt = 0; attempt < 64; ++attempt) {
        SwapPoly f = random_poly(ps, rng, degree, 4);
        if (!is_zero_Zn(f, n)) return f;
      }
      throw BadParams("could not sample a nonzero element");  // practically unreachable
    };
    const SwapPoly f = nonzero_elem();
    const SwapPoly g = nonzero_elem();
    ++res.checks;
    if (is_zero_Zn(f * g, n))
      res.failures.push_back({"points=" + points_str(ps) + "; f=" + f.str() + "; g=" + g.str(),
                              "nonzero product of nonzero classes",
                              "product reduces to 0 in the rank-" + std::to_string(n) +
                                  " quotient"});
    return res;
  });
  rep.trials = merged.checks;
  rep.failures = std::move(merged.failures);
  return rep;
}

SuiteReport suite_cross_ratio(const Params& given, std::uint64_t seed) {
  ParamReader pr(given);
  const int points = pr.get_int("points", 6, 6, 12);
  pr.finish();
  const PointSetPtr ps = letter_points(points);
  SuiteReport rep{"cross_ratio", pr.canonical(), seed, 0, {}, 0};
  const auto cf = [&](int x, int y, int z, int t) { return cross_fraction_at(ps, x, y, z, t); };
  const auto tuple_str = [&](std::initializer_list<int> v) {
    std::string s = "(";
    bool first = true;
    for (int i : v) {
      if (!first) s += ",";
      first = false;
      s += ps->name(i);
    }
    return s + ")";
  };
  UnitResult merged = run_units(points, [&](int a) {
    UnitResult res;
    const SwapFraction unit_frac = SwapFraction::one(ps);
    for (int b = 0; b < points; ++b)
      for (int c = 0; c < points; ++c)
        for (int d = 0; d < points; ++d) {
          if (a != d && b != c) {
            const SwapFraction x = cf(a, b, c, d);
            ++res.checks;
            if (!x.eq_in_QP(cf(b, a, d, c)))
              res.failures.push_back({"swap symmetry at " + tuple_str({a, b, c, d}),
                                      "[a,b,c,d] = [b,a,d,c]", "sides differ"});
            ++res.checks;
            if (x.is_zero() != (a == c || b == d))
              res.failures.push_back({"zero locus at " + tuple_str({a, b, c, d}),
                                      "zero iff first=third or second=fourth", "mismatch"});
            ++res.checks;
            if (x.eq_in_QP(unit_frac) != (a == b || c == d))
              res.failures.push_back({"unit locus at " + tuple_str({a, b, c, d}),
                                      "one iff first=second or third=fourth", "mismatch"});
          }
          for (int e = 0; e < points; ++e) {
            if (a != d && b != c && a != e && b != d) {
              ++res.checks;
              if (!(cf(a, b, c, d) * cf(a, b, d, e)).eq_in_QP(cf(a, b, c, e)))
                res.failures.push_back({"chain in the last slot at " + tuple_str({a, b, c, d, e}),
                                        "[a,b,c,d]*[a,b,d,e] = [a,b,c,e]", "sides differ"});
            }
            if (a != e && b != d && b != e && c != d) {
              ++res.checks;
              if (!(cf(a, b, d, e) * cf(b, c, d, e)).eq_in_QP(cf(a, c, d, e)))
                res.failures.push_back({"two-slot chain at " + tuple_str({a, b, c, d, e}),
                                        "[a,b,d,e]*[b,c,d,e] = [a,c,d,e]", "sides differ"});
            }
          }
        }
    return res;
  });
  // The printed two-slot chain with an unbound fifth point on the right:
  // recorded as unverifiable; it would be a failure if some binding made it
  // hold, as that would contradict the corrected form's uniqueness.
  ++merged.checks;
  {
    const SwapFraction lhs = cf(0, 1, 3, 4) * cf(1, 2, 3, 4);
    for (int f = 0; f < points; ++f) {
      if (f == 0 || f == 4) continue;
      if (lhs.eq_in_QP(cf(0, 2, 4, f))) {
        merged.failures.push_back({"printed two-slot chain, binding f=" + ps->name(f),
                                   "no binding of the unbound symbol satisfies it",
                                   "holds for f=" + ps->name(f)});
      }
    }
  }
  rep.trials = merged.checks;
  rep.failures = std::move(merged.failures);
  return rep;
}

SuiteReport suite_nesting(const Params& given, std::uint64_t seed) {
  ParamReader pr(given);
  const int n = get_rank(pr, 2);
  const int size = pr.get_int("size", 4, 2, 4);
  if (size < n + 1)
    throw BadParams("determinants of size " + std::to_string(size) +
                    " do not lie in the rank-" + std::to_string(n) + " ideal");
  const int points = pr.get_int("points", 6, size, 12);
  const int trials = pr.get_int("trials", 20, 1, 100000);
  pr.finish();
  const PointSetPtr ps = letter_points(points);
  SuiteReport rep{"nesting", pr.canonical(), seed, 0, {}, 0};
  UnitResult merged = run_units(trials, [&](int u) {
    UnitResult res;
    auto rng = unit_rng(seed, u);
    const DeterminantSpec spec = random_spec(ps, rng, size);
    ++res.checks;
    if (!is_zero_Zn(determinant(ps, spec), n))
      res.failures.push_back({"points=" + points_str(ps) + "; " + spec_str(ps, spec),
                              "0 in the rank-" + std::to_string(n) + " quotient",
                              "nonzero normal form"});
    return res;
  });
  rep.trials = merged.checks;
  rep.failures = std::move(merged.failures);
  return rep;
}

void absorb_report(UnitResult& res, const CheckReport& cr, const std::string& prefix) {
  for (const CheckItem& item : cr.items) {
    ++res.checks;
    if (!item.ok) res.failures.push_back({prefix + cr.name + "; " + item.label,
                                          "identity holds", item.detail});
  }
}

SuiteReport suite_theta_poisson(const Params& given, std::uint64_t seed) {
  ParamReader pr(given);
  const int k = pr.get_int("k", 5, 4, 8);
  pr.finish();
  const std::vector<Triangulation> tris = enumerate_triangulations(k);
  SuiteReport rep{"theta_poisson", pr.canonical(), seed, 0, {}, 0};
  UnitResult merged = run_units(static_cast<int>(tris.size()), [&](int u) {
    UnitResult res;
    absorb_report(res, check_theta_poisson(tris[static_cast<size_t>(u)]),
                  "k=" + std::to_string(k) + "; ");
    return res;
  });
  rep.trials = merged.checks;
  rep.failures = std::move(merged.failures);
  return rep;
}

std::vector<std::pair<Triangulation, Edge>> diagonal_jobs(int k) {
  std::vector<std::pair<Triangulation, Edge>> jobs;
  for (const Triangulation& T : enumerate_triangulations(k))
    for (const Edge& e : T.diagonals()) jobs.emplace_back(T, e);
  return jobs;
}

SuiteReport suite_flip_compat(const Params& given, std::uint64_t seed) {
  ParamReader pr(given);
  const int k = pr.get_int("k", 5, 4, 8);
  pr.finish();
  const auto jobs = diagonal_jobs(k);
  SuiteReport rep{"flip_compat", pr.canonical(), seed, 0, {}, 0};
  UnitResult merged = run_units(static_cast<int>(jobs.size()), [&](int u) {
    UnitResult res;
    const auto& [T, e] = jobs[static_cast<size_t>(u)];
    absorb_report(res, check_flip_compat(T, e), "k=" + std::to_string(k) + "; ");
    return res;
  });
  rep.trials = merged.checks;
  rep.failures = std::move(merged.failures);
  return rep;
}

SuiteReport suite_mutation_poisson(const Params& given, std::uint64_t seed) {
  ParamReader pr(given);
  const int k = pr.get_int("k", 5, 4, 8);
  pr.finish();
  const auto jobs = diagonal_jobs(k);
  // For the hexagon, additionally follow a full flip path between the two
  // disjoint fan triangulations, re-checking the exchange relations of the
  // composed coordinates at every step.
  const bool with_path = k == 6;
  const int units = static_cast<int>(jobs.size()) + (with_path ? 1 : 0);
  SuiteReport rep{"mutation_poisson", pr.canonical(), seed, 0, {}, 0};
  UnitResult merged = run_units(units, [&](int u) {
    UnitResult res;
    if (u < static_cast<int>(jobs.size())) {
      const auto& [T, e] = jobs[static_cast<size_t>(u)];
      absorb_report(res, check_mutation_poisson(T, e), "k=" + std::to_string(k) + "; ");
    } else {
      const Triangulation fan0(6, {Edge{0, 2}, Edge{0, 3}, Edge{0, 4}});
      const Triangulation fan1(6, {Edge{1, 3}, Edge{1, 4}, Edge{1, 5}});
      absorb_report(res, check_flip_path(fan0, flip_path(fan0, fan1)), "k=6; ");
    }
    return res;
  });
  rep.trials = merged.checks;
  rep.failures = std::move(merged.failures);
  return rep;
}

SuiteReport suite_oracle_agreement(const Params& given, std::uint64_t seed) {
  ParamReader pr(given);
  const int n = get_rank(pr, 2);
  const int points = pr.get_int("points", 6, n + 1, 12);
  const int trials = pr.get_int("trials", 500, 1, 100000);
  const int rand_trials = pr.get_int("rand_trials", 5, 1, 100);
  pr.finish();
  const PointSetPtr ps = letter_points(points);
  SuiteReport rep{"oracle_agreement", pr.canonical(), seed, 0, {}, 0};
  UnitResult merged = run_units(trials, [&](int u) {
    UnitResult res;
    auto rng = unit_rng(seed, u);
    SwapPoly f = SwapPoly::zero(ps);
    switch (u % 3) {
      case 0:
        f = random_poly(ps, rng, 3, 4);
        break;
      case 1:
        // A multiple of an ideal generator: deterministically zero.
        f = determinant(ps, random_spec(ps, rng, n + 1)) * random_monomial(ps, rng, 1);
        break;
      default:
        f = random_poly(ps, rng, 3, 4) + determinant(ps, random_spec(ps, rng, n + 1));
        break;
    }
    const bool det_zero = is_zero_Zn(f, n);
    const bool rand_zero = random_zero_test(f, n, rand_trials, rng());
    ++res.checks;
    if (det_zero && !rand_zero)
      res.failures.push_back({"points=" + points_str(ps) + "; f=" + f.str(),
                              "every evaluation of a zero class vanishes",
                              "randomized test found a nonzero evaluation"});
    if (!det_zero && rand_zero)
      res.failures.push_back({"points=" + points_str(ps) + "; f=" + f.str(),
                              "some evaluation of a nonzero class is nonzero",
                              "probabilistic false zero after " +
                                  std::to_string(rand_trials) + " trials"});
    return res;
  });
  rep.trials = merged.checks;
  rep.failures = std::move(merged.failures);
  return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> kNames = {
      "jacobi",        "poisson_ideal", "delta_r_l",        "domain",
      "cross_ratio",   "nesting",       "theta_poisson",    "flip_compat",
      "mutation_poisson", "oracle_agreement"};
  return kNames;
}

SuiteReport run_suite(const std::string& name, const std::map<std::string, std::string>& params,
                      std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  if (name == "jacobi")
    rep = suite_jacobi(params, seed);
  else if (name == "poisson_ideal")
    rep = suite_poisson_ideal(params, seed);
  else if (name == "delta_r_l")
    rep = suite_delta_r_l(params, seed);
  else if (name == "domain")
    rep = suite_domain(params, seed);
  else if (name == "cross_ratio")
    rep = suite_cross_ratio(params, seed);
  else if (name == "nesting")
    rep = suite_nesting(params, seed);
  else if (name == "theta_poisson")
    rep = suite_theta_poisson(params, seed);
  else if (name == "flip_compat")
    rep = suite_flip_compat(params, seed);
  else if (name == "mutation_poisson")
    rep = suite_mutation_poisson(params, seed);
  else if (name == "oracle_agreement")
    rep = suite_oracle_agreement(params, seed);
  else
    throw UnknownSuite("unknown suite '" + name + "'");
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

// ---- report serialization ----

std::string SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [key, val] : params) {
    bool numeric = !val.empty() && val != "-";
    if (numeric)
      for (size_t i = val[0] == '-' ? 1 : 0; i < val.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(val[i]))) numeric = false;
    if (numeric)
      p[key] = std::stoll(val);
    else
      p[key] = val;
  }
  j["params"] = std::move(p);
  j["seed"] = seed;
  j["trials"] = trials;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Failure& f : failures) {
    nlohmann::ordered_json jf;
    jf["input"] = f.input;
    jf["expected"] = f.expected;
    jf["got"] = f.got;
    arr.push_back(std::move(jf));
  }
  j["failures"] = std::move(arr);
  j["elapsed_ms"] = elapsed_ms;
  return j.dump(2);
}

SuiteReport SuiteReport::from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  SuiteReport r;
  r.suite = j.at("suite").get<std::string>();
  for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it) {
    if (it->is_number_integer())
      r.params[it.key()] = std::to_string(it->get<long long>());
    else
      r.params[it.key()] = it->get<std::string>();
  }
  r.seed = j.at("seed").get<std::uint64_t>();
  r.trials = j.at("trials").get<int>();
  for (const auto& jf : j.at("failures"))
    r.failures.push_back({jf.at("input").get<std::string>(),
                          jf.at("expected").get<std::string>(),
                          jf.at("got").get<std::string>()});
  r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  return r;
}

bool SuiteReport::same_outcome(const SuiteReport& other) const {
  return suite == other.suite && params == other.params && seed == other.seed &&
         trials == other.trials && failures == other.failures;
}

}  // namespace swapalg
