#include "swapalg/rank_model.hpp"

#include <random>

#include "swapalg/errors.hpp"

namespace swapalg {

RankModel make_rank_model(int n, int p) {
  if (n < 2) throw UnsupportedRank("rank must be at least 2; the rank-1 quotient is not a domain");
  if (p < 1) throw BadModel("model needs at least one point");
  return RankModel{n, p};
}

int model_var_a(const RankModel& M, int i, int k) {
  if (i < 1 || i > M.p || k < 1 || k > M.n) throw BadModel("model variable index out of range");
  return 2 * ((i - 1) * M.n + (k - 1));
}

int model_var_b(const RankModel& M, int i, int k) { return model_var_a(M, i, k) + 1; }

std::string model_var_name(const RankModel& M, int var) {
  const bool is_b = (var & 1) != 0;
  const int idx = var / 2;
  const int i = idx / M.n + 1;
  const int k = idx % M.n + 1;
  return (is_b ? "b(" : "a(") + std::to_string(i) + "," + std::to_string(k) + ")";
}

ModelPoly expand_to_model(const SwapPoly& f, const RankModel& M) {
  if (f.point_set()->size() > M.p) throw BadModel("point index out of model range");
  // xy with x at index i, y at index j maps to <a_{i+1}|b_{j+1}>.
  const auto inner = [&](int l, int r) {
    Poly s;
    for (int k = 1; k <= M.n; ++k) {
      const int va = model_var_a(M, l + 1, k);
      const int vb = model_var_b(M, r + 1, k);
      // keep the power product sorted by variable id
      if (va < vb)
        s.add_term(PowerProduct{{va, 1}, {vb, 1}}, Rat(1));
      else
        s.add_term(PowerProduct{{vb, 1}, {va, 1}}, Rat(1));
    }
    return s;
  };
  Poly out;
  for (const auto& [m, c] : f.terms()) {
    Poly prod = Poly::constant(c);
    for (const PairVar& v : m) prod = prod * inner(v.l, v.r);
    out = out + prod;
  }
  return out;
}

namespace {

// A power product is reducible when it contains a(i,n) and b(i,n) for the
// same i; those two variables have adjacent ids, so scan neighboring slots.
int find_site(const RankModel& M, const PowerProduct& pp) {
  for (size_t t = 0; t + 1 < pp.size(); ++t) {
    const int v = pp[t].first;
    if ((v & 1) == 0 && pp[t + 1].first == v + 1 && (v / 2) % M.n == M.n - 1)
      return (v / 2) / M.n + 1;  // the point index i
  }
  return 0;
}

}  // namespace

ModelPoly normal_form_model(const ModelPoly& q, const RankModel& M, ReduceStrategy strategy) {
  ModelPoly work = q;
  for (;;) {
    PowerProduct site_pp;
    Rat site_c;
    int site_i = 0;
    if (strategy == ReduceStrategy::FirstSite) {
      for (const auto& [pp, c] : work.terms()) {
        if (int i = find_site(M, pp); i != 0) {
          site_pp = pp;
          site_c = c;
          site_i = i;
          break;
        }
      }
    } else {
      const auto& terms = work.terms();
      for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        if (int i = find_site(M, it->first); i != 0) {
          site_pp = it->first;
          site_c = it->second;
          site_i = i;
          break;
        }
      }
    }
    if (site_i == 0) return work;
    const int va = model_var_a(M, site_i, M.n);
    const int vb = va + 1;
    PowerProduct rest;
    rest.reserve(site_pp.size());
    for (const auto& [v, e] : site_pp) {
      int ee = e;
      if (v == va || v == vb) --ee;
      if (ee > 0) rest.emplace_back(v, ee);
    }
    ModelPoly delta;
    delta.add_term(site_pp, -site_c);
    for (int k = 1; k < M.n; ++k) {
      const PowerProduct factor{{model_var_a(M, site_i, k), 1}, {model_var_b(M, site_i, k), 1}};
      delta.add_term(pp_mul(rest, factor), -site_c);
    }
    work = work + delta;
  }
}

namespace {

SwapPoly strip_content(const SwapPoly& f) {
  // Dividing out the common monomial factor is sound: the model quotient is
  // an integral domain and single pair variables expand to nonzero classes.
  const Monomial content = f.content_monomial();
  return content.empty() ? f : f.divide_by_monomial(content);
}

}  // namespace

bool is_zero_Zn(const SwapPoly& f, int n) {
  if (n < 2) throw UnsupportedRank("rank must be at least 2");
  if (f.is_zero()) return true;
  const SwapPoly g = strip_content(f);
  const RankModel M = make_rank_model(n, f.point_set()->size());
  return normal_form_model(expand_to_model(g, M), M).is_zero();
}

bool random_zero_test(const SwapPoly& f, int n, int trials, std::uint64_t seed) {
  if (n < 2) throw UnsupportedRank("rank must be at least 2");
  if (trials < 1) throw BadParams("random_zero_test needs at least one trial");
  if (f.is_zero()) return true;
  const int p = f.point_set()->size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-99, 99);
  for (int trial = 0; trial < trials; ++trial) {
    // a_i random nonzero; b_i = c_i - (<a_i|c_i>/<a_i|a_i>) a_i, which keeps
    // <a_i|b_i> = 0 exactly over the rationals.
    std::vector<std::vector<Rat>> a(static_cast<size_t>(p)), b(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) {
      auto& ai = a[static_cast<size_t>(i)];
      ai.resize(static_cast<size_t>(n));
      bool nonzero = false;
      while (!nonzero) {
        for (auto& v : ai) {
          v = Rat(coeff(rng));
          if (v != 0) nonzero = true;
        }
      }
      std::vector<Rat> ci(static_cast<size_t>(n));
      for (auto& v : ci) v = Rat(coeff(rng));
      Rat aa(0), ac(0);
      for (int k = 0; k < n; ++k) {
        aa += ai[static_cast<size_t>(k)] * ai[static_cast<size_t>(k)];
        ac += ai[static_cast<size_t>(k)] * ci[static_cast<size_t>(k)];
      }
      auto& bi = b[static_cast<size_t>(i)];
      bi.resize(static_cast<size_t>(n));
      for (int k = 0; k < n; ++k)
        bi[static_cast<size_t>(k)] =
            ci[static_cast<size_t>(k)] - ac / aa * ai[static_cast<size_t>(k)];
    }
    // Pair variable values <a_l|b_r> on demand.
    std::map<std::pair<int, int>, Rat> cache;
    const auto value = [&](int l, int r) {
      auto it = cache.find({l, r});
      if (it != cache.end()) return it->second;
      Rat s(0);
      for (int k = 0; k < n; ++k)
        s += a[static_cast<size_t>(l)][static_cast<size_t>(k)] *
             b[static_cast<size_t>(r)][static_cast<size_t>(k)];
      cache.emplace(std::make_pair(l, r), s);
      return s;
    };
    Rat acc(0);
    for (const auto& [m, c] : f.terms()) {
      Rat t = c;
      for (const PairVar& v : m) t *= value(v.l, v.r);
      acc += t;
    }
    if (acc != 0) return false;
  }
  return true;
}

bool eq_in_Qn(const SwapFraction& F, const SwapFraction& G, int n) {
  if (n < 2) throw UnsupportedRank("rank must be at least 2");
  if (is_zero_Zn(F.den(), n))
    throw DenominatorVanishesInZn("left denominator vanishes in the rank-" + std::to_string(n) +
                                  " quotient");
  if (is_zero_Zn(G.den(), n))
    throw DenominatorVanishesInZn("right denominator vanishes in the rank-" + std::to_string(n) +
                                  " quotient");
  return is_zero_Zn(F.num() * G.den() - G.num() * F.den(), n);
}

}  // namespace swapalg
