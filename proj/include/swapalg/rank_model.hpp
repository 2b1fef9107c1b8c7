#pragma once

#include <cstdint>

#include "swapalg/poly.hpp"
#include "swapalg/swap_fraction.hpp"
#include "swapalg/swap_poly.hpp"

namespace swapalg {

// Polynomial model for the rank-n quotient: p vectors a_i and p covectors
// b_j of dimension n, pair variables mapping to <a_i|b_j> = sum_k a_ik b_jk,
// taken modulo the ideal generated by the incidences <a_i|b_i>. A swapping
// polynomial vanishes in the rank-n quotient iff its image reduces to zero.
struct RankModel {
  int n;  // rank, >= 2
  int p;  // number of points
};

using ModelPoly = Poly;

RankModel make_rank_model(int n, int p);

// Variable ids: a(i,k) and b(i,k) for 1 <= i <= p, 1 <= k <= n, interleaved
// so that the two factors of a rewritable product a(i,n)*b(i,n) sit on
// adjacent ids.
int model_var_a(const RankModel& M, int i, int k);
int model_var_b(const RankModel& M, int i, int k);
std::string model_var_name(const RankModel& M, int var);

ModelPoly expand_to_model(const SwapPoly& f, const RankModel& M);

// Reduction modulo the incidence ideal by the rewrite
//   a(i,n) b(i,n) -> -sum_{k<n} a(i,k) b(i,k).
// The generators have pairwise coprime leading terms, so they form a
// Groebner basis and the normal form is independent of the reduction
// strategy; the two strategies exist to test exactly that.
enum class ReduceStrategy { FirstSite, LastSite };
ModelPoly normal_form_model(const ModelPoly& q, const RankModel& M,
                            ReduceStrategy strategy = ReduceStrategy::FirstSite);

// Deterministic and complete: true iff f lies in the rank-n determinantal
// ideal. Rank must be at least 2; the rank-1 quotient is not a domain and is
// refused everywhere.
bool is_zero_Zn(const SwapPoly& f, int n);

// Probabilistic front-end: evaluates f at `trials` random rational model
// points with each b_i projected into the hyperplane <a_i|b_i> = 0. A
// nonzero evaluation certifies nonzero; "true" only means no witness found.
bool random_zero_test(const SwapPoly& f, int n, int trials, std::uint64_t seed);

// Equality in the rank-n fraction field by cross-multiplication. Both
// denominators must be nonzero in the rank-n quotient.
bool eq_in_Qn(const SwapFraction& F, const SwapFraction& G, int n);

}  // namespace swapalg
