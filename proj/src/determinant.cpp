#include "swapalg/determinant.hpp"

#include <algorithm>
#include <numeric>

#include "swapalg/linking.hpp"

namespace swapalg {

namespace {

void validate_spec(const PointSetPtr& ps, const DeterminantSpec& spec) {
  if (spec.xs.size() != spec.ys.size()) throw BadSpec("determinant row/column length mismatch");
  if (spec.xs.size() < 2 || spec.xs.size() > 4)
    throw BadSpec("determinant size out of supported range 2..4");
  for (int i : spec.xs)
    if (i < 0 || i >= ps->size()) throw UnknownPoint("determinant spec: position out of range");
  for (int i : spec.ys)
    if (i < 0 || i >= ps->size()) throw UnknownPoint("determinant spec: position out of range");
}

}  // namespace

DeterminantSpec make_det_spec(const PointSetPtr& ps, const std::vector<std::string>& xs,
                              const std::vector<std::string>& ys) {
  DeterminantSpec spec;
  for (const auto& s : xs) spec.xs.push_back(ps->index_of(s));
  for (const auto& s : ys) spec.ys.push_back(ps->index_of(s));
  validate_spec(ps, spec);
  return spec;
}

DeterminantSpec make_det_spec_at(const PointSetPtr& ps, std::vector<int> xs, std::vector<int> ys) {
  DeterminantSpec spec{std::move(xs), std::move(ys)};
  validate_spec(ps, spec);
  return spec;
}

SwapPoly determinant(const PointSetPtr& ps, const DeterminantSpec& spec) {
  validate_spec(ps, spec);
  const size_t n = spec.xs.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  SwapPoly::TermMap acc;
  // Signed permutation sum; restarts from the identity so the parity can be
  // tracked by counting inversions once per permutation (sizes are <= 4).
  do {
    int inversions = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    const Rat sgn_c = (inversions % 2 == 0) ? Rat(1) : Rat(-1);
    Monomial m;
    m.reserve(n);
    bool dead = false;
    for (size_t i = 0; i < n && !dead; ++i) {
      const int l = spec.xs[i];
      const int r = spec.ys[static_cast<size_t>(perm[i])];
      if (l == r)
        dead = true;  // contains xx = 0
      else
        m.push_back(PairVar{l, r});
    }
    if (!dead) {
      std::sort(m.begin(), m.end());
      auto [it, inserted] = acc.emplace(std::move(m), sgn_c);
      if (!inserted) {
        it->second += sgn_c;
        if (it->second == 0) acc.erase(it);
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return SwapPoly::from_terms(ps, std::move(acc));
}

namespace {

std::vector<DeltaTerm> delta_side_terms(const PointSetPtr& ps, int a, int b,
                                        const DeterminantSpec& spec, bool right_side) {
  validate_spec(ps, spec);
  const int m = ps->size();
  if (a < 0 || a >= m || b < 0 || b >= m) throw UnknownPoint("chord endpoint out of range");
  if (a == b) throw BadSpec("chord endpoints coincide");
  const int wanted = right_side ? 1 : -1;
  // u strictly left of a->b is just anticlockwise of b; v strictly right is
  // just anticlockwise of a.
  const Rat aux = right_side ? just_after(b, m) : just_after(a, m);
  const size_t n = spec.xs.size();
  std::vector<DeltaTerm> out;
  for (size_t d = 0; d < n; ++d) {
    const int xd = spec.xs[d];
    const int side = side_of_chord(Rat(a), Rat(b), Rat(xd), m);
    if (side != wanted && side != 0) continue;
    if (xd == b) continue;  // factor x_d b = bb = 0
    const Rat j = linking_number_pos(Rat(a), Rat(b), Rat(xd), aux, m);
    if (j == 0) continue;
    DeterminantSpec sub = spec;
    sub.xs[d] = a;
    out.push_back(DeltaTerm{j, PairVar{xd, b}, true, static_cast<int>(d), std::move(sub)});
  }
  for (size_t d = 0; d < n; ++d) {
    const int yd = spec.ys[d];
    const int side = side_of_chord(Rat(a), Rat(b), Rat(yd), m);
    if (side != wanted && side != 0) continue;
    if (yd == a) continue;  // factor a y_d = aa = 0
    const Rat j = linking_number_pos(Rat(a), Rat(b), aux, Rat(yd), m);
    if (j == 0) continue;
    DeterminantSpec sub = spec;
    sub.ys[d] = b;
    out.push_back(DeltaTerm{j, PairVar{a, yd}, false, static_cast<int>(d), std::move(sub)});
  }
  return out;
}

SwapPoly assemble(const PointSetPtr& ps, const std::vector<DeltaTerm>& terms) {
  SwapPoly acc = SwapPoly::zero(ps);
  for (const DeltaTerm& t : terms) {
    SwapPoly factor = SwapPoly::pair_at(ps, t.factor.l, t.factor.r);
    acc = acc + factor * determinant(ps, t.sub) * t.coeff;
  }
  return acc;
}

}  // namespace

std::vector<DeltaTerm> delta_r_terms(const PointSetPtr& ps, int a, int b,
                                     const DeterminantSpec& spec) {
  return delta_side_terms(ps, a, b, spec, true);
}

std::vector<DeltaTerm> delta_l_terms(const PointSetPtr& ps, int a, int b,
                                     const DeterminantSpec& spec) {
  return delta_side_terms(ps, a, b, spec, false);
}

SwapPoly delta_R(const PointSetPtr& ps, int a, int b, const DeterminantSpec& spec) {
  return assemble(ps, delta_r_terms(ps, a, b, spec));
}

SwapPoly delta_L(const PointSetPtr& ps, int a, int b, const DeterminantSpec& spec) {
  return assemble(ps, delta_l_terms(ps, a, b, spec));
}

}  // namespace swapalg
