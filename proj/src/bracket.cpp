#include "swapalg/bracket.hpp"

#include <algorithm>

namespace swapalg {

SwapPoly bracket_generators(const PointSetPtr& ps, PairVar rx, PairVar sy) {
  const int m = ps->size();
  for (int i : {rx.l, rx.r, sy.l, sy.r})
    if (i < 0 || i >= m) throw UnknownPoint("bracket_generators: position out of range");
  SwapPoly out = SwapPoly::zero(ps);
  if (rx.l == rx.r || sy.l == sy.r) return out;
  // {rx, sy} = J(rx,sy) * ry * sx; the product dies when ry or sx degenerates.
  if (rx.l == sy.r || sy.l == rx.r) return out;
  const Rat j = linking_number(*ps, rx.l, rx.r, sy.l, sy.r);
  if (j == 0) return out;
  Monomial mono{PairVar{rx.l, sy.r}, PairVar{sy.l, rx.r}};
  return SwapPoly::monomial(ps, j, std::move(mono));
}

SwapPoly bracket_generators(const PointSetPtr& ps, const std::string& r, const std::string& x,
                            const std::string& s, const std::string& y) {
  return bracket_generators(ps, PairVar{ps->index_of(r), ps->index_of(x)},
                            PairVar{ps->index_of(s), ps->index_of(y)});
}

SwapPoly bracket_poly(const SwapPoly& f, const SwapPoly& g) {
  const auto& ps = f.point_set();
  if (!(*ps == *g.point_set()))
    throw PointSetMismatch("bracket of polynomials over different point sets");
  SwapPoly::TermMap acc;
  // Leibniz in both arguments: sum over one factor from each monomial.
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      const Rat c = cf * cg;
      for (size_t i = 0; i < mf.size(); ++i) {
        const PairVar u = mf[i];
        for (size_t j = 0; j < mg.size(); ++j) {
          const PairVar v = mg[j];
          if (u.l == v.r || v.l == u.r) continue;
          const Rat jn = linking_number(*ps, u.l, u.r, v.l, v.r);
          if (jn == 0) continue;
          Monomial rest;
          rest.reserve(mf.size() + mg.size());
          for (size_t t = 0; t < mf.size(); ++t)
            if (t != i) rest.push_back(mf[t]);
          for (size_t t = 0; t < mg.size(); ++t)
            if (t != j) rest.push_back(mg[t]);
          rest.push_back(PairVar{u.l, v.r});
          rest.push_back(PairVar{v.l, u.r});
          std::sort(rest.begin(), rest.end());
          auto [it, inserted] = acc.emplace(std::move(rest), c * jn);
          if (!inserted) it->second += c * jn;
        }
      }
    }
  }
  return SwapPoly::from_terms(ps, std::move(acc));
}

SwapFraction bracket_fraction(const SwapFraction& F, const SwapFraction& G) {
  const SwapPoly& a = F.num();
  const SwapPoly& b = F.den();
  const SwapPoly& c = G.num();
  const SwapPoly& d = G.den();
  SwapPoly num = bracket_poly(a, c) * b * d - bracket_poly(a, d) * b * c -
                 bracket_poly(b, c) * a * d + bracket_poly(b, d) * a * c;
  return SwapFraction(std::move(num), b * b * d * d);
}

}  // namespace swapalg
