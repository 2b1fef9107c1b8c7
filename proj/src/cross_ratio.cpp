#include "swapalg/cross_ratio.hpp"

#include "swapalg/errors.hpp"

namespace swapalg {

SwapFraction cross_fraction_at(PointSetPtr ps, int x, int y, int z, int t) {
  if (x == t || y == z)
    throw IllegalCrossFraction("cross fraction needs first != fourth and second != third");
  SwapPoly num = SwapPoly::pair_at(ps, x, z) * SwapPoly::pair_at(ps, y, t);
  SwapPoly den = SwapPoly::pair_at(ps, x, t) * SwapPoly::pair_at(ps, y, z);
  return SwapFraction(std::move(num), std::move(den));
}

SwapFraction cross_fraction(PointSetPtr ps, const std::string& x, const std::string& y,
                            const std::string& z, const std::string& t) {
  return cross_fraction_at(ps, ps->index_of(x), ps->index_of(y), ps->index_of(z),
                           ps->index_of(t));
}

std::vector<CrossRatioCheck> check_cross_ratio_identities(PointSetPtr ps) {
  if (ps->size() < 6)
    throw InsufficientPoints("cross-fraction identity battery needs at least six points");
  const int a = 0, b = 1, c = 2, d = 3, e = 4;
  const auto cf = [&](int x, int y, int z, int t) { return cross_fraction_at(ps, x, y, z, t); };
  std::vector<CrossRatioCheck> out;

  {
    CrossRatioCheck ck;
    ck.name = "swap_pairs";
    ck.statement = "[a,b,c,d] = [b,a,d,c]";
    ck.verifiable = true;
    ck.holds = cf(a, b, c, d).eq_in_QP(cf(b, a, d, c));
    ck.detail = ck.holds ? "exact equality in the fraction field" : "counterexample on a,b,c,d";
    out.push_back(std::move(ck));
  }
  {
    CrossRatioCheck ck;
    ck.name = "zero_locus";
    ck.statement = "[a,b,c,d] = 0 iff a = c or b = d";
    ck.verifiable = true;
    const bool zero_when_ac = cf(a, b, a, d).is_zero();
    const bool zero_when_bd = cf(a, b, c, b).is_zero();
    const bool nonzero_generic = !cf(a, b, c, d).is_zero();
    ck.holds = zero_when_ac && zero_when_bd && nonzero_generic;
    ck.detail = "checked a = c, b = d, and four distinct points";
    out.push_back(std::move(ck));
  }
  {
    CrossRatioCheck ck;
    ck.name = "one_locus";
    ck.statement = "[a,b,c,d] = 1 iff a = b or c = d";
    ck.verifiable = true;
    const SwapFraction unit = SwapFraction::one(ps);
    const bool one_when_ab = cf(a, a, c, d).eq_in_QP(unit);
    const bool one_when_cd = cf(a, b, c, c).eq_in_QP(unit);
    const bool not_one_generic = !cf(a, b, c, d).eq_in_QP(unit);
    ck.holds = one_when_ab && one_when_cd && not_one_generic;
    ck.detail = "checked a = b, c = d, and four distinct points";
    out.push_back(std::move(ck));
  }
  {
    CrossRatioCheck ck;
    ck.name = "chain_last_slot";
    ck.statement = "[a,b,c,d] * [a,b,d,e] = [a,b,c,e]";
    ck.verifiable = true;
    ck.holds = (cf(a, b, c, d) * cf(a, b, d, e)).eq_in_QP(cf(a, b, c, e));
    ck.detail = ck.holds ? "exact equality in the fraction field" : "counterexample on a..e";
    out.push_back(std::move(ck));
  }
  {
    CrossRatioCheck ck;
    ck.name = "chain_two_slots_as_printed";
    ck.statement = "[a,b,d,e] * [b,c,d,e] = [a,c,e,f]";
    ck.verifiable = false;
    ck.holds = false;
    // f is unbound: it appears on the right only. No binding over the point
    // set makes the identity hold, which we record as the witness.
    const SwapFraction lhs = cf(a, b, d, e) * cf(b, c, d, e);
    std::string failures;
    bool some_f_works = false;
    for (int f = 0; f < ps->size(); ++f) {
      if (f == a || f == e) continue;  // cross fraction [a,c,e,f] needs a != f, c != e
      if (lhs.eq_in_QP(cf(a, c, e, f)))
        some_f_works = true;
      else {
        if (!failures.empty()) failures += ", ";
        failures += ps->name(f);
      }
    }
    ck.detail = some_f_works
                    ? "unexpectedly holds for some binding of f"
                    : "unbound symbol f; fails for every binding of f in {" + failures + "}";
    out.push_back(std::move(ck));
  }
  {
    CrossRatioCheck ck;
    ck.name = "chain_two_slots";
    ck.statement = "[a,b,d,e] * [b,c,d,e] = [a,c,d,e]";
    ck.verifiable = true;
    ck.holds = (cf(a, b, d, e) * cf(b, c, d, e)).eq_in_QP(cf(a, c, d, e));
    ck.detail =
        ck.holds ? "the b factors cancel exactly" : "counterexample on a,b,c,d,e";
    out.push_back(std::move(ck));
  }
  return out;
}

}  // namespace swapalg
