#include "swapalg/linking.hpp"

#include <array>

namespace swapalg {

namespace {

Rat reduce_mod(Rat p, int m) {
  while (p < 0) p += m;
  while (p >= m) p -= m;
  return p;
}

}  // namespace

Rat linking_number_pos_cut(const Rat& r, const Rat& x, const Rat& s, const Rat& y, int m,
                           const Rat& cut) {
  const Rat c = reduce_mod(cut, m);
  const auto lin = [&](const Rat& p) {
    const Rat q = reduce_mod(p, m);
    return q > c ? q : q + m;
  };
  const Rat lr = lin(r), lx = lin(x), ls = lin(s), ly = lin(y);
  const int first = sign_of(lr - lx) * sign_of(lr - ly) * sign_of(ly - lx);
  const int second = sign_of(lr - lx) * sign_of(lr - ls) * sign_of(ls - lx);
  return Rat(first - second) / 2;
}

Rat linking_number_pos(const Rat& r, const Rat& x, const Rat& s, const Rat& y, int m) {
  const std::array<Rat, 4> args = {reduce_mod(r, m), reduce_mod(x, m), reduce_mod(s, m),
                                   reduce_mod(y, m)};
  Rat cut(-1, 2);
  for (;;) {
    const Rat c = reduce_mod(cut, m);
    bool collides = false;
    for (const Rat& a : args) collides = collides || (a == c);
    if (!collides) break;
    cut /= 2;
  }
  return linking_number_pos_cut(r, x, s, y, m, cut);
}

Rat linking_number(const PointSet& ps, int r, int x, int s, int y) {
  const int m = ps.size();
  for (int i : {r, x, s, y})
    if (i < 0 || i >= m) throw UnknownPoint("linking_number: position out of range");
  return linking_number_pos(Rat(r), Rat(x), Rat(s), Rat(y), m);
}

Rat linking_number(const PointSet& ps, const std::string& r, const std::string& x,
                   const std::string& s, const std::string& y) {
  return linking_number(ps, ps.index_of(r), ps.index_of(x), ps.index_of(s), ps.index_of(y));
}

int side_of_chord(const Rat& a, const Rat& b, const Rat& q, int m) {
  const Rat rel_q = reduce_mod(q - a, m);
  const Rat rel_b = reduce_mod(b - a, m);
  if (rel_q == 0 || rel_q == rel_b) return 0;
  return rel_q < rel_b ? 1 : -1;
}

Rat just_after(int i, int m) { return reduce_mod(Rat(i) + Rat(1, 2), m); }

}  // namespace swapalg
