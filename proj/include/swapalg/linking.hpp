#pragma once

#include "swapalg/point_set.hpp"
#include "swapalg/rational.hpp"

namespace swapalg {

// Circle positions are exact rationals in [0, m) on a circle of circumference
// m = |P|; real points sit at their integer index, auxiliary points at
// fractional positions between them.

// Linking number of the chords r->x and s->y, from the sign formula
//   J = 1/2 (s(r-x) s(r-y) s(y-x) - s(r-x) s(r-s) s(s-x))
// after cutting the circle at a point distinct from all four arguments.
// The cut defaults to -1/2 (i.e. just clockwise of position 0) and backs off
// to -1/4, -1/8, ... while it collides with an argument mod m; the value is
// independent of the admissible cut.
Rat linking_number_pos(const Rat& r, const Rat& x, const Rat& s, const Rat& y, int m);

// Same, with an explicit cut (must not coincide with an argument mod m).
Rat linking_number_pos_cut(const Rat& r, const Rat& x, const Rat& s, const Rat& y, int m,
                           const Rat& cut);

Rat linking_number(const PointSet& ps, int r, int x, int s, int y);
Rat linking_number(const PointSet& ps, const std::string& r, const std::string& x,
                   const std::string& s, const std::string& y);

// Side of the directed chord a->b (positions in [0, m)): +1 when q lies on
// the right side (the open anticlockwise arc from a to b), -1 on the left
// side (the open anticlockwise arc from b to a), 0 when q coincides with a
// or b.
int side_of_chord(const Rat& a, const Rat& b, const Rat& q, int m);

// Auxiliary positions strictly adjacent to a point in anticlockwise
// direction: position(i) + 1/2, reduced mod m.
Rat just_after(int i, int m);

}  // namespace swapalg
