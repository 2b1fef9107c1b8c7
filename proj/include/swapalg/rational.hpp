#pragma once

#include <gmpxx.h>

#include <string>

namespace swapalg {

// Exact rational coefficients. GMP canonicalizes on construction from
// num/den, so equality is plain value equality.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// "3", "-1/2"; the form accepted back by the expression grammar.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline int sign_of(const Rat& q) { return sgn(q); }

}  // namespace swapalg
