#pragma once

#include "pel/locpoly.hpp"
#include "pel/rational.hpp"

#include <random>

namespace pel::test {

inline MPoly X() { return MPoly::var(Var::x); }
inline MPoly Y() { return MPoly::var(Var::y); }
inline MPoly Lam() { return MPoly::var(Var::lambda); }
inline MPoly LA() { return MPoly::var(Var::La); }
inline MPoly LB() { return MPoly::var(Var::Lb); }
inline MPoly LC() { return MPoly::var(Var::Lc); }
inline BigRational q(long n, long d = 1) { return make_rational(n, d); }

/// Small random polynomial in all six variables.
inline MPoly random_mpoly(std::mt19937& rng, int terms = 4, unsigned max_exp = 3) {
  std::uniform_int_distribution<int> e(0, static_cast<int>(max_exp));
  std::uniform_int_distribution<int> c(-9, 9);
  std::uniform_int_distribution<int> d(1, 5);
  MPoly p;
  for (int i = 0; i < terms; ++i) {
    MPoly m(make_rational(c(rng), d(rng)));
    for (Var v : kAllVars) m *= MPoly::var(v, static_cast<unsigned>(e(rng)));
    p += m;
  }
  return p;
}

inline LocPoly random_locpoly(std::mt19937& rng) {
  std::uniform_int_distribution<int> k(0, 3);
  return LocPoly::make(random_mpoly(rng), static_cast<unsigned>(k(rng)), static_cast<unsigned>(k(rng)));
}

}  // namespace pel::test
