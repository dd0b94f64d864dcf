#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pel/combinatorics.hpp"
#include "pel/errors.hpp"
#include "pel/polyeuler.hpp"
#include "support.hpp"

#include <stdexcept>

using namespace pel;
using namespace pel::test;

namespace {

const LogParams kSym = LogParams::symbolic();
const LogParams kClassical = LogParams::classical();

/// E_n^(k)(x) at a = 1, b = c = e from a plain convolution:
/// g(t) = Li_k(1 - e^-t) = sum_m (1 - e^-t)^m / m^k and 2/(1+e^t) e^(xt).
MPoly classical_by_convolution(int k, unsigned n) {
  // g_j = j! [t^j] g(t) = sum_m m!/m^k (-1)^(j-m) S(j, m)
  std::vector<BigRational> g(n + 1, 0);
  for (unsigned j = 1; j <= n; ++j) {
    for (unsigned m = 1; m <= j; ++m) {
      const BigRational mk = k >= 0 ? 1 / pow(BigRational(m), static_cast<unsigned>(k))
                                    : pow(BigRational(m), static_cast<unsigned>(-k));
      const BigRational t = factorial(m) * mk * stirling2(j, m);
      g[j] += (j - m) % 2 ? -t : t;
    }
  }
  MPoly sum;
  for (unsigned j = 0; j <= n; ++j) sum += euler_polynomial(n - j) * (g[j] * binomial(n, static_cast<int>(j)));
  return sum;
}

}  // namespace

TEST_CASE("log parameters") {
  CHECK(kSym.symbolic_ab());
  CHECK(kSym.A() == LA() + LB());
  CHECK(kClassical.A() == MPoly(1));
  CHECK(kClassical.Lc() == MPoly(1));
  CHECK_THROWS_AS(LogParams::assigned(1, -1, 1).validate(), InvalidGrid);
  LogParams half;
  half.la = BigRational(1);
  CHECK_THROWS_AS(half.validate(), InvalidGrid);
  CHECK(kSym.over_A(LocPoly(LA() + LB())) == LocPoly(1));
  CHECK(LogParams::assigned(1, 3, 2).over_A(LocPoly(X()), 2) == LocPoly(X() * q(1, 16)));
  CHECK(kSym.with_lc(1).Lc() == MPoly(1));
}

TEST_CASE("oracle values") {
  for (int k = -3; k <= 3; ++k) {
    CHECK(pe_oracle({kSym, k}, 0) == LocPoly(0));
    CHECK(pe_oracle({kSym, k}, 1) == LocPoly(LA() + LB()));
  }
  CHECK(pe_oracle({kClassical, 2}, 2) == LocPoly(X() * 2L - MPoly(q(3, 2))));
  CHECK(pe_numbers({kSym, 3}, 1) == LocPoly(LA() + LB()));
  CHECK(pe_numbers({kClassical, 1}, 2) == LocPoly(-1));
  CHECK(pe_numbers({kSym, 2}, 0) == LocPoly(0));
  const auto vals = pe_values({kSym, 2}, 5);
  REQUIRE(vals.size() == 6);
  CHECK(vals[4] == pe_oracle({kSym, 2}, 4));
}

TEST_CASE("classical specialization") {
  CHECK(pe_classical(1, 2) == X() * 2L - MPoly(1));
  for (int k = -3; k <= 3; ++k) {
    CHECK(pe_classical(k, 0) == MPoly(0));
    for (unsigned n = 0; n <= 8; ++n) CHECK(pe_classical(k, n) == classical_by_convolution(k, n));
  }
  for (unsigned n = 1; n <= 10; ++n) {
    CHECK(pe_classical(1, n) == euler_polynomial(n - 1) * static_cast<long>(n));
  }
}

TEST_CASE("degree and leading coefficient at a = 1, b = c = e") {
  for (int k = -3; k <= 3; ++k) {
    for (unsigned n = 1; n <= 8; ++n) {
      const MPoly e = pe_classical(k, n);
      CHECK(e.degree(Var::x) == n - 1);
      CHECK(e.coefficients_in(Var::x).back() == MPoly(static_cast<long>(n)));
    }
  }
}

TEST_CASE("assigned logarithms agree with symbolic substitution") {
  const LogParams assigned = LogParams::assigned(q(1, 2), q(3, 2), 2);
  for (int k = -2; k <= 2; ++k) {
    for (unsigned n = 0; n <= 6; ++n) {
      const LocPoly sym = pe_oracle({kSym, k}, n);
      const LocPoly sub = sym.substitute(Var::Lc, MPoly(2))
                              .substitute(Var::La, MPoly(2) - LB())
                              .substitute(Var::Lb, MPoly(q(3, 2)));
      CHECK(pe_oracle({assigned, k}, n) == sub);
    }
  }
}

TEST_CASE("Ohno-Sasaki numbers") {
  CHECK(ohno_sasaki_number(1, 0) == 1);
  CHECK(ohno_sasaki_number(1, 1) == 0);
  CHECK(ohno_sasaki_number(1, 2) == -1);
  // k = 1 gives the Euler numbers of 1/cosh t
  CHECK(ohno_sasaki_number(1, 4) == 5);
  CHECK(ohno_sasaki_number(1, 6) == -61);
}

TEST_CASE("binomial expansion in x") {
  CHECK(thm21_rhs({kSym, 2}, 0) == LocPoly(0));
  CHECK(thm21_rhs({kSym, 2}, 1) == LocPoly(LA() + LB()));
  CHECK(thm21_rhs({kClassical, 1}, 2) == LocPoly(X() * 2L - MPoly(1)));
  for (int k = -3; k <= 3; ++k) {
    const auto vals = pe_values({kSym, k}, 8);
    for (unsigned n = 0; n <= 8; ++n) CHECK(thm21_rhs({kSym, k}, n) == vals[n]);
  }
}

TEST_CASE("scaled argument") {
  CHECK(thm22_rhs({kSym, 1}, 0) == LocPoly(0));
  CHECK(thm22_rhs({kSym, 1}, 1) == LocPoly(LA() + LB()));
  const MPoly A = LA() + LB();
  CHECK(thm22_rhs({kSym, 2}, 2) == LocPoly((X() * LC() + LA()) * A * 2L - A.pow(2) * q(3, 2)));
  for (int k = -3; k <= 3; ++k) {
    const auto vals = pe_values({kSym, k}, 8);
    for (unsigned n = 0; n <= 8; ++n) {
      const LocPoly r = thm22_rhs({kSym, k}, n);
      CHECK(r.is_polynomial());
      CHECK(r == vals[n]);
    }
  }
  CHECK(scaled_substitution(X().pow(2) + X(), 3, LC(), kSym) == LocPoly(LC().pow(2) * A + LC() * A.pow(2)));
}

TEST_CASE("x-derivative") {
  CHECK(d_dx(LocPoly(X() * 2L - MPoly(q(3, 2)))) == LocPoly(2));
  CHECK(d_dx(LocPoly(LA())) == LocPoly(0));
  CHECK(d_dx(LocPoly(X().pow(2) * LA())) == LocPoly(X() * LA() * 2L));
  for (int k = -3; k <= 3; ++k) {
    const auto vals = pe_values({kSym, k}, 9);
    const auto appell = pe_values({kSym.with_lc(1), k}, 9);
    for (unsigned n = 0; n <= 8; ++n) {
      CHECK(d_dx(vals[n + 1]) == vals[n] * LocPoly(LC() * static_cast<long>(n + 1)));
      CHECK(d_dx(appell[n + 1]) == appell[n] * static_cast<long>(n + 1));
    }
  }
}

TEST_CASE("addition formula") {
  CHECK(addition_rhs({kSym, 1}, 0) == LocPoly(0));
  CHECK(addition_rhs({kSym, 1}, 1) == LocPoly(LA() + LB()));
  for (int k = -2; k <= 2; ++k) {
    for (unsigned n = 0; n <= 6; ++n) {
      const LocPoly rhs = addition_rhs({kSym, k}, n);
      CHECK(addition_lhs({kSym, k}, n) == rhs);
      CHECK(rhs.substitute(Var::y, MPoly(0)) == pe_oracle({kSym.with_lc(1), k}, n));
    }
  }
}

TEST_CASE("printed triple-sum formula") {
  CHECK(eq5_explicit({kSym, 1}, 0) == LocPoly(0));
  // the printed sum doubles the first value
  CHECK(eq5_explicit({kSym, 1}, 1) == LocPoly((LA() + LB()) * 2L));
  CHECK(!(eq5_explicit({kSym, 1}, 1) == pe_oracle({kSym, 1}, 1)));
  CHECK(!(eq5_explicit({kClassical, 1}, 2) == pe_oracle({kClassical, 1}, 2)));
}

TEST_CASE("Cauchy-rule expansions") {
  const PolyEulerParams p{kSym, 2};
  const auto vals = pe_values({kSym.with_lc(1), 2}, 6);
  CHECK(cauchy_identity_rhs(1, p, 0, 0) == LocPoly(0));
  CHECK(cauchy_identity_rhs(2, {kClassical, 3}, 1, 0) == LocPoly(1));
  for (unsigned n = 0; n <= 6; ++n) {
    CHECK(cauchy_identity_rhs(1, p, n, 0, FormulaVariant::corrected) == vals[n]);
    CHECK(cauchy_identity_rhs(2, p, n, 0) == vals[n]);
    for (unsigned s = 1; s <= 2; ++s) {
      CHECK(cauchy_identity_rhs(3, p, n, s) == vals[n]);
      CHECK(cauchy_identity_rhs(4, p, n, s) == vals[n]);
    }
  }
  // the printed 1/m! only matters once m >= 2 contributes
  CHECK(cauchy_identity_rhs(1, p, 2, 0) == vals[2]);
  CHECK(!(cauchy_identity_rhs(1, p, 3, 0) == vals[3]));
  CHECK_THROWS_AS(cauchy_identity_rhs(5, p, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(cauchy_identity_rhs(3, p, 1, 0), std::invalid_argument);
}
