#pragma once

#include "pel/locpoly.hpp"
#include "pel/series.hpp"

#include <optional>
#include <vector>

namespace pel {

/// Values of ln a, ln b, ln c. A missing value stays symbolic (La, Lb, Lc).
/// La and Lb are either both assigned or both symbolic; an assigned pair
/// must not sum to zero.
struct LogParams {
  std::optional<BigRational> la;
  std::optional<BigRational> lb;
  std::optional<BigRational> lc;

  static LogParams symbolic() { return {}; }
  static LogParams assigned(BigRational la, BigRational lb, BigRational lc);
  /// a = 1, b = c = e.
  static LogParams classical();

  /// Throws InvalidGrid if the invariants are violated.
  void validate() const;
  bool symbolic_ab() const { return !la.has_value(); }

  MPoly La() const;
  MPoly Lb() const;
  MPoly Lc() const;
  /// La + Lb
  MPoly A() const;
  /// v / A^k, as a localized value in symbolic mode and a rational scaling
  /// otherwise.
  LocPoly over_A(const LocPoly& v, unsigned k = 1) const;

  LogParams with_lc(BigRational value) const;

  friend bool operator==(const LogParams&, const LogParams&) = default;
};

/// Which reading of a formula to evaluate: as printed, or with its
/// identified defects repaired.
enum class FormulaVariant { printed, corrected };

struct PolyEulerParams {
  LogParams logs;
  int k = 1;
};

/// 2 Li_k(1 - (ab)^-t) / (a^-t + b^t) * c^(xt), through t^order.
EgfSeries pe_series(const PolyEulerParams& p, unsigned order);

/// E_n^(k)(x;a,b,c) for n = 0..nmax.
std::vector<LocPoly> pe_values(const PolyEulerParams& p, unsigned nmax);

/// E_n^(k)(x;a,b,c).
LocPoly pe_oracle(const PolyEulerParams& p, unsigned n);

/// E_n^(k)(a,b) = E_n^(k)(0;a,b,c).
LocPoly pe_numbers(const PolyEulerParams& p, unsigned n);

/// E_n^(k)(x) = E_n^(k)(x;1,e,e).
MPoly pe_classical(int k, unsigned n);

/// n! [t^n] Li_k(1 - e^-4t) / (4t cosh t).
BigRational ohno_sasaki_number(int k, unsigned n);

/// sum_i C(n,i) Lc^(n-i) E_i^(k)(a,b) x^(n-i)
LocPoly thm21_rhs(const PolyEulerParams& p, unsigned n);

/// A^n E_n^(k)((x Lc + La) / A), with the denominators cleared.
LocPoly thm22_rhs(const PolyEulerParams& p, unsigned n);

/// d/dx
LocPoly d_dx(const LocPoly& v);

/// sum_i C(n,i) E_i^(k)(x;a,b) y^(n-i), with c = e.
LocPoly addition_rhs(const PolyEulerParams& p, unsigned n);

/// E_n^(k)(x+y;a,b), the left side matching addition_rhs.
LocPoly addition_lhs(const PolyEulerParams& p, unsigned n);

/// The printed triple sum over m, j, i, with the j = 0 terms dropped.
LocPoly eq5_explicit(const PolyEulerParams& p, unsigned n);

/// The four expansions of E_n^(k)(x;a,b) in rising factorials (1), falling
/// factorials (2), higher-order Bernoulli polynomials (3) and
/// Frobenius-Euler polynomials (4). The corrected variant of (1) drops the
/// 1/m! factor; the others have no corrected form. Throws
/// std::invalid_argument for an unknown `which` or s = 0 with which 3 or 4.
LocPoly cauchy_identity_rhs(int which, const PolyEulerParams& p, unsigned n, unsigned s,
                            FormulaVariant variant = FormulaVariant::printed);

/// sum_j c_j num^j A^(e-j) where poly = sum_j c_j x^j: the value
/// A^e poly(num / A) with denominators cleared. Requires deg poly <= e.
LocPoly scaled_substitution(const MPoly& poly, unsigned e, const MPoly& num, const LogParams& logs);

// Classical polynomial families in x.
MPoly euler_polynomial(unsigned n);
MPoly rising_factorial(unsigned m);
MPoly falling_factorial(unsigned m);
/// B_n^(s)(x): EGF (t / (e^t - 1))^s e^(xt).
MPoly higher_bernoulli(unsigned s, unsigned n);
/// H_n^(s)(x; lambda): EGF ((1 - lambda) / (e^t - lambda))^s e^(xt).
LocPoly frobenius_euler(unsigned s, unsigned n);

}  // namespace pel
