#pragma once

#include "pel/multi_polyeuler.hpp"

#include <vector>

namespace pel {

/// Parameters of the multi symmetrized family: rank r >= 2 and the polylog
/// convention used for the E-factor with r-1 indices.
struct SymParams {
  LogParams logs;
  unsigned r = 2;
  Convention convention = Convention::weak;
};

/// The shifted arguments (numerator over A = La + Lb):
///   def            v Lc + La
///   explicit_form  v Lc + 2 La + Lb
///   multi_def      (r-1) v Lc + La
///   multi_explicit (r-1) v Lc + C(r,2) Lb + (C(r,2)+1) La
/// where v is y for the u-exponents and x for the t-exponents.
struct AlphaShift {
  enum class Kind { def, explicit_form, multi_def, multi_explicit };
  Kind kind = Kind::def;
  unsigned r = 2;

  MPoly numerator(const LogParams& logs, Var v = Var::y) const;
  LocPoly value(const LogParams& logs, Var v = Var::y) const;
};

/// D_n^(m)(x,y;a,b,c) = A^-n sum_k C(m,k) E_n^(-k)(x;a,b,c) alpha^(m-k).
LocPoly d_def(unsigned n, unsigned m, const LogParams& logs);
/// d_def(n, m) indexed [n][m] for n <= nmax, m <= mmax.
std::vector<std::vector<LocPoly>> d_def_table(unsigned nmax, unsigned mmax, const LogParams& logs);

/// 2 e^(alpha u) e^(beta t) e^(t+u) (1 - e^-t) / ((e^t + 1)(e^t + e^u - e^(t+u))).
BiSeries thm25_rhs_series(unsigned N, unsigned M, const LogParams& logs);

/// The (j, l, i, r) explicit formula with the alternating i-sum
/// Abel-regularized.
LocPoly thm26_explicit(unsigned n, unsigned m, const LogParams& logs);

/// The multinomial sum over k_1 + ... + k_r = m with E-factors of rank r-1.
/// Throws RankTooSmall if r < 2.
LocPoly multi_d_def(unsigned n, unsigned m, const SymParams& p);
std::vector<std::vector<LocPoly>> multi_d_def_table(unsigned nmax, unsigned mmax,
                                                    const SymParams& p);

/// The closed form with e^((r-1) beta t). Printed: beta = ((r-1) x Lc + La)/A;
/// corrected: beta = (x Lc + La)/A. Throws RankTooSmall if r < 2.
BiSeries thm36_rhs_series(unsigned N, unsigned M, const SymParams& p,
                          FormulaVariant variant = FormulaVariant::printed);

/// The explicit formula with j <= min(n, m), exact composition and d-sums,
/// and the q-sum Abel-regularized with weight (-1)^q C(q+r-2, q).
///
/// Printed keeps the remaining defects of the display: no leading 2, no
/// C(m,l) in the u-convolution, the t-exponent without e^((r-1)t) and with
/// (r-1)^2 x Lc. Corrected repairs all four. Throws RankTooSmall if r < 2.
LocPoly thm37_explicit(unsigned n, unsigned m, const SymParams& p,
                       FormulaVariant variant = FormulaVariant::printed);

/// a + b / sqrt(5)
struct QuadraticValue {
  LocPoly rational;
  LocPoly sqrt5_part;
};

/// The printed formula evaluated with the printed q-coefficient
/// prod_{j=0}^{q-2} (q+1+j) / (q-1)! (taken as 1 at q = 0). Its weight
/// generating function is 1/2 + (1+4w)^(-1/2) / 2, so the regularized
/// value lies in Q(sqrt 5).
QuadraticValue thm37_printed_q(unsigned n, unsigned m, const SymParams& p);

/// The printed q-coefficient itself.
BigRational thm37_printed_q_coefficient(unsigned q);

}  // namespace pel
