#pragma once

#include "pel/mpoly.hpp"

#include <optional>
#include <string>

namespace pel {

/// (La + Lb)
MPoly sum_ab();
/// (1 - lambda)
MPoly one_minus_lambda();

/// A polynomial divided by (La+Lb)^dA * (1-lambda)^dL.
///
/// Values are kept normalized: while an exponent is positive and the
/// numerator is exactly divisible by the matching factor, the factor is
/// cancelled. Equality is cross-multiplied, so it does not depend on
/// normalization.
class LocPoly {
 public:
  LocPoly() = default;
  LocPoly(MPoly num);                 // NOLINT: polynomials embed implicitly
  LocPoly(const BigRational& c);      // NOLINT
  LocPoly(long c) : LocPoly(MPoly(c)) {}  // NOLINT
  static LocPoly make(MPoly num, unsigned dA, unsigned dL);

  const MPoly& num() const { return num_; }
  unsigned dA() const { return dA_; }
  unsigned dL() const { return dL_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return dA_ == 0 && dL_ == 0; }

  LocPoly operator-() const;
  LocPoly& operator+=(const LocPoly& o);
  LocPoly& operator-=(const LocPoly& o);
  LocPoly& operator*=(const LocPoly& o);
  LocPoly& operator*=(const BigRational& c);
  friend LocPoly operator+(LocPoly a, const LocPoly& b) { return a += b; }
  friend LocPoly operator-(LocPoly a, const LocPoly& b) { return a -= b; }
  friend LocPoly operator*(LocPoly a, const LocPoly& b) { return a *= b; }
  friend LocPoly operator*(LocPoly a, const BigRational& c) { return a *= c; }
  friend LocPoly operator*(const BigRational& c, LocPoly a) { return a *= c; }
  friend LocPoly operator*(LocPoly a, long c) { return a *= BigRational(c); }
  friend LocPoly operator*(long c, LocPoly a) { return a *= BigRational(c); }
  friend bool operator==(const LocPoly& a, const LocPoly& b);

  LocPoly pow(unsigned e) const;

  /// Divides by (La+Lb)^k, resp. (1-lambda)^k.
  LocPoly divided_by_sum_ab(unsigned k = 1) const;
  LocPoly divided_by_one_minus_lambda(unsigned k = 1) const;

  /// Multiplicative inverse; present iff the value is a nonzero rational
  /// times a monomial in the denominator basis.
  std::optional<LocPoly> inverse() const;

  /// Partial derivative in a variable that does not occur in the
  /// denominator basis (x, y or Lc).
  LocPoly derivative(Var v) const;

  /// Substitutes `value` for `v`. Substituting into a denominator variable
  /// (lambda, La, Lb) is allowed when the matching exponent is zero, or when
  /// the denominator factor becomes a nonzero constant; anything else throws
  /// std::domain_error.
  LocPoly substitute(Var v, const MPoly& value) const;

 private:
  void normalize();
  MPoly num_;
  unsigned dA_ = 0;
  unsigned dL_ = 0;
};

/// "num" or "(num)/((La+Lb)^a*(1-lambda)^l)".
std::string to_string(const LocPoly& p);

}  // namespace pel
