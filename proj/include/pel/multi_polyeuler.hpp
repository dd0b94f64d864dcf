#pragma once

#include "pel/abel.hpp"
#include "pel/polyeuler.hpp"

#include <vector>

namespace pel {

struct MultiPolyEulerParams {
  LogParams logs;
  MultiIndex idx;

  unsigned rank() const { return static_cast<unsigned>(idx.rank()); }
};

/// 2 Li_(k_1..k_r)(1 - (ab)^-t) / (a^-t + b^t)^r * c^(rxt), through t^order.
EgfSeries mpe_series(const MultiPolyEulerParams& p, unsigned order);

std::vector<LocPoly> mpe_values(const MultiPolyEulerParams& p, unsigned nmax);

/// E_n^(k_1..k_r)(x;a,b,c).
LocPoly mpe_oracle(const MultiPolyEulerParams& p, unsigned n);

struct MultiParticulars {
  LocPoly classical;  // E_n(x) = E_n(x;1,e,e)
  LocPoly numbers;    // E_n(a,b) = E_n(0;a,b)
};
MultiParticulars mpe_particulars(const MultiPolyEulerParams& p, unsigned n);

/// Right-hand sides of the three relations:
///   1: sum_i C(n,i) (r Lc)^(n-i) E_i(a,b) x^(n-i)
///   2: A^n E_n(X) with X = (r x Lc + La)/A as printed, (x Lc + La)/A
///      when corrected
///   3: (n+1) r Lc E_n, to be compared with d/dx E_(n+1)
/// Throws std::invalid_argument for an unknown `which`.
LocPoly thm32_rhs(int which, const MultiPolyEulerParams& p, unsigned n,
                  FormulaVariant variant = FormulaVariant::printed);

/// sum_i C(n,i) (r Lc)^(n-i) E_i(x;a,b,c) y^(n-i)
LocPoly mpe_addition_rhs(const MultiPolyEulerParams& p, unsigned n);
/// E_n(x+y;a,b,c)
LocPoly mpe_addition_lhs(const MultiPolyEulerParams& p, unsigned n);

struct CompositionTerm {
  unsigned s = 0;
  BigRational weight;

  friend bool operator==(const CompositionTerm&, const CompositionTerm&) = default;
};

/// Weights of w^s in (1 + w)^-r: (-1)^s C(s+r-1, r-1), s = 0..s_max.
std::vector<CompositionTerm> enumerate_compositions(unsigned r, unsigned s_max);

/// The printed multiplicity reading: c_i counts the exponents equal to
/// i >= 1, the zero exponents take the rest of r, and the weight is
/// (-1)^s r! / prod_{i>=1} c_i! with s = sum i c_i.
std::vector<CompositionTerm> printed_compositions(unsigned r, unsigned s_max);

enum class Eq14Weights { derived, printed_c };

/// Generating function in w of the composition weights.
AbelGenerating eq14_weight_generating(unsigned r, Eq14Weights weights);

/// The explicit formula with index tuples cut at m_r <= n and the s-sum
/// Abel-regularized.
LocPoly eq14_explicit(const MultiPolyEulerParams& p, unsigned n,
                      Eq14Weights weights = Eq14Weights::derived);

}  // namespace pel
