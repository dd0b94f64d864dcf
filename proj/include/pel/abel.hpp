#pragma once

#include "pel/mpoly.hpp"
#include "pel/rational.hpp"

#include <vector>

namespace pel {

/// coeff * w^j * (1+w)^-(r+j).
///
/// Sums of these elements represent the generating functions
/// sum_s a_s w^s of the alternating sequences that need regularizing; the
/// Abel value of sum_s a_s s^p is theta^p applied to the generating
/// function (theta = w d/dw) and evaluated at w = 1. The family with a
/// fixed r is closed under theta.
struct AbelBasisElement {
  unsigned j = 0;
  unsigned r = 1;
  BigRational coeff = 1;

  /// coeff * 2^-(r+j)
  BigRational value_at_one() const;
};

/// A finite linear combination of basis elements.
class AbelGenerating {
 public:
  AbelGenerating() = default;
  explicit AbelGenerating(std::vector<AbelBasisElement> elements);

  /// theta = w d/dw, term by term.
  AbelGenerating theta() const;
  BigRational value_at_one() const;
  const std::vector<AbelBasisElement>& elements() const { return elements_; }

  /// Abel values of sum_s a_s s^p for p = 0..pmax.
  std::vector<BigRational> moments(unsigned pmax) const;

 private:
  std::vector<AbelBasisElement> elements_;  // sorted by (r, j), no zeros
};

/// Abel sum of sum_{i>=0} (-1)^i i^p, from Bernoulli numbers:
/// 1/2 at p = 0, otherwise -(2^{p+1}-1) B_{p+1} / (p+1).
BigRational abel_alternating_power_sum(unsigned p);

/// Abel sum of sum_{s>=0} (-1)^s C(s+r-1, r-1) s^p, i.e. theta^p (1+w)^-r
/// at w = 1. Requires r >= 1.
BigRational abel_negative_binomial_power_sum(unsigned p, unsigned r);

/// sum_{p=0}^{e} C(e,p) base^{e-p} step^p T(p, r): the Abel value of
/// sum_i (-1)^i C(i+r-1, r-1) (base + i*step)^e.
MPoly abel_affine_power_sum(const MPoly& base, const MPoly& step, unsigned e, unsigned r);

/// sum_{p=0}^{e} C(e,p) base^{e-p} step^p moments[p]; needs e+1 moments.
MPoly affine_power_sum(const std::vector<BigRational>& moments, const MPoly& base,
                       const MPoly& step, unsigned e);

/// Same reduction for an arbitrary generating function of the weights.
MPoly abel_affine_power_sum(const AbelGenerating& weights, const MPoly& base,
                            const MPoly& step, unsigned e);

}  // namespace pel
