#include "pel/abel.hpp"

#include "pel/combinatorics.hpp"

#include <map>
#include <stdexcept>

namespace pel {

BigRational AbelBasisElement::value_at_one() const {
  return coeff * pow2(-static_cast<int>(r + j));
}

namespace {

std::vector<AbelBasisElement> collect(std::map<std::pair<unsigned, unsigned>, BigRational> m) {
  std::vector<AbelBasisElement> out;
  for (auto& [key, c] : m) {
    if (c != 0) out.push_back({key.second, key.first, std::move(c)});
  }
  return out;
}

}  // namespace

AbelGenerating::AbelGenerating(std::vector<AbelBasisElement> elements) {
  std::map<std::pair<unsigned, unsigned>, BigRational> m;
  for (auto& e : elements) m[{e.r, e.j}] += e.coeff;
  elements_ = collect(std::move(m));
}

AbelGenerating AbelGenerating::theta() const {
  // theta[w^j (1+w)^-(r+j)] = j w^j (1+w)^-(r+j) - (r+j) w^{j+1} (1+w)^-(r+j+1)
  std::map<std::pair<unsigned, unsigned>, BigRational> m;
  for (const auto& e : elements_) {
    if (e.j > 0) m[{e.r, e.j}] += e.coeff * e.j;
    if (e.r + e.j > 0) m[{e.r, e.j + 1}] -= e.coeff * (e.r + e.j);
  }
  AbelGenerating g;
  g.elements_ = collect(std::move(m));
  return g;
}

BigRational AbelGenerating::value_at_one() const {
  BigRational v = 0;
  for (const auto& e : elements_) v += e.value_at_one();
  return v;
}

std::vector<BigRational> AbelGenerating::moments(unsigned pmax) const {
  std::vector<BigRational> out;
  out.reserve(pmax + 1);
  AbelGenerating g = *this;
  for (unsigned p = 0; p <= pmax; ++p) {
    out.push_back(g.value_at_one());
    if (p < pmax) g = g.theta();
  }
  return out;
}

BigRational abel_alternating_power_sum(unsigned p) {
  if (p == 0) return make_rational(1, 2);
  const BigRational eta = (pow2(static_cast<int>(p) + 1) - 1) / BigRational(p + 1) *
                          bernoulli_number(p + 1);
  return -eta;
}

BigRational abel_negative_binomial_power_sum(unsigned p, unsigned r) {
  if (r == 0) throw std::invalid_argument("abel_negative_binomial_power_sum: r must be >= 1");
  AbelGenerating g({{0, r, 1}});
  for (unsigned i = 0; i < p; ++i) g = g.theta();
  return g.value_at_one();
}

MPoly affine_power_sum(const std::vector<BigRational>& moments, const MPoly& base,
                       const MPoly& step, unsigned e) {
  if (moments.size() < e + 1) throw std::invalid_argument("affine_power_sum: too few moments");
  MPoly sum;
  MPoly step_pow(1);
  for (unsigned p = 0; p <= e; ++p) {
    if (moments[p] != 0) {
      sum += base.pow(e - p) * step_pow * (binomial(e, static_cast<int>(p)) * moments[p]);
    }
    if (p < e) step_pow *= step;
  }
  return sum;
}

MPoly abel_affine_power_sum(const AbelGenerating& weights, const MPoly& base,
                            const MPoly& step, unsigned e) {
  return affine_power_sum(weights.moments(e), base, step, e);
}

MPoly abel_affine_power_sum(const MPoly& base, const MPoly& step, unsigned e, unsigned r) {
  if (r == 0) throw std::invalid_argument("abel_affine_power_sum: r must be >= 1");
  return abel_affine_power_sum(AbelGenerating({{0, r, 1}}), base, step, e);
}

}  // namespace pel
