#include "pel/multi_polyeuler.hpp"

#include "pel/combinatorics.hpp"
#include "pel/errors.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace pel {

EgfSeries mpe_series(const MultiPolyEulerParams& p, unsigned order) {
  const LogParams& L = p.logs;
  L.validate();
  if (p.idx.k.empty()) throw std::invalid_argument("multi index must have rank >= 1");
  const unsigned r = p.rank();
  const auto inner = EgfSeries::constant(1, order) - ps_exp(-L.A(), order);
  const auto den = ps_exp(-L.La(), order) + ps_exp(L.Lb(), order);
  const auto cx = ps_exp(MPoly::var(Var::x) * L.Lc() * static_cast<long>(r), order);
  return ps_multi_polylog(p.idx, inner) * ps_inv(den).pow(r) * cx * LocPoly(2);
}

std::vector<LocPoly> mpe_values(const MultiPolyEulerParams& p, unsigned nmax) {
  const auto s = mpe_series(p, nmax);
  std::vector<LocPoly> out;
  out.reserve(nmax + 1);
  for (unsigned n = 0; n <= nmax; ++n) out.push_back(egf_coeff(s, n));
  return out;
}

LocPoly mpe_oracle(const MultiPolyEulerParams& p, unsigned n) {
  return egf_coeff(mpe_series(p, n), n);
}

MultiParticulars mpe_particulars(const MultiPolyEulerParams& p, unsigned n) {
  MultiPolyEulerParams classical{LogParams::classical(), p.idx};
  MultiPolyEulerParams numbers{p.logs.with_lc(1), p.idx};
  return {mpe_oracle(classical, n), mpe_oracle(numbers, n).substitute(Var::x, MPoly(0))};
}

LocPoly thm32_rhs(int which, const MultiPolyEulerParams& p, unsigned n, FormulaVariant variant) {
  const long r = p.rank();
  const MPoly rlc = p.logs.Lc() * r;
  switch (which) {
    case 1: {
      const auto values = mpe_values(p, n);
      const MPoly x = MPoly::var(Var::x);
      LocPoly sum;
      for (unsigned i = 0; i <= n; ++i) {
        const LocPoly e_ab = values[i].substitute(Var::x, MPoly(0));
        sum += e_ab * LocPoly((rlc * x).pow(n - i) * binomial(n, static_cast<int>(i)));
      }
      return sum;
    }
    case 2: {
      MultiPolyEulerParams classical{LogParams::classical(), p.idx};
      const MPoly e = mpe_oracle(classical, n).num();
      const MPoly xlc = MPoly::var(Var::x) * p.logs.Lc();
      const MPoly arg = (variant == FormulaVariant::printed ? xlc * r : xlc) + p.logs.La();
      return scaled_substitution(e, n, arg, p.logs);
    }
    case 3:
      return mpe_oracle(p, n) * LocPoly(rlc * static_cast<long>(n + 1));
    default:
      throw std::invalid_argument("relation must be 1..3");
  }
}

LocPoly mpe_addition_rhs(const MultiPolyEulerParams& p, unsigned n) {
  const auto values = mpe_values(p, n);
  const MPoly ry = MPoly::var(Var::y) * p.logs.Lc() * static_cast<long>(p.rank());
  LocPoly sum;
  for (unsigned i = 0; i <= n; ++i) {
    sum += values[i] * LocPoly(ry.pow(n - i) * binomial(n, static_cast<int>(i)));
  }
  return sum;
}

LocPoly mpe_addition_lhs(const MultiPolyEulerParams& p, unsigned n) {
  return mpe_oracle(p, n).substitute(Var::x, MPoly::var(Var::x) + MPoly::var(Var::y));
}

std::vector<CompositionTerm> enumerate_compositions(unsigned r, unsigned s_max) {
  std::vector<CompositionTerm> out;
  for (unsigned s = 0; s <= s_max; ++s) {
    BigRational w = binomial(s + r - 1, static_cast<int>(r) - 1);
    if (s % 2 == 1) w = -w;
    out.push_back({s, w});
  }
  return out;
}

std::vector<CompositionTerm> printed_compositions(unsigned r, unsigned s_max) {
  std::map<unsigned, BigRational> by_s;
  // Multiplicities c_1..c_{s_max} with sum c_i <= r.
  std::vector<unsigned> c(s_max + 1, 0);
  std::function<void(unsigned, unsigned, unsigned)> walk = [&](unsigned i, unsigned used,
                                                                unsigned s) {
    if (i > s_max) {
      BigRational w = factorial(r);
      for (unsigned v = 1; v <= s_max; ++v) w /= factorial(c[v]);
      by_s[s] += s % 2 == 0 ? w : -w;
      return;
    }
    for (unsigned ci = 0; used + ci <= r && s + ci * i <= s_max; ++ci) {
      c[i] = ci;
      walk(i + 1, used + ci, s + ci * i);
    }
    c[i] = 0;
  };
  walk(1, 0, 0);
  std::vector<CompositionTerm> out;
  for (unsigned s = 0; s <= s_max; ++s) out.push_back({s, by_s[s]});
  return out;
}

AbelGenerating eq14_weight_generating(unsigned r, Eq14Weights weights) {
  if (weights == Eq14Weights::derived) return AbelGenerating({{0, r, 1}});
  // r! sum_{K=0}^{r} (-w/(1+w))^K / K!
  std::vector<AbelBasisElement> elements;
  for (unsigned K = 0; K <= r; ++K) {
    BigRational c = factorial(r) / factorial(K);
    if (K % 2 == 1) c = -c;
    elements.push_back({K, 0, c});
  }
  return AbelGenerating(std::move(elements));
}

LocPoly eq14_explicit(const MultiPolyEulerParams& p, unsigned n, Eq14Weights weights) {
  const unsigned r = p.rank();
  const MPoly A = p.logs.A();
  const MPoly rxlc = MPoly::var(Var::x) * p.logs.Lc() * static_cast<long>(r);
  const auto W = multi_polylog_weights(p.idx, n);
  const auto gen = eq14_weight_generating(r, weights);

  MPoly sum;
  for (unsigned i = 0; i <= n; ++i) {
    MPoly tuples;
    for (unsigned M = 1; M <= n; ++M) {
      if (W[M] == 0) continue;
      MPoly inner;
      for (unsigned j = 0; j <= M; ++j) {
        BigRational c = binomial(M, static_cast<int>(j));
        if (j % 2 == 1) c = -c;
        inner += (rxlc - A * static_cast<long>(j)).pow(n - i) * c;
      }
      tuples += inner * W[M];
    }
    if (tuples.is_zero()) continue;
    const MPoly s_part = abel_affine_power_sum(gen, p.logs.La() * static_cast<long>(r), A, i);
    sum += tuples * s_part * (binomial(n, static_cast<int>(i)) * 2);
  }
  return sum;
}

}  // namespace pel
