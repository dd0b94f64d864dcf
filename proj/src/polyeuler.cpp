#include "pel/polyeuler.hpp"

#include "pel/combinatorics.hpp"
#include "pel/errors.hpp"

#include <stdexcept>

namespace pel {

LogParams LogParams::assigned(BigRational la, BigRational lb, BigRational lc) {
  LogParams p{std::move(la), std::move(lb), std::move(lc)};
  p.validate();
  return p;
}

LogParams LogParams::classical() { return assigned(0, 1, 1); }

void LogParams::validate() const {
  if (la.has_value() != lb.has_value()) {
    throw InvalidGrid("ln a and ln b must be both assigned or both symbolic");
  }
  if (la && *la + *lb == 0) throw InvalidGrid("assigned ln a + ln b must be nonzero");
}

MPoly LogParams::La() const { return la ? MPoly(*la) : MPoly::var(Var::La); }
MPoly LogParams::Lb() const { return lb ? MPoly(*lb) : MPoly::var(Var::Lb); }
MPoly LogParams::Lc() const { return lc ? MPoly(*lc) : MPoly::var(Var::Lc); }
MPoly LogParams::A() const { return La() + Lb(); }

LocPoly LogParams::over_A(const LocPoly& v, unsigned k) const {
  if (symbolic_ab()) return v.divided_by_sum_ab(k);
  return v * pow(BigRational(1) / (*la + *lb), k);
}

LogParams LogParams::with_lc(BigRational value) const {
  LogParams p = *this;
  p.lc = std::move(value);
  return p;
}

EgfSeries pe_series(const PolyEulerParams& p, unsigned order) {
  const LogParams& L = p.logs;
  L.validate();
  const auto inner = EgfSeries::constant(1, order) - ps_exp(-L.A(), order);
  const auto den = ps_exp(-L.La(), order) + ps_exp(L.Lb(), order);
  const auto cx = ps_exp(MPoly::var(Var::x) * L.Lc(), order);
  return ps_compose_polylog(p.k, inner) * ps_inv(den) * cx * LocPoly(2);
}

std::vector<LocPoly> pe_values(const PolyEulerParams& p, unsigned nmax) {
  const auto s = pe_series(p, nmax);
  std::vector<LocPoly> out;
  out.reserve(nmax + 1);
  for (unsigned n = 0; n <= nmax; ++n) out.push_back(egf_coeff(s, n));
  return out;
}

LocPoly pe_oracle(const PolyEulerParams& p, unsigned n) { return egf_coeff(pe_series(p, n), n); }

LocPoly pe_numbers(const PolyEulerParams& p, unsigned n) {
  return pe_oracle(p, n).substitute(Var::x, MPoly(0));
}

MPoly pe_classical(int k, unsigned n) {
  return pe_oracle({LogParams::classical(), k}, n).num();
}

BigRational ohno_sasaki_number(int k, unsigned n) {
  const unsigned order = n + 1;
  const auto inner = EgfSeries::constant(1, order) - ps_exp(-4, order);
  const auto num = ps_div_t(ps_compose_polylog(k, inner));
  // 4t cosh t = 2t (e^t + e^-t)
  const auto den = (ps_exp(1, n) + ps_exp(-1, n)) * LocPoly(2);
  return egf_coeff(num * ps_inv(den), n).num().constant_term();
}

LocPoly thm21_rhs(const PolyEulerParams& p, unsigned n) {
  const auto values = pe_values(p, n);
  const MPoly xc = MPoly::var(Var::x) * p.logs.Lc();
  LocPoly sum;
  for (unsigned i = 0; i <= n; ++i) {
    const LocPoly e_ab = values[i].substitute(Var::x, MPoly(0));
    sum += e_ab * LocPoly(xc.pow(n - i) * binomial(n, static_cast<int>(i)));
  }
  return sum;
}

LocPoly scaled_substitution(const MPoly& poly, unsigned e, const MPoly& num,
                            const LogParams& logs) {
  const auto coeffs = poly.coefficients_in(Var::x);
  if (coeffs.size() > e + 1) {
    throw std::invalid_argument("scaled_substitution: degree exceeds the scaling exponent");
  }
  const MPoly A = logs.A();
  MPoly sum;
  for (unsigned j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    sum += coeffs[j] * num.pow(j) * A.pow(e - j);
  }
  return sum;
}

LocPoly thm22_rhs(const PolyEulerParams& p, unsigned n) {
  const MPoly arg = MPoly::var(Var::x) * p.logs.Lc() + p.logs.La();
  return scaled_substitution(pe_classical(p.k, n), n, arg, p.logs);
}

LocPoly d_dx(const LocPoly& v) { return v.derivative(Var::x); }

LocPoly addition_rhs(const PolyEulerParams& p, unsigned n) {
  PolyEulerParams q{p.logs.with_lc(1), p.k};
  const auto values = pe_values(q, n);
  const MPoly y = MPoly::var(Var::y);
  LocPoly sum;
  for (unsigned i = 0; i <= n; ++i) {
    sum += values[i] * LocPoly(y.pow(n - i) * binomial(n, static_cast<int>(i)));
  }
  return sum;
}

LocPoly addition_lhs(const PolyEulerParams& p, unsigned n) {
  PolyEulerParams q{p.logs.with_lc(1), p.k};
  return pe_oracle(q, n).substitute(Var::x, MPoly::var(Var::x) + MPoly::var(Var::y));
}

LocPoly eq5_explicit(const PolyEulerParams& p, unsigned n) {
  const MPoly xc = MPoly::var(Var::x) * p.logs.Lc();
  const MPoly A = p.logs.A();
  MPoly sum;
  for (unsigned m = 0; m <= n; ++m) {
    for (unsigned j = 1; j <= m; ++j) {
      const BigRational jk = p.k >= 0 ? BigRational(1) / pow(BigRational(j), p.k)
                                      : pow(BigRational(j), static_cast<unsigned>(-p.k));
      for (unsigned i = 0; i <= j; ++i) {
        const unsigned q = m - j + i;
        const BigRational w = BigRational(q % 2 == 0 ? 2 : -2) * jk * binomial(j, static_cast<int>(i));
        sum += (xc - A * static_cast<long>(q + 1)).pow(n) * w;
      }
    }
  }
  return sum;
}

namespace {

MPoly product_of_shifts(unsigned m, long step) {
  MPoly r(1);
  const MPoly x = MPoly::var(Var::x);
  for (unsigned i = 0; i < m; ++i) r *= x + MPoly(step * static_cast<long>(i));
  return r;
}

}  // namespace

LocPoly cauchy_identity_rhs(int which, const PolyEulerParams& p, unsigned n, unsigned s,
                            FormulaVariant variant) {
  if (which < 1 || which > 4) throw std::invalid_argument("cauchy identity must be 1..4");
  if ((which == 3 || which == 4) && s == 0) throw std::invalid_argument("s must be >= 1");
  PolyEulerParams q{p.logs.with_lc(1), p.k};
  const auto E = pe_values(q, n);
  auto E_at = [&](unsigned idx, long x0) { return E[idx].substitute(Var::x, MPoly(x0)); };

  LocPoly sum;
  switch (which) {
    case 1:
      for (unsigned m = 0; m <= n; ++m) {
        LocPoly inner;
        for (unsigned l = m; l <= n; ++l) {
          inner += E_at(n - l, -static_cast<long>(m)) *
                   (stirling2(l, m) * binomial(n, static_cast<int>(l)));
        }
        inner *= LocPoly(rising_factorial(m));
        if (variant == FormulaVariant::printed) inner *= BigRational(1) / factorial(m);
        sum += inner;
      }
      break;
    case 2:
      for (unsigned m = 0; m <= n; ++m) {
        LocPoly inner;
        for (unsigned l = m; l <= n; ++l) {
          inner += E_at(n - l, 0) * (stirling2(l, m) * binomial(n, static_cast<int>(l)));
        }
        sum += inner * LocPoly(falling_factorial(m));
      }
      break;
    case 3:
      for (unsigned m = 0; m <= n; ++m) {
        LocPoly inner;
        for (unsigned l = 0; l <= n - m; ++l) {
          const BigRational w = binomial(n - m, static_cast<int>(l)) /
                                binomial(l + s, static_cast<int>(l)) * stirling2(l + s, s);
          inner += E_at(n - m - l, 0) * w;
        }
        sum += inner * LocPoly(higher_bernoulli(s, m)) * binomial(n, static_cast<int>(m));
      }
      break;
    case 4: {
      const MPoly neg_lambda = -MPoly::var(Var::lambda);
      for (unsigned m = 0; m <= n; ++m) {
        LocPoly inner;
        for (unsigned j = 0; j <= s; ++j) {
          inner += E_at(n - m, static_cast<long>(j)) *
                   LocPoly(neg_lambda.pow(s - j) * binomial(s, static_cast<int>(j)));
        }
        sum += inner * frobenius_euler(s, m) * binomial(n, static_cast<int>(m));
      }
      sum = sum.divided_by_one_minus_lambda(s);
      break;
    }
  }
  return sum;
}

MPoly euler_polynomial(unsigned n) {
  const auto den = ps_exp(1, n) + EgfSeries::constant(1, n);
  const auto s = ps_exp(MPoly::var(Var::x), n) * ps_inv(den) * LocPoly(2);
  return egf_coeff(s, n).num();
}

MPoly rising_factorial(unsigned m) { return product_of_shifts(m, 1); }

MPoly falling_factorial(unsigned m) { return product_of_shifts(m, -1); }

MPoly higher_bernoulli(unsigned s, unsigned n) {
  // (e^t - 1) / t, needing one extra order before the division.
  const auto em1 = ps_exp(1, n + 1) - EgfSeries::constant(1, n + 1);
  const auto base = ps_inv(ps_div_t(em1));
  const auto series = base.pow(s) * ps_exp(MPoly::var(Var::x), n);
  return egf_coeff(series, n).num();
}

LocPoly frobenius_euler(unsigned s, unsigned n) {
  const LocPoly oml(one_minus_lambda());
  // e^t - lambda = (1 - lambda) + (e^t - 1)
  const auto den = ps_exp(1, n) - EgfSeries::constant(MPoly::var(Var::lambda), n);
  const auto base = ps_inv(den) * oml;
  return egf_coeff(base.pow(s) * ps_exp(MPoly::var(Var::x), n), n);
}

}  // namespace pel
