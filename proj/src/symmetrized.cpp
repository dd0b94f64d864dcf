#include "pel/symmetrized.hpp"

#include "pel/combinatorics.hpp"
#include "pel/errors.hpp"

#include <algorithm>
#include <map>

namespace pel {

MPoly AlphaShift::numerator(const LogParams& logs, Var v) const {
  const MPoly vlc = MPoly::var(v) * logs.Lc();
  const long rm1 = static_cast<long>(r) - 1;
  switch (kind) {
    case Kind::def:
      return vlc + logs.La();
    case Kind::explicit_form:
      return vlc + logs.La() * 2 + logs.Lb();
    case Kind::multi_def:
      return vlc * rm1 + logs.La();
    case Kind::multi_explicit: {
      const BigRational c2 = binomial(r, 2);
      return vlc * rm1 + logs.Lb() * c2 + logs.La() * (c2 + 1);
    }
  }
  return {};
}

LocPoly AlphaShift::value(const LogParams& logs, Var v) const {
  return logs.over_A(numerator(logs, v));
}

namespace {

void require_rank(unsigned r) {
  if (r < 2) throw RankTooSmall("rank r must be >= 2, got " + std::to_string(r));
}

std::vector<LocPoly> powers(const LocPoly& base, unsigned max) {
  std::vector<LocPoly> out{LocPoly(1)};
  for (unsigned i = 1; i <= max; ++i) out.push_back(out.back() * base);
  return out;
}

BiSeries exp_t(const LocPoly& c, unsigned N, unsigned M) {
  return BiSeries::from_t(ps_exp(c, N), M);
}

BiSeries exp_u(const LocPoly& c, unsigned N, unsigned M) {
  return BiSeries::from_u(ps_exp(c, M), N);
}

}  // namespace

std::vector<std::vector<LocPoly>> d_def_table(unsigned nmax, unsigned mmax, const LogParams& logs) {
  std::vector<std::vector<LocPoly>> E;  // E[k][n] = E_n^(-k)
  for (unsigned k = 0; k <= mmax; ++k) {
    E.push_back(pe_values({logs, -static_cast<int>(k)}, nmax));
  }
  const auto alpha = powers(AlphaShift{AlphaShift::Kind::def}.value(logs), mmax);
  std::vector<std::vector<LocPoly>> out(nmax + 1, std::vector<LocPoly>(mmax + 1));
  for (unsigned n = 0; n <= nmax; ++n) {
    for (unsigned m = 0; m <= mmax; ++m) {
      LocPoly sum;
      for (unsigned k = 0; k <= m; ++k) {
        sum += E[k][n] * alpha[m - k] * binomial(m, static_cast<int>(k));
      }
      out[n][m] = logs.over_A(sum, n);
    }
  }
  return out;
}

LocPoly d_def(unsigned n, unsigned m, const LogParams& logs) {
  return d_def_table(n, m, logs)[n][m];
}

BiSeries thm25_rhs_series(unsigned N, unsigned M, const LogParams& logs) {
  logs.validate();
  const LocPoly alpha = AlphaShift{AlphaShift::Kind::def}.value(logs, Var::y);
  const LocPoly beta = AlphaShift{AlphaShift::Kind::def}.value(logs, Var::x);
  const BiSeries one = BiSeries::constant(1, N, M);
  const BiSeries et = exp_t(1, N, M);
  const BiSeries eu = exp_u(1, N, M);
  const BiSeries num[] = {BiSeries::constant(2, N, M), exp_u(alpha, N, M), exp_t(beta, N, M),
                          et, eu, one - exp_t(-1, N, M)};
  const BiSeries den[] = {et + one, et + eu - et * eu};
  return bi_expand_rational(num, den, N, M);
}

LocPoly thm26_explicit(unsigned n, unsigned m, const LogParams& logs) {
  logs.validate();
  const MPoly A = logs.A();
  const MPoly b1 = AlphaShift{AlphaShift::Kind::explicit_form}.numerator(logs, Var::x);
  const MPoly b2 = AlphaShift{AlphaShift::Kind::def}.numerator(logs, Var::x);
  const auto alpha = powers(AlphaShift{AlphaShift::Kind::explicit_form}.value(logs), m);
  std::vector<LocPoly> idiff;  // idiff[e]: regularized i-sum at exponent e, over A^e
  for (unsigned e = 0; e <= n; ++e) {
    idiff.push_back(logs.over_A(abel_affine_power_sum(b1, A, e, 1) - abel_affine_power_sum(b2, A, e, 1), e));
  }
  LocPoly sum;
  for (unsigned j = 0; j <= std::min(n, m); ++j) {
    LocPoly P;
    for (unsigned l = j; l <= n; ++l) {
      P += idiff[n - l] * (binomial(n, static_cast<int>(l)) * stirling2(l, j));
    }
    LocPoly Q;
    for (unsigned r = j; r <= m; ++r) {
      Q += alpha[m - r] * (binomial(m, static_cast<int>(r)) * stirling2(r, j));
    }
    const BigRational jf = factorial(j);
    sum += P * Q * (jf * jf * 2);
  }
  return sum;
}

namespace {

using ValueCache = std::map<std::vector<int>, std::vector<LocPoly>>;

std::vector<std::vector<LocPoly>> multi_table(unsigned nmax, unsigned mmax, const SymParams& p) {
  require_rank(p.r);
  p.logs.validate();
  const unsigned rho = p.r - 1;
  const auto alpha = powers(AlphaShift{AlphaShift::Kind::multi_def, p.r}.value(p.logs), mmax);
  ValueCache cache;
  auto values = [&](const std::vector<int>& idx) -> const std::vector<LocPoly>& {
    auto it = cache.find(idx);
    if (it == cache.end()) {
      it = cache.emplace(idx, mpe_values({p.logs, {idx, p.convention}}, nmax)).first;
    }
    return it->second;
  };
  std::vector<std::vector<LocPoly>> out(nmax + 1, std::vector<LocPoly>(mmax + 1));
  for (unsigned m = 0; m <= mmax; ++m) {
    std::vector<LocPoly> sums(nmax + 1);
    for (const auto& parts : weak_compositions(m, p.r)) {
      std::vector<int> idx(rho);
      for (unsigned i = 0; i < rho; ++i) idx[i] = -static_cast<int>(parts[i]);
      const BigRational w = multinomial(m, parts);
      const auto& E = values(idx);
      for (unsigned n = 0; n <= nmax; ++n) {
        if (!E[n].is_zero()) sums[n] += E[n] * alpha[parts[rho]] * w;
      }
    }
    for (unsigned n = 0; n <= nmax; ++n) out[n][m] = p.logs.over_A(sums[n], n);
  }
  return out;
}

}  // namespace

std::vector<std::vector<LocPoly>> multi_d_def_table(unsigned nmax, unsigned mmax,
                                                    const SymParams& p) {
  return multi_table(nmax, mmax, p);
}

LocPoly multi_d_def(unsigned n, unsigned m, const SymParams& p) {
  return multi_table(n, m, p)[n][m];
}

BiSeries thm36_rhs_series(unsigned N, unsigned M, const SymParams& p, FormulaVariant variant) {
  require_rank(p.r);
  p.logs.validate();
  const unsigned rho = p.r - 1;
  const LocPoly alpha = AlphaShift{AlphaShift::Kind::multi_def, p.r}.value(p.logs, Var::y);
  const LocPoly beta = variant == FormulaVariant::printed
                           ? AlphaShift{AlphaShift::Kind::multi_def, p.r}.value(p.logs, Var::x)
                           : AlphaShift{AlphaShift::Kind::def}.value(p.logs, Var::x);
  const BiSeries one = BiSeries::constant(1, N, M);
  const BiSeries et = exp_t(1, N, M);
  std::vector<BiSeries> num{BiSeries::constant(2, N, M),
                            exp_u(alpha + LocPoly(binomial(p.r, 2)), N, M),
                            exp_t((beta + LocPoly(1)) * static_cast<long>(rho), N, M),
                            (one - exp_t(-1, N, M)).pow(rho)};
  std::vector<BiSeries> den{(one + et).pow(rho)};
  for (unsigned i = 1; i <= rho; ++i) {
    const BiSeries eiu = exp_u(static_cast<long>(i), N, M);
    den.push_back(et + eiu - et * eiu);
  }
  return bi_expand_rational(num, den, N, M);
}

namespace {

// Coefficient of u^l/l! in prod_{i=1}^{rho} (e^{iu} - 1)^{c_i}, as the
// nested d-sum of the display.
BigRational u_convolution(unsigned l, const std::vector<unsigned>& c) {
  const unsigned rho = static_cast<unsigned>(c.size());
  BigRational total = 0;
  // d_{rho-1}, ..., d_1 chosen from the remaining mass.
  auto rec = [&](auto&& self, unsigned i, unsigned rem, BigRational acc) -> void {
    if (i == 0) {
      total += acc * factorial(c[0]) * stirling2(rem, c[0]);
      return;
    }
    for (unsigned d = c[i]; d <= rem; ++d) {
      const BigRational f = binomial(rem, static_cast<int>(d)) * stirling2(d, c[i]) *
                            factorial(c[i]) * pow(BigRational(i + 1), d);
      self(self, i - 1, rem - d, acc * f);
    }
  };
  rec(rec, rho - 1, l, BigRational(1));
  return total;
}

// Shared body of the explicit formula; `q_moments` are the regularized
// moments of the q-weights.
LocPoly thm37_eval(unsigned n, unsigned m, const SymParams& p, FormulaVariant variant,
                   const std::vector<BigRational>& q_moments) {
  require_rank(p.r);
  p.logs.validate();
  const bool corrected = variant == FormulaVariant::corrected;
  const unsigned rho = p.r - 1;
  const LogParams& L = p.logs;
  const MPoly A = L.A();
  const MPoly xlc = MPoly::var(Var::x) * L.Lc();

  // V[e] = sum_k (-1)^k C(rho,k) sum_q w_q (base_k + q A)^e / A^e
  std::vector<LocPoly> V;
  for (unsigned e = 0; e <= n; ++e) {
    MPoly s;
    for (unsigned k = 0; k <= rho; ++k) {
      const long rk = static_cast<long>(rho) - static_cast<long>(k);
      const MPoly base = corrected
                             ? xlc * static_cast<long>(rho) + L.La() * static_cast<long>(rho) + A * rk
                             : xlc * static_cast<long>(rho * rho) - L.Lb() * static_cast<long>(k) +
                                   L.La() * rk;
      BigRational c = binomial(rho, static_cast<int>(k));
      if (k % 2 == 1) c = -c;
      s += affine_power_sum(q_moments, base, A, e) * c;
    }
    V.push_back(L.over_A(s, e));
  }
  const auto alpha = powers(AlphaShift{AlphaShift::Kind::multi_explicit, p.r}.value(L), m);

  LocPoly sum;
  for (unsigned j = 0; j <= std::min(n, m); ++j) {
    LocPoly T;
    for (unsigned q = j; q <= n; ++q) {
      T += V[n - q] * (binomial(n, static_cast<int>(q)) * factorial(j) * stirling2(q, j));
    }
    if (T.is_zero()) continue;
    LocPoly U;
    for (const auto& c : weak_compositions(j, rho)) {
      for (unsigned l = j; l <= m; ++l) {
        BigRational w = u_convolution(l, c);
        if (w == 0) continue;
        if (corrected) w *= binomial(m, static_cast<int>(l));
        U += alpha[m - l] * w;
      }
    }
    sum += T * U;
  }
  return corrected ? sum * 2 : sum;
}

// theta-closed family w^j (1+4w)^(-1/2-j); value at w = 1 is 5^-j / sqrt 5.
std::vector<BigRational> printed_q_sqrt5_moments(unsigned pmax) {
  std::map<unsigned, BigRational> g{{0, BigRational(1, 2)}};
  std::vector<BigRational> out;
  for (unsigned p = 0; p <= pmax; ++p) {
    BigRational v = 0;
    for (const auto& [j, c] : g) v += c / pow(BigRational(5), j);
    out.push_back(v);
    std::map<unsigned, BigRational> next;
    for (const auto& [j, c] : g) {
      if (j > 0) next[j] += c * j;
      next[j + 1] -= c * (2 + 4 * j);
    }
    g = std::move(next);
  }
  return out;
}

}  // namespace

LocPoly thm37_explicit(unsigned n, unsigned m, const SymParams& p, FormulaVariant variant) {
  require_rank(p.r);
  const auto moments = AbelGenerating({{0, p.r - 1, 1}}).moments(n);
  return thm37_eval(n, m, p, variant, moments);
}

QuadraticValue thm37_printed_q(unsigned n, unsigned m, const SymParams& p) {
  std::vector<BigRational> rational(n + 1, 0);
  rational[0] = BigRational(1, 2);
  return {thm37_eval(n, m, p, FormulaVariant::printed, rational),
          thm37_eval(n, m, p, FormulaVariant::printed, printed_q_sqrt5_moments(n))};
}

BigRational thm37_printed_q_coefficient(unsigned q) {
  if (q == 0) return 1;
  BigRational num = 1;
  for (unsigned j = 0; j + 2 <= q; ++j) num *= q + 1 + j;
  return num / factorial(q - 1);
}

}  // namespace pel
