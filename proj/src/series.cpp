#include "pel/series.hpp"

#include "pel/combinatorics.hpp"
#include "pel/errors.hpp"

#include <algorithm>

namespace pel {

const char* convention_name(Convention c) {
  return c == Convention::weak ? "weak" : "strict";
}

EgfSeries::EgfSeries(unsigned order) : coeffs_(order + 1) {}

EgfSeries::EgfSeries(std::vector<LocPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

EgfSeries EgfSeries::constant(const LocPoly& c, unsigned order) {
  EgfSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

EgfSeries EgfSeries::variable(unsigned order) {
  EgfSeries s(order);
  if (order >= 1) s.coeffs_[1] = LocPoly(1);
  return s;
}

EgfSeries EgfSeries::truncated(unsigned order) const {
  EgfSeries s(std::min(order, this->order()));
  std::copy_n(coeffs_.begin(), s.coeffs_.size(), s.coeffs_.begin());
  return s;
}

EgfSeries EgfSeries::pow(unsigned e) const {
  EgfSeries result = constant(LocPoly(1), order());
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

EgfSeries EgfSeries::operator-() const {
  EgfSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

EgfSeries operator+(const EgfSeries& a, const EgfSeries& b) {
  EgfSeries r(std::min(a.order(), b.order()));
  for (unsigned n = 0; n <= r.order(); ++n) r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
  return r;
}

EgfSeries operator-(const EgfSeries& a, const EgfSeries& b) { return a + (-b); }

EgfSeries operator*(const EgfSeries& a, const EgfSeries& b) {
  EgfSeries r(std::min(a.order(), b.order()));
  for (unsigned n = 0; n <= r.order(); ++n) {
    LocPoly s;
    for (unsigned i = 0; i <= n; ++i) {
      if (a.coeffs_[i].is_zero() || b.coeffs_[n - i].is_zero()) continue;
      s += a.coeffs_[i] * b.coeffs_[n - i];
    }
    r.coeffs_[n] = std::move(s);
  }
  return r;
}

EgfSeries operator*(const EgfSeries& a, const LocPoly& c) {
  EgfSeries r = a;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

EgfSeries ps_exp(const LocPoly& linear, unsigned order) {
  EgfSeries s(order);
  LocPoly term(1);
  s[0] = term;
  for (unsigned n = 1; n <= order; ++n) {
    term *= linear;
    term *= BigRational(1, n);
    s[n] = term;
  }
  return s;
}

EgfSeries ps_inv(const EgfSeries& f) {
  const auto inv0 = f[0].inverse();
  if (!inv0) {
    throw NonUnitConstantTerm("ps_inv: constant term " + to_string(f[0]) + " is not a unit");
  }
  EgfSeries g(f.order());
  g[0] = *inv0;
  for (unsigned n = 1; n <= f.order(); ++n) {
    LocPoly s;
    for (unsigned i = 1; i <= n; ++i) {
      if (f[i].is_zero() || g[n - i].is_zero()) continue;
      s += f[i] * g[n - i];
    }
    g[n] = -(s * *inv0);
  }
  return g;
}

namespace {

void require_zero_constant(const EgfSeries& f, const char* who) {
  if (!f[0].is_zero()) {
    throw NonzeroConstantTerm(std::string(who) + ": inner series has a nonzero constant term");
  }
}

// m^{-k}
BigRational inverse_power(unsigned m, int k) {
  if (k >= 0) return BigRational(1) / pow(BigRational(m), static_cast<unsigned>(k));
  return pow(BigRational(m), static_cast<unsigned>(-k));
}

EgfSeries weighted_powers(const std::vector<BigRational>& w, const EgfSeries& inner) {
  const unsigned N = inner.order();
  EgfSeries sum(N);
  EgfSeries power = EgfSeries::constant(LocPoly(1), N);
  for (unsigned m = 1; m <= N && m < w.size(); ++m) {
    power = power * inner;
    if (w[m] != 0) sum = sum + power * LocPoly(w[m]);
  }
  return sum;
}

}  // namespace

EgfSeries ps_compose_polylog(int k, const EgfSeries& inner) {
  require_zero_constant(inner, "ps_compose_polylog");
  std::vector<BigRational> w(inner.order() + 1, 0);
  for (unsigned m = 1; m <= inner.order(); ++m) w[m] = inverse_power(m, k);
  return weighted_powers(w, inner);
}

std::vector<BigRational> multi_polylog_weights(const MultiIndex& idx, unsigned max_m) {
  if (idx.k.empty()) throw std::invalid_argument("MultiIndex: rank must be >= 1");
  // f[m] = sum over tuples (m_1..m_i) ending at m_i = m.
  std::vector<BigRational> f(max_m + 1, 0);
  for (unsigned m = 1; m <= max_m; ++m) f[m] = inverse_power(m, idx.k[0]);
  for (std::size_t i = 1; i < idx.k.size(); ++i) {
    std::vector<BigRational> next(max_m + 1, 0);
    BigRational prefix = 0;  // sum of f[1..m] (weak) or f[1..m-1] (strict)
    for (unsigned m = 1; m <= max_m; ++m) {
      if (idx.convention == Convention::weak) prefix += f[m];
      next[m] = prefix * inverse_power(m, idx.k[i]);
      if (idx.convention == Convention::strict) prefix += f[m];
    }
    f = std::move(next);
  }
  return f;
}

EgfSeries ps_multi_polylog(const MultiIndex& idx, const EgfSeries& inner) {
  require_zero_constant(inner, "ps_multi_polylog");
  return weighted_powers(multi_polylog_weights(idx, inner.order()), inner);
}

EgfSeries ps_div_t(const EgfSeries& f) {
  require_zero_constant(f, "ps_div_t");
  if (f.order() == 0) throw OrderExceeded("ps_div_t: series of order 0");
  std::vector<LocPoly> c(f.coeffs().begin() + 1, f.coeffs().end());
  return EgfSeries(std::move(c));
}

LocPoly egf_coeff(const EgfSeries& f, unsigned n) {
  if (n > f.order()) {
    throw OrderExceeded("egf_coeff: n = " + std::to_string(n) + " exceeds order " +
                        std::to_string(f.order()));
  }
  return f[n] * factorial(n);
}

// ---------------------------------------------------------------------------

BiSeries::BiSeries(unsigned order_t, unsigned order_u)
    : order_t_(order_t), order_u_(order_u), grid_((order_t + 1) * (order_u + 1)) {}

BiSeries BiSeries::constant(const LocPoly& c, unsigned order_t, unsigned order_u) {
  BiSeries s(order_t, order_u);
  s.at(0, 0) = c;
  return s;
}

BiSeries BiSeries::from_t(const EgfSeries& f, unsigned order_u) {
  BiSeries s(f.order(), order_u);
  for (unsigned n = 0; n <= f.order(); ++n) s.at(n, 0) = f[n];
  return s;
}

BiSeries BiSeries::from_u(const EgfSeries& f, unsigned order_t) {
  BiSeries s(order_t, f.order());
  for (unsigned m = 0; m <= f.order(); ++m) s.at(0, m) = f[m];
  return s;
}

const LocPoly& BiSeries::at(unsigned n, unsigned m) const {
  if (n > order_t_ || m > order_u_) throw OrderExceeded("BiSeries::at out of range");
  return grid_[n * (order_u_ + 1) + m];
}

LocPoly& BiSeries::at(unsigned n, unsigned m) {
  if (n > order_t_ || m > order_u_) throw OrderExceeded("BiSeries::at out of range");
  return grid_[n * (order_u_ + 1) + m];
}

BiSeries BiSeries::operator-() const {
  BiSeries r = *this;
  for (auto& c : r.grid_) c = -c;
  return r;
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
  BiSeries r(std::min(a.order_t_, b.order_t_), std::min(a.order_u_, b.order_u_));
  for (unsigned n = 0; n <= r.order_t_; ++n) {
    for (unsigned m = 0; m <= r.order_u_; ++m) r.at(n, m) = a.at(n, m) + b.at(n, m);
  }
  return r;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) { return a + (-b); }

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  BiSeries r(std::min(a.order_t_, b.order_t_), std::min(a.order_u_, b.order_u_));
  for (unsigned n1 = 0; n1 <= r.order_t_; ++n1) {
    for (unsigned m1 = 0; m1 <= r.order_u_; ++m1) {
      const LocPoly& x = a.at(n1, m1);
      if (x.is_zero()) continue;
      for (unsigned n2 = 0; n1 + n2 <= r.order_t_; ++n2) {
        for (unsigned m2 = 0; m1 + m2 <= r.order_u_; ++m2) {
          const LocPoly& y = b.at(n2, m2);
          if (y.is_zero()) continue;
          r.at(n1 + n2, m1 + m2) += x * y;
        }
      }
    }
  }
  return r;
}

BiSeries operator*(const BiSeries& a, const LocPoly& c) {
  BiSeries r = a;
  for (auto& x : r.grid_) x *= c;
  return r;
}

BiSeries BiSeries::pow(unsigned e) const {
  BiSeries r = constant(LocPoly(1), order_t_, order_u_);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

BiSeries BiSeries::inverse() const {
  const auto inv0 = at(0, 0).inverse();
  if (!inv0) {
    throw NonUnitConstantTerm("BiSeries::inverse: constant term " + to_string(at(0, 0)) +
                              " is not a unit");
  }
  // h(n,m) = -inv0 * sum_{(i,j) != (0,0)} f(i,j) h(n-i, m-j), in graded order.
  BiSeries h(order_t_, order_u_);
  for (unsigned n = 0; n <= order_t_; ++n) {
    for (unsigned m = 0; m <= order_u_; ++m) {
      if (n == 0 && m == 0) {
        h.at(0, 0) = *inv0;
        continue;
      }
      LocPoly s;
      for (unsigned i = 0; i <= n; ++i) {
        for (unsigned j = 0; j <= m; ++j) {
          if (i == 0 && j == 0) continue;
          const LocPoly& f = at(i, j);
          const LocPoly& g = h.at(n - i, m - j);
          if (f.is_zero() || g.is_zero()) continue;
          s += f * g;
        }
      }
      h.at(n, m) = -(s * *inv0);
    }
  }
  return h;
}

LocPoly egf_coeff(const BiSeries& f, unsigned n, unsigned m) {
  return f.at(n, m) * (factorial(n) * factorial(m));
}

BiSeries bi_expand_rational(std::span<const BiSeries> num, std::span<const BiSeries> den,
                            unsigned N, unsigned M) {
  BiSeries r = BiSeries::constant(LocPoly(1), N, M);
  for (const auto& f : num) r = r * f;
  for (const auto& f : den) r = r * f.inverse();
  return r;
}

}  // namespace pel
