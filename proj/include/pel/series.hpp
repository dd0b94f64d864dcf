#pragma once

#include "pel/locpoly.hpp"

#include <span>
#include <string>
#include <vector>

namespace pel {

/// Ordering of the summation indices of a multiple polylogarithm:
/// 1 <= m_1 <= ... <= m_r (weak) or 1 <= m_1 < ... < m_r (strict).
enum class Convention { weak, strict };

const char* convention_name(Convention c);

/// Orders (k_1, ..., k_r) of a multiple polylogarithm; negative orders are
/// allowed.
struct MultiIndex {
  std::vector<int> k;
  Convention convention = Convention::weak;

  std::size_t rank() const { return k.size(); }
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

/// Truncated power series in t with LocPoly coefficients: coeffs[n] is the
/// ordinary coefficient of t^n, n = 0..order. Binary operations truncate to
/// the smaller order.
class EgfSeries {
 public:
  explicit EgfSeries(unsigned order = 0);
  explicit EgfSeries(std::vector<LocPoly> coeffs);
  static EgfSeries constant(const LocPoly& c, unsigned order);
  /// The series t.
  static EgfSeries variable(unsigned order);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const LocPoly& operator[](unsigned n) const { return coeffs_.at(n); }
  LocPoly& operator[](unsigned n) { return coeffs_.at(n); }
  const std::vector<LocPoly>& coeffs() const { return coeffs_; }

  EgfSeries truncated(unsigned order) const;
  EgfSeries pow(unsigned e) const;

  EgfSeries operator-() const;
  friend EgfSeries operator+(const EgfSeries& a, const EgfSeries& b);
  friend EgfSeries operator-(const EgfSeries& a, const EgfSeries& b);
  friend EgfSeries operator*(const EgfSeries& a, const EgfSeries& b);
  friend EgfSeries operator*(const EgfSeries& a, const LocPoly& c);
  friend EgfSeries operator*(const LocPoly& c, const EgfSeries& a) { return a * c; }
  friend bool operator==(const EgfSeries& a, const EgfSeries& b) = default;

 private:
  std::vector<LocPoly> coeffs_;
};

/// exp(linear * t): coeffs[n] = linear^n / n!.
EgfSeries ps_exp(const LocPoly& linear, unsigned order);

inline EgfSeries ps_mul(const EgfSeries& f, const EgfSeries& g) { return f * g; }
inline EgfSeries ps_add(const EgfSeries& f, const EgfSeries& g) { return f + g; }
inline EgfSeries ps_scale(const EgfSeries& f, const LocPoly& c) { return f * c; }

/// 1/f. Throws NonUnitConstantTerm unless f[0] is invertible in LocPoly.
EgfSeries ps_inv(const EgfSeries& f);

/// Li_k(inner) = sum_{m>=1} inner^m / m^k, truncated at the order of
/// `inner`. Throws NonzeroConstantTerm if inner[0] != 0.
EgfSeries ps_compose_polylog(int k, const EgfSeries& inner);

/// W[M] = sum over index tuples with largest index M of prod m_i^{-k_i},
/// for M = 0..max_m (W[0] = 0).
std::vector<BigRational> multi_polylog_weights(const MultiIndex& idx, unsigned max_m);

/// Li_{(k_1..k_r)}(inner) = sum_tuples inner^{m_r} / prod m_i^{k_i}.
/// Throws NonzeroConstantTerm if inner[0] != 0.
EgfSeries ps_multi_polylog(const MultiIndex& idx, const EgfSeries& inner);

/// f / t, of order f.order() - 1. Throws NonzeroConstantTerm if f[0] != 0.
EgfSeries ps_div_t(const EgfSeries& f);

/// n! * f[n]. Throws OrderExceeded if n > f.order().
LocPoly egf_coeff(const EgfSeries& f, unsigned n);

/// Truncated power series in (t, u): at(n, m) is the coefficient of t^n u^m.
class BiSeries {
 public:
  BiSeries(unsigned order_t, unsigned order_u);
  static BiSeries constant(const LocPoly& c, unsigned order_t, unsigned order_u);
  /// Embeds a series in t (resp. u).
  static BiSeries from_t(const EgfSeries& f, unsigned order_u);
  static BiSeries from_u(const EgfSeries& f, unsigned order_t);

  unsigned order_t() const { return order_t_; }
  unsigned order_u() const { return order_u_; }
  const LocPoly& at(unsigned n, unsigned m) const;
  LocPoly& at(unsigned n, unsigned m);

  BiSeries operator-() const;
  friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator-(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator*(const BiSeries& a, const LocPoly& c);
  friend bool operator==(const BiSeries& a, const BiSeries& b) = default;

  BiSeries pow(unsigned e) const;
  /// Throws NonUnitConstantTerm unless at(0,0) is invertible.
  BiSeries inverse() const;

 private:
  unsigned order_t_;
  unsigned order_u_;
  std::vector<LocPoly> grid_;  // row-major, (order_u_+1) per row
};

/// n! m! * f.at(n, m). Throws OrderExceeded outside the grid.
LocPoly egf_coeff(const BiSeries& f, unsigned n, unsigned m);

/// prod(num) / prod(den) truncated at (N, M); every denominator factor
/// must have an invertible constant term.
BiSeries bi_expand_rational(std::span<const BiSeries> num, std::span<const BiSeries> den,
                            unsigned N, unsigned M);

}  // namespace pel
