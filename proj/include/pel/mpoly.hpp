#pragma once

#include "pel/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pel {

/// The fixed indeterminates, in serialization order. La/Lb/Lc stand for
/// ln a, ln b, ln c.
enum class Var : std::uint8_t { x = 0, y = 1, lambda = 2, La = 3, Lb = 4, Lc = 5 };

inline constexpr std::size_t kNumVars = 6;
inline constexpr std::array<Var, kNumVars> kAllVars = {Var::x, Var::y, Var::lambda,
                                                       Var::La, Var::Lb, Var::Lc};

/// Plain-text name ("x", "y", "lambda", "La", "Lb", "Lc").
const char* var_name(Var v);

/// Exponent vector over (x, y, lambda, La, Lb, Lc), packed into 10-bit slots
/// with x in the most significant position, so integer order on `key` is
/// lexicographic order on the exponent vector. The top bit of every slot is
/// a guard bit: exponents are limited to 511 and a product that overflows a
/// slot is detected instead of carrying into its neighbour.
class Monomial {
 public:
  static constexpr unsigned kBits = 10;
  static constexpr unsigned kMaxExponent = (1u << (kBits - 1)) - 1;

  constexpr Monomial() = default;
  static Monomial of(Var v, unsigned e = 1);
  static Monomial from_exponents(const std::array<unsigned, kNumVars>& e);

  unsigned exponent(Var v) const {
    return static_cast<unsigned>((key_ >> shift(v)) & ((1u << kBits) - 1));
  }
  std::array<unsigned, kNumVars> exponents() const;
  unsigned total_degree() const;
  bool is_one() const { return key_ == 0; }

  /// Same monomial with the exponent of `v` replaced.
  Monomial with_exponent(Var v, unsigned e) const;

  std::uint64_t key() const { return key_; }

  friend Monomial operator*(Monomial a, Monomial b);
  friend bool operator==(Monomial a, Monomial b) { return a.key_ == b.key_; }
  friend auto operator<=>(Monomial a, Monomial b) { return a.key_ <=> b.key_; }

 private:
  static constexpr unsigned shift(Var v) {
    return kBits * static_cast<unsigned>(kNumVars - 1 - static_cast<unsigned>(v));
  }
  explicit constexpr Monomial(std::uint64_t key) : key_(key) {}
  std::uint64_t key_ = 0;
};

/// Sparse multivariate polynomial over BigRational in the fixed variables.
///
/// Terms are kept sorted by decreasing monomial (lexicographic in
/// x, y, lambda, La, Lb, Lc) with no zero coefficients, so structural
/// equality is polynomial equality.
class MPoly {
 public:
  using Term = std::pair<Monomial, BigRational>;

  MPoly() = default;
  MPoly(const BigRational& c);  // NOLINT: constants convert implicitly
  MPoly(long c) : MPoly(BigRational(c)) {}  // NOLINT
  static MPoly var(Var v, unsigned e = 1);
  static MPoly monomial(Monomial m, const BigRational& c);
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static MPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (coefficient of the unit monomial).
  BigRational constant_term() const;
  BigRational coefficient(Monomial m) const;

  /// Maximum exponent of `v` (0 for the zero polynomial).
  unsigned degree(Var v) const;
  bool depends_on(Var v) const { return degree(v) > 0; }

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const BigRational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const BigRational& c) { return a *= c; }
  friend MPoly operator*(const BigRational& c, MPoly a) { return a *= c; }
  friend MPoly operator*(MPoly a, long c) { return a *= BigRational(c); }
  friend MPoly operator*(long c, MPoly a) { return a *= BigRational(c); }
  friend bool operator==(const MPoly& a, const MPoly& b) = default;

  MPoly pow(unsigned e) const;

  /// Formal partial derivative.
  MPoly derivative(Var v) const;

  /// Replaces `v` by `value` (which may itself involve `v`).
  MPoly substitute(Var v, const MPoly& value) const;

  /// Coefficients of the powers of `v`: result[i] is the coefficient of v^i.
  std::vector<MPoly> coefficients_in(Var v) const;

  /// Terms whose `v`-degree is at least `min_degree`.
  MPoly terms_with_degree_at_least(Var v, unsigned min_degree) const;

  /// Exact quotient by (v - root), `root` free of `v`; nullopt when the
  /// division leaves a remainder.
  std::optional<MPoly> divide_by_linear(Var v, const MPoly& root) const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

/// Human-readable rendering, e.g. "2*x^2*Lc - 3/2".
std::string to_string(const MPoly& p);

}  // namespace pel
