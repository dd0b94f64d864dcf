#include "pel/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pel {

namespace {

constexpr std::uint64_t guard_mask() {
  std::uint64_t m = 0;
  for (unsigned i = 0; i < kNumVars; ++i) {
    m |= std::uint64_t{1} << (Monomial::kBits * i + Monomial::kBits - 1);
  }
  return m;
}

bool greater_key(const MPoly::Term& a, const MPoly::Term& b) { return a.first > b.first; }

}  // namespace

const char* var_name(Var v) {
  switch (v) {
    case Var::x: return "x";
    case Var::y: return "y";
    case Var::lambda: return "lambda";
    case Var::La: return "La";
    case Var::Lb: return "Lb";
    case Var::Lc: return "Lc";
  }
  return "?";
}

Monomial Monomial::of(Var v, unsigned e) {
  if (e > kMaxExponent) throw std::overflow_error("Monomial: exponent too large");
  return Monomial(std::uint64_t{e} << shift(v));
}

Monomial Monomial::from_exponents(const std::array<unsigned, kNumVars>& e) {
  Monomial m;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    m = m * of(kAllVars[i], e[i]);
  }
  return m;
}

std::array<unsigned, kNumVars> Monomial::exponents() const {
  std::array<unsigned, kNumVars> e{};
  for (std::size_t i = 0; i < kNumVars; ++i) e[i] = exponent(kAllVars[i]);
  return e;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (Var v : kAllVars) d += exponent(v);
  return d;
}

Monomial Monomial::with_exponent(Var v, unsigned e) const {
  if (e > kMaxExponent) throw std::overflow_error("Monomial: exponent too large");
  const std::uint64_t slot = std::uint64_t{(1u << kBits) - 1} << shift(v);
  return Monomial((key_ & ~slot) | (std::uint64_t{e} << shift(v)));
}

Monomial operator*(Monomial a, Monomial b) {
  const std::uint64_t sum = a.key_ + b.key_;
  if (sum & guard_mask()) throw std::overflow_error("Monomial: exponent overflow");
  return Monomial(sum);
}

// ---------------------------------------------------------------------------

MPoly::MPoly(const BigRational& c) {
  if (c != 0) terms_.emplace_back(Monomial{}, c);
}

MPoly MPoly::var(Var v, unsigned e) { return monomial(Monomial::of(v, e), 1); }

MPoly MPoly::monomial(Monomial m, const BigRational& c) {
  MPoly p;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  MPoly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void MPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), greater_key);
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
    } else {
      if (!merged.empty() && merged.back().second == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().second == 0) merged.pop_back();
  terms_ = std::move(merged);
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

BigRational MPoly::constant_term() const { return coefficient(Monomial{}); }

BigRational MPoly::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Monomial k) { return t.first > k; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

unsigned MPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first > b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first > a->first) {
      out.push_back(*b++);
    } else {
      BigRational c = a->second + b->second;
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1 && b.terms_[0].first.is_one()) return a * b.terms_[0].second;
  if (a.terms_.size() == 1 && a.terms_[0].first.is_one()) return b * a.terms_[0].second;
  std::vector<MPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod.emplace_back(ma * mb, ca * cb);
    }
  }
  return MPoly::from_terms(std::move(prod));
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(1);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

MPoly MPoly::derivative(Var v) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.exponent(v);
    if (e == 0) continue;
    out.emplace_back(m.with_exponent(v, e - 1), c * e);
  }
  return from_terms(std::move(out));
}

MPoly MPoly::substitute(Var v, const MPoly& value) const {
  const auto coeffs = coefficients_in(v);
  // Horner in `value`.
  MPoly result;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    result = result * value + coeffs[i];
  }
  return result;
}

std::vector<MPoly> MPoly::coefficients_in(Var v) const {
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& [m, c] : terms_) {
    buckets[m.exponent(v)].emplace_back(m.with_exponent(v, 0), c);
  }
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  if (is_zero()) out.assign(1, MPoly{});
  return out;
}

MPoly MPoly::terms_with_degree_at_least(Var v, unsigned min_degree) const {
  MPoly r;
  for (const auto& t : terms_) {
    if (t.first.exponent(v) >= min_degree) r.terms_.push_back(t);
  }
  return r;
}

std::optional<MPoly> MPoly::divide_by_linear(Var v, const MPoly& root) const {
  if (root.depends_on(v)) {
    throw std::invalid_argument("divide_by_linear: root depends on the variable");
  }
  if (is_zero()) return MPoly{};
  const auto a = coefficients_in(v);
  const std::size_t d = a.size() - 1;
  if (d == 0) return std::nullopt;  // nonzero and free of v
  // Synthetic division: b[d-1] = a[d], b[i-1] = a[i] + root * b[i].
  std::vector<MPoly> b(d);
  b[d - 1] = a[d];
  for (std::size_t i = d - 1; i >= 1; --i) {
    b[i - 1] = a[i] + root * b[i];
  }
  if (!(a[0] + root * b[0]).is_zero()) return std::nullopt;
  MPoly q;
  for (std::size_t i = 0; i < d; ++i) {
    q += b[i] * var(v, static_cast<unsigned>(i));
  }
  return q;
}

std::string to_string(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    BigRational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || m.is_one()) {
      os << to_string(mag);
      wrote = true;
    }
    for (Var v : kAllVars) {
      const unsigned e = m.exponent(v);
      if (e == 0) continue;
      if (wrote) os << "*";
      os << var_name(v);
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace pel
