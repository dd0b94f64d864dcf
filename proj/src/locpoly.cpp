#include "pel/locpoly.hpp"

#include <stdexcept>

namespace pel {

MPoly sum_ab() { return MPoly::var(Var::La) + MPoly::var(Var::Lb); }

MPoly one_minus_lambda() { return MPoly(1) - MPoly::var(Var::lambda); }

namespace {

// num / (La + Lb), dividing by (La - (-Lb)).
std::optional<MPoly> div_sum_ab(const MPoly& num) {
  return num.divide_by_linear(Var::La, -MPoly::var(Var::Lb));
}

// num / (1 - lambda) = -(num / (lambda - 1)).
std::optional<MPoly> div_one_minus_lambda(const MPoly& num) {
  auto q = num.divide_by_linear(Var::lambda, MPoly(1));
  if (q) *q = -*q;
  return q;
}

}  // namespace

LocPoly::LocPoly(MPoly num) : num_(std::move(num)) {}

LocPoly::LocPoly(const BigRational& c) : num_(c) {}

LocPoly LocPoly::make(MPoly num, unsigned dA, unsigned dL) {
  LocPoly p(std::move(num));
  p.dA_ = dA;
  p.dL_ = dL;
  p.normalize();
  return p;
}

void LocPoly::normalize() {
  if (num_.is_zero()) {
    dA_ = dL_ = 0;
    return;
  }
  while (dA_ > 0) {
    auto q = div_sum_ab(num_);
    if (!q) break;
    num_ = std::move(*q);
    --dA_;
  }
  while (dL_ > 0) {
    auto q = div_one_minus_lambda(num_);
    if (!q) break;
    num_ = std::move(*q);
    --dL_;
  }
}

LocPoly LocPoly::operator-() const {
  LocPoly r = *this;
  r.num_ = -r.num_;
  return r;
}

LocPoly& LocPoly::operator+=(const LocPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const unsigned a = std::max(dA_, o.dA_);
  const unsigned l = std::max(dL_, o.dL_);
  auto lift = [&](const LocPoly& p) {
    MPoly n = p.num_;
    if (a > p.dA_) n *= sum_ab().pow(a - p.dA_);
    if (l > p.dL_) n *= one_minus_lambda().pow(l - p.dL_);
    return n;
  };
  if (a == dA_ && l == dL_) {
    num_ += lift(o);
  } else {
    num_ = lift(*this) + lift(o);
  }
  dA_ = a;
  dL_ = l;
  normalize();
  return *this;
}

LocPoly& LocPoly::operator-=(const LocPoly& o) { return *this += -o; }

LocPoly& LocPoly::operator*=(const LocPoly& o) {
  num_ *= o.num_;
  dA_ += o.dA_;
  dL_ += o.dL_;
  normalize();
  return *this;
}

LocPoly& LocPoly::operator*=(const BigRational& c) {
  num_ *= c;
  if (num_.is_zero()) dA_ = dL_ = 0;
  return *this;
}

bool operator==(const LocPoly& a, const LocPoly& b) {
  if (a.dA_ == b.dA_ && a.dL_ == b.dL_) return a.num_ == b.num_;
  MPoly lhs = a.num_;
  MPoly rhs = b.num_;
  if (b.dA_ > a.dA_) lhs *= sum_ab().pow(b.dA_ - a.dA_);
  if (a.dA_ > b.dA_) rhs *= sum_ab().pow(a.dA_ - b.dA_);
  if (b.dL_ > a.dL_) lhs *= one_minus_lambda().pow(b.dL_ - a.dL_);
  if (a.dL_ > b.dL_) rhs *= one_minus_lambda().pow(a.dL_ - b.dL_);
  return lhs == rhs;
}

LocPoly LocPoly::pow(unsigned e) const {
  LocPoly r = make(num_.pow(e), dA_ * e, dL_ * e);
  return r;
}

LocPoly LocPoly::divided_by_sum_ab(unsigned k) const { return make(num_, dA_ + k, dL_); }

LocPoly LocPoly::divided_by_one_minus_lambda(unsigned k) const {
  return make(num_, dA_, dL_ + k);
}

std::optional<LocPoly> LocPoly::inverse() const {
  if (num_.is_zero()) return std::nullopt;
  MPoly rest = num_;
  unsigned a = 0;
  unsigned l = 0;
  while (auto q = div_sum_ab(rest)) {
    rest = std::move(*q);
    ++a;
  }
  while (auto q = div_one_minus_lambda(rest)) {
    rest = std::move(*q);
    ++l;
  }
  if (!rest.is_constant()) return std::nullopt;
  MPoly inv_num = sum_ab().pow(dA_) * one_minus_lambda().pow(dL_);
  inv_num *= BigRational(1) / rest.constant_term();
  return make(std::move(inv_num), a, l);
}

LocPoly LocPoly::derivative(Var v) const {
  if (v == Var::La || v == Var::Lb || v == Var::lambda) {
    if (!is_polynomial()) {
      throw std::domain_error("LocPoly::derivative: variable occurs in the denominator");
    }
  }
  return make(num_.derivative(v), dA_, dL_);
}

LocPoly LocPoly::substitute(Var v, const MPoly& value) const {
  MPoly num = num_.substitute(v, value);
  unsigned a = dA_;
  unsigned l = dL_;
  if (v == Var::lambda && l > 0) {
    const MPoly factor = one_minus_lambda().substitute(v, value);
    if (!factor.is_constant() || factor.is_zero()) {
      throw std::domain_error("LocPoly::substitute: (1-lambda) does not reduce to a unit");
    }
    num *= pel::pow(BigRational(1) / factor.constant_term(), l);
    l = 0;
  }
  if ((v == Var::La || v == Var::Lb) && a > 0) {
    const MPoly factor = sum_ab().substitute(v, value);
    if (factor == sum_ab()) {
      // unchanged denominator
    } else if (factor.is_constant() && !factor.is_zero()) {
      num *= pel::pow(BigRational(1) / factor.constant_term(), a);
      a = 0;
    } else {
      throw std::domain_error("LocPoly::substitute: (La+Lb) does not reduce to a unit");
    }
  }
  return make(std::move(num), a, l);
}

std::string to_string(const LocPoly& p) {
  if (p.is_polynomial()) return to_string(p.num());
  std::string den;
  if (p.dA() > 0) {
    den += "(La + Lb)";
    if (p.dA() > 1) den += "^" + std::to_string(p.dA());
  }
  if (p.dL() > 0) {
    if (!den.empty()) den += "*";
    den += "(1 - lambda)";
    if (p.dL() > 1) den += "^" + std::to_string(p.dL());
  }
  return "(" + to_string(p.num()) + ")/" + (p.dA() > 0 && p.dL() > 0 ? "(" + den + ")" : den);
}

}  // namespace pel
