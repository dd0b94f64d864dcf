#include "pel/rational.hpp"

#include <stdexcept>

namespace pel {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw std::domain_error("make_rational: zero denominator");
  }
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) {
    return q.get_num().get_str();
  }
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return BigRational(parse_integer(text));
  }
  const BigInt num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  const BigInt den = parse_integer(den_text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return make_rational(num, den);
}

BigRational pow(const BigRational& base, unsigned e) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  // base is canonical, so powers of coprime parts stay coprime.
  return BigRational(num, den);
}

BigRational pow2(int e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? BigRational(BigInt(1), p) : BigRational(p);
}

}  // namespace pel
