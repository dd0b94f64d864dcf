#include "pel/combinatorics.hpp"

#include <numeric>
#include <stdexcept>

namespace pel {

BigRational factorial(unsigned n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return BigRational(f);
}

BigRational binomial(unsigned n, int k) {
  if (k < 0 || static_cast<unsigned>(k) > n) return 0;
  BigInt c;
  mpz_bin_uiui(c.get_mpz_t(), n, static_cast<unsigned long>(k));
  return BigRational(c);
}

BigRational multinomial(unsigned m, std::span<const unsigned> parts) {
  const unsigned long sum = std::accumulate(parts.begin(), parts.end(), 0ul);
  if (sum != m) {
    throw std::invalid_argument("multinomial: parts do not sum to m");
  }
  BigRational r = factorial(m);
  for (unsigned p : parts) r /= factorial(p);
  return r;
}

BigRational stirling2(unsigned n, unsigned k) {
  if (k > n) return 0;
  // Row recurrence {i, j} = {i-1, j-1} + j {i-1, j}.
  std::vector<BigInt> row(k + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    const unsigned top = std::min(i, k);
    for (unsigned j = top; j >= 1; --j) {
      row[j] = row[j - 1] + BigInt(j) * row[j];
    }
    row[0] = 0;
  }
  return BigRational(row[k]);
}

BigRational bernoulli_number(unsigned n) {
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
  std::vector<BigRational> b(n + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    BigRational s = 0;
    for (unsigned j = 0; j < m; ++j) s += binomial(m + 1, static_cast<int>(j)) * b[j];
    b[m] = -s / BigRational(m + 1);
  }
  return b[n];
}

namespace {

void compose(unsigned remaining, unsigned slot, std::vector<unsigned>& cur,
             std::vector<std::vector<unsigned>>& out) {
  if (slot + 1 == cur.size()) {
    cur[slot] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned v = 0; v <= remaining; ++v) {
    cur[slot] = v;
    compose(remaining - v, slot + 1, cur, out);
  }
}

}  // namespace

std::vector<std::vector<unsigned>> weak_compositions(unsigned total, unsigned parts) {
  std::vector<std::vector<unsigned>> out;
  if (parts == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> cur(parts, 0);
  compose(total, 0, cur, out);
  return out;
}

}  // namespace pel
