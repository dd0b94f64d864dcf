#pragma once

#include "pel/rational.hpp"

#include <span>
#include <vector>

namespace pel {

BigRational factorial(unsigned n);

/// C(n, k); zero outside 0 <= k <= n.
BigRational binomial(unsigned n, int k);

/// m! / prod(parts_i!). Throws std::invalid_argument if the parts do not
/// sum to m.
BigRational multinomial(unsigned m, std::span<const unsigned> parts);

/// Stirling number of the second kind {n brace k}.
BigRational stirling2(unsigned n, unsigned k);

/// Bernoulli number with the x/(e^x - 1) convention (B_1 = -1/2).
BigRational bernoulli_number(unsigned n);

/// Every weak composition of `total` into `parts` nonnegative parts, in
/// lexicographic order.
std::vector<std::vector<unsigned>> weak_compositions(unsigned total, unsigned parts);

}  // namespace pel
