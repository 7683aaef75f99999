#pragma once

#include <cstdint>
#include <vector>

namespace aluthge {

/// C(n, k) exactly in 64-bit; requires n <= 66.
std::uint64_t binomial_exact(int n, int k);

/// log C(n, k) via lgamma, valid for any n.
double log_binomial(int n, int k);

/// C(n, k) * lambda^(n-k) * (1-lambda)^k. Exact coefficients up to n = 60,
/// logarithm-domain accumulation beyond that (avoids overflow).
double binomial_weight(int n, int k, double lambda);

/// Full row {C(n,j) lambda^(n-j) (1-lambda)^j : j = 0..n}, computed with a
/// long-double multiplicative recursion; the row sums to 1 to near machine
/// precision for moderate n.
std::vector<double> binomial_row(int n, double lambda);

} // namespace aluthge
