#include "aluthge/binomial.hpp"

#include <cmath>
#include <stdexcept>

namespace aluthge {

std::uint64_t binomial_exact(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n > 66) throw std::overflow_error("binomial_exact: n > 66 overflows 64 bits");
  if (k > n - k) k = n - k;
  // c * (n-k+j) / j is exact at every step; 128-bit intermediate avoids
  // overflow before the division.
  unsigned __int128 c = 1;
  for (int j = 1; j <= k; ++j) {
    c = c * static_cast<unsigned>(n - k + j);
    c /= static_cast<unsigned>(j);
  }
  return static_cast<std::uint64_t>(c);
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) return -INFINITY;
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double binomial_weight(int n, int k, double lambda) {
  if (k < 0 || k > n) return 0.0;
  if (lambda < 0.0 || lambda > 1.0)
    throw std::invalid_argument("binomial_weight: lambda must lie in [0,1]");
  if (lambda == 0.0) return k == n ? 1.0 : 0.0;
  if (lambda == 1.0) return k == 0 ? 1.0 : 0.0;
  if (n <= 60) {
    long double c = static_cast<long double>(binomial_exact(n, k));
    return static_cast<double>(c * std::pow(static_cast<long double>(lambda), n - k) *
                               std::pow(static_cast<long double>(1.0 - lambda), k));
  }
  return std::exp(log_binomial(n, k) + (n - k) * std::log(lambda) + k * std::log1p(-lambda));
}

std::vector<double> binomial_row(int n, double lambda) {
  if (n < 0) throw std::invalid_argument("binomial_row: n must be >= 0");
  if (lambda <= 0.0 || lambda >= 1.0)
    throw std::invalid_argument("binomial_row: lambda must lie in (0,1)");
  std::vector<double> row(static_cast<size_t>(n) + 1);
  long double w = std::pow(static_cast<long double>(lambda), n);
  const long double ratio = static_cast<long double>(1.0 - lambda) / lambda;
  for (int j = 0; j <= n; ++j) {
    row[static_cast<size_t>(j)] = static_cast<double>(w);
    if (j < n) w = w * ratio * static_cast<long double>(n - j) / static_cast<long double>(j + 1);
  }
  return row;
}

} // namespace aluthge
