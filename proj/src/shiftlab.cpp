#include "aluthge/shiftlab.hpp"

#include <cmath>

#include "aluthge/binomial.hpp"

namespace aluthge {

namespace {

void check_positive(const std::vector<double>& w) {
  for (double v : w)
    if (!(v > 0.0)) throw InvalidWeight("shift weights must be positive");
}

} // namespace

WeightSequence step_weights(const WeightSequence& w, const OperatorMean& mean) {
  if (w.weights.size() < 2) throw TooShort("step_weights: need at least 2 weights");
  check_positive(w.weights);
  WeightSequence next;
  next.weights.resize(w.weights.size() - 1);
  for (size_t k = 0; k + 1 < w.weights.size(); ++k)
    next.weights[k] = mean.perspective(w.weights[k + 1], w.weights[k]);
  next.level = w.level + 1;
  next.mean_name = mean.descriptor();
  return next;
}

double first_weight_closed_form(const std::vector<double>& alpha, int n, double lambda,
                                FirstWeightKind kind) {
  if (n < 0) throw Error("first_weight_closed_form: n must be >= 0");
  if (alpha.size() < static_cast<size_t>(n) + 1)
    throw TooShort("first_weight_closed_form: need alpha.size() >= n+1");
  if (!(lambda > 0.0 && lambda < 1.0))
    throw InvalidWeight("first_weight_closed_form: lambda must lie in (0,1)");
  check_positive(alpha);

  std::vector<double> row = binomial_row(n, lambda);
  double acc = 0.0;
  if (kind == FirstWeightKind::Arithmetic) {
    for (int j = 0; j <= n; ++j) acc += row[static_cast<size_t>(j)] * alpha[static_cast<size_t>(j)];
    return acc;
  }
  for (int j = 0; j <= n; ++j) acc += row[static_cast<size_t>(j)] / alpha[static_cast<size_t>(j)];
  return 1.0 / acc;
}

namespace {

// First-weight residuals against a constant tail: for a sequence that equals
// `prefix` on [0, len) and `tail` beyond, the binomial average differs from
// `tail` only through the prefix terms. Evaluated in the log domain so it
// stays finite for very large n.
struct TailResiduals {
  double arithmetic; // |alpha_0^(n) - tail|
  double harmonic;   // |beta_0^(n) - tail|
};

TailResiduals residuals_with_tail(const std::vector<double>& prefix, double tail, long n,
                                  double lambda) {
  double acc_arith = 0.0;
  double acc_harm = 0.0;
  const long jmax = std::min<long>(static_cast<long>(prefix.size()) - 1, n);
  for (long j = 0; j <= jmax; ++j) {
    const double w = std::exp(log_binomial(static_cast<int>(n), static_cast<int>(j)) +
                              (n - j) * std::log(lambda) + j * std::log1p(-lambda));
    acc_arith += w * (prefix[static_cast<size_t>(j)] - tail);
    acc_harm += w * (1.0 / prefix[static_cast<size_t>(j)] - 1.0 / tail);
  }
  const double beta = 1.0 / (1.0 / tail + acc_harm);
  return TailResiduals{std::abs(acc_arith), std::abs(beta - tail)};
}

} // namespace

OscillatingWeights build_oscillating_weights(double a, double b, int levels, double lambda,
                                             long step_cap) {
  if (!(a > 0.0) || !(b > 0.0)) throw InvalidWeight("block values must be positive");
  if (a == b) throw InvalidWeight("block values must be distinct");
  if (levels < 2) throw Error("build_oscillating_weights: need at least 2 levels");
  if (!(lambda > 0.0 && lambda < 1.0))
    throw InvalidWeight("build_oscillating_weights: lambda must lie in (0,1)");

  OscillatingWeights out;
  out.a = a;
  out.b = b;
  out.lambda = lambda;

  std::vector<double> prefix{a};
  long previous = 0;
  for (int k = 1; k <= levels; ++k) {
    const double target = (k % 2 == 1) ? b : a;
    const double goal = std::ldexp(1.0, -k); // 2^-k
    long n = previous + 1;
    for (;; ++n) {
      if (n > step_cap)
        throw SearchBudgetExceeded("build_oscillating_weights: no switch point within cap");
      TailResiduals r = residuals_with_tail(prefix, target, n, lambda);
      if (r.arithmetic < goal && r.harmonic < goal) break;
    }
    // Freeze positions up to and including n with the block letter, so the
    // verified bound at this switch point survives later blocks.
    prefix.resize(static_cast<size_t>(n) + 1, target);
    out.switch_points.push_back(n);
    previous = n;
  }
  out.weights = std::move(prefix);
  return out;
}

SandwichTrace sandwich_trace(const std::vector<double>& alpha, const OperatorMean& mean, int n) {
  if (n < 0) throw Error("sandwich_trace: n must be >= 0");
  if (alpha.size() < static_cast<size_t>(n) + 1)
    throw TooShort("sandwich_trace: need alpha.size() >= n+1");
  const double lambda = mean.weight();
  if (!(lambda > 0.0 && lambda < 1.0))
    throw InvalidWeight("sandwich_trace: mean weight must lie in (0,1)");
  check_positive(alpha);

  SandwichTrace trace;
  trace.gamma0.reserve(static_cast<size_t>(n) + 1);
  trace.lower.reserve(static_cast<size_t>(n) + 1);
  trace.upper.reserve(static_cast<size_t>(n) + 1);

  WeightSequence current{alpha, 0, mean.descriptor()};
  for (int k = 0; k <= n; ++k) {
    trace.gamma0.push_back(current.weights.front());
    trace.lower.push_back(first_weight_closed_form(alpha, k, lambda, FirstWeightKind::Harmonic));
    trace.upper.push_back(first_weight_closed_form(alpha, k, lambda, FirstWeightKind::Arithmetic));
    if (k < n) current = step_weights(current, mean);
  }
  return trace;
}

} // namespace aluthge
