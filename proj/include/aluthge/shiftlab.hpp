#pragma once

#include <string>
#include <vector>

#include "aluthge/means.hpp"

namespace aluthge {

/// Finite prefix of a weighted unilateral shift's weight sequence. The
/// transform of a weighted shift is again a weighted shift, acting on
/// weights as w'[k] = P_f(w[k+1], w[k]); each step therefore shrinks the
/// usable prefix by one.
struct WeightSequence {
  std::vector<double> weights; // all > 0
  int level = 0;               // iterations applied so far
  std::string mean_name;
};

/// One transform step on the weight sequence; requires length >= 2.
WeightSequence step_weights(const WeightSequence& w, const OperatorMean& mean);

enum class FirstWeightKind { Arithmetic, Harmonic };

/// First weight after n steps of the lambda-weighted arithmetic (resp.
/// harmonic) recursion, in closed form:
///   arithmetic: sum_j C(n,j) lambda^(n-j) (1-lambda)^j alpha_j
///   harmonic:   the same binomial average of 1/alpha_j, inverted.
/// Requires alpha.size() >= n+1 and lambda in (0,1).
double first_weight_closed_form(const std::vector<double>& alpha, int n, double lambda,
                                FirstWeightKind kind);

struct OscillatingWeights {
  std::vector<double> weights;    // finite prefix, long enough for levels iterations
  std::vector<long> switch_points; // n_1 < n_2 < ... < n_K
  double a = 0.0;
  double b = 0.0;
  double lambda = 0.5;
};

/// Builds the interleaved-block weight sequence whose first-weight
/// iteration oscillates: at switch point n_k the first weight of both the
/// arithmetic and harmonic recursions is within 2^-k of the current block's
/// target (targets alternate b, a, b, ...). The search for each n_k extends
/// the frozen prefix with the current block letter and walks n upward.
OscillatingWeights build_oscillating_weights(double a, double b, int levels, double lambda,
                                             long step_cap = 1000000);

struct SandwichTrace {
  std::vector<double> gamma0; // first weight of the mean's recursion, levels 0..n
  std::vector<double> lower;  // harmonic closed form, same weight
  std::vector<double> upper;  // arithmetic closed form, same weight
};

/// First-weight trace of the mean's recursion together with its harmonic /
/// arithmetic envelopes at the same weight. Requires weight in (0,1) and
/// alpha long enough for n steps.
SandwichTrace sandwich_trace(const std::vector<double>& alpha, const OperatorMean& mean, int n);

} // namespace aluthge
