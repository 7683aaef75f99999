#pragma once

#include <optional>
#include <vector>

#include "aluthge/linalg.hpp"
#include "aluthge/means.hpp"

namespace aluthge {

struct IterationTrace {
  // One entry per step taken (step k describes the k-th iterate).
  std::vector<double> step_deltas; // ||Delta^k - Delta^{k-1}||_F
  std::vector<double> defects;     // normality defect of Delta^k
  std::vector<Complex> traces;     // trace of Delta^k
  bool converged = false;
  int steps = 0;
  /// Geometric rate estimate from the tail of step_deltas (NaN when too
  /// short to estimate); slow phase gaps show up here as rates near 1.
  double rate_estimate = 0.0;
  Matrix last;                  // final iterate
  std::optional<Matrix> limit;  // set when converged
};

/// Applies the transform repeatedly, stopping when
/// ||Delta^{k+1} - Delta^k||_F <= tol * ||T||_F or after max_steps.
IterationTrace iterate(const Matrix& t, const OperatorMean& mean, int max_steps, double tol);

/// n-th arithmetic-mean iterate in closed form:
///   Delta^n(T) = U * 2^{-n} sum_k C(n,k) (U*)^k |T| U^k.
/// Valid when ker(T*) is contained in ker(T) (checked; always true for
/// invertible T). Exact binomial coefficients up to n = 60, log-domain
/// accumulation beyond.
Matrix arithmetic_iterate_closed_form(const Matrix& t, int n);

/// Limit of the arithmetic-mean iteration of an invertible matrix, computed
/// directly from the polar factors: diagonalize the unitary factor
/// U = Q D Q*, form P = Q*|T|Q, zero every entry of P whose row/column
/// phases differ, and return U * Q (E o P) Q*. Phases are clustered with the
/// given absolute tolerance (radians) after canonicalization to [0, 2pi).
Matrix predict_arithmetic_limit(const Matrix& t, double phase_tol = 1e-8);

} // namespace aluthge
