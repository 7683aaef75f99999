#pragma once

#include <string>
#include <vector>

#include "aluthge/linalg.hpp"
#include "aluthge/means.hpp"

namespace aluthge {

/// Numerical range boundary sampled at uniformly spaced angles: for each
/// theta the top eigenvector x of Re(e^{-i theta} T) yields the boundary
/// point <Tx, x>, and the top eigenvalue is the support-function value.
struct RangeBoundary {
  std::vector<Complex> points;
  std::vector<double> angles;         // in [0, 2pi)
  std::vector<double> support_values; // lambda_max(Re(e^{-i theta} T))
};

RangeBoundary numerical_range(const Matrix& t, int n_angles = 720);

struct InclusionResult {
  bool included = false;
  double max_violation = 0.0; // max_k (inner support - outer support)
};

/// Support-function comparison on a shared angle grid; throws GridMismatch
/// when the grids differ.
InclusionResult range_included(const RangeBoundary& inner, const RangeBoundary& outer, double tol);

struct RangeReport {
  std::vector<std::string> labels;       // mean descriptors
  std::vector<RangeBoundary> boundaries; // one per mean
  RangeBoundary base;                    // W(T) itself
  // pairwise[i][j]: boundaries[i] included in boundaries[j]?
  std::vector<std::vector<InclusionResult>> pairwise;
  std::vector<InclusionResult> in_base; // boundaries[i] included in W(T)?
};

/// Transforms T once per mean, computes all boundaries plus W(T), and fills
/// the full inclusion matrix at tolerance tol (default 1e-7 * ||T||).
RangeReport range_of_transform_report(const Matrix& t, const std::vector<OperatorMean>& means,
                                      int n_angles = 720, double tol = -1.0);

} // namespace aluthge
