#include "aluthge/numrange.hpp"

#include <Eigen/Eigenvalues>
#include <atomic>
#include <cmath>
#include <limits>

#include "aluthge/parallel.hpp"
#include "aluthge/transform.hpp"

namespace aluthge {

RangeBoundary numerical_range(const Matrix& t, int n_angles) {
  if (t.rows() != t.cols()) throw Error("numerical_range: matrix must be square");
  if (n_angles < 16) throw Error("numerical_range: need at least 16 angles");

  const Eigen::Index m = t.rows();
  RangeBoundary boundary;
  boundary.points.assign(static_cast<size_t>(n_angles), Complex(0, 0));
  boundary.angles.assign(static_cast<size_t>(n_angles), 0.0);
  boundary.support_values.assign(static_cast<size_t>(n_angles), 0.0);

  std::atomic<bool> failed{false};
  // each angle's eigenproblem is independent
  parallel_for(n_angles, [&](std::int64_t k) {
    const double theta = 2.0 * M_PI * static_cast<double>(k) / n_angles;
    const Complex rot = std::polar(1.0, -theta);
    Matrix real_part = 0.5 * (rot * t + std::conj(rot) * t.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(real_part);
    if (solver.info() != Eigen::Success) {
      failed = true;
      return;
    }
    const Eigen::VectorXcd x = solver.eigenvectors().col(m - 1);
    boundary.points[static_cast<size_t>(k)] = (x.adjoint() * t * x)(0, 0);
    boundary.angles[static_cast<size_t>(k)] = theta;
    boundary.support_values[static_cast<size_t>(k)] = solver.eigenvalues()(m - 1);
  });
  if (failed) throw ConvergenceFailure("numerical_range: eigensolver failed");
  return boundary;
}

InclusionResult range_included(const RangeBoundary& inner, const RangeBoundary& outer,
                               double tol) {
  if (inner.angles.size() != outer.angles.size() || inner.angles.empty())
    throw GridMismatch("range_included: angle grids differ");
  for (size_t k = 0; k < inner.angles.size(); ++k)
    if (inner.angles[k] != outer.angles[k])
      throw GridMismatch("range_included: angle grids differ");

  InclusionResult result;
  result.max_violation = -std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < inner.support_values.size(); ++k)
    result.max_violation =
        std::max(result.max_violation, inner.support_values[k] - outer.support_values[k]);
  result.included = result.max_violation <= tol;
  return result;
}

RangeReport range_of_transform_report(const Matrix& t, const std::vector<OperatorMean>& means,
                                      int n_angles, double tol) {
  if (means.empty()) throw Error("range_of_transform_report: need at least one mean");
  if (tol < 0.0) tol = 1e-7 * norm_floor(spectral_norm(t));

  RangeReport report;
  report.base = numerical_range(t, n_angles);
  for (const OperatorMean& mean : means) {
    report.labels.push_back(mean.descriptor());
    report.boundaries.push_back(numerical_range(aluthge_transform(t, mean).delta, n_angles));
  }

  const size_t n = report.boundaries.size();
  report.pairwise.assign(n, std::vector<InclusionResult>(n));
  report.in_base.resize(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j)
      report.pairwise[i][j] = range_included(report.boundaries[i], report.boundaries[j], tol);
    report.in_base[i] = range_included(report.boundaries[i], report.base, tol);
  }
  return report;
}

} // namespace aluthge
