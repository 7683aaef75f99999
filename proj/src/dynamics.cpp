#include "aluthge/dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "aluthge/binomial.hpp"
#include "aluthge/transform.hpp"

namespace aluthge {

IterationTrace iterate(const Matrix& t, const OperatorMean& mean, int max_steps, double tol) {
  if (t.rows() != t.cols()) throw Error("iterate: matrix must be square");
  if (max_steps < 1) throw Error("iterate: max_steps must be >= 1");
  if (!(tol >= 0.0)) throw Error("iterate: tol must be >= 0");

  const double scale = norm_floor(t.norm());
  IterationTrace trace;
  Matrix current = t;
  for (int k = 1; k <= max_steps; ++k) {
    Matrix next = aluthge_transform(current, mean).delta;
    const double step_delta = (next - current).norm();
    current = std::move(next);
    trace.step_deltas.push_back(step_delta);
    trace.defects.push_back(normality_defect(current));
    trace.traces.push_back(current.trace());
    trace.steps = k;
    if (step_delta <= tol * scale) {
      trace.converged = true;
      break;
    }
  }

  // Median ratio of consecutive step deltas over the tail.
  const size_t n = trace.step_deltas.size();
  if (n >= 3) {
    std::vector<double> ratios;
    const size_t start = n > 12 ? n - 12 : 1;
    for (size_t k = start; k < n; ++k)
      if (trace.step_deltas[k - 1] > 0.0)
        ratios.push_back(trace.step_deltas[k] / trace.step_deltas[k - 1]);
    if (!ratios.empty()) {
      std::nth_element(ratios.begin(), ratios.begin() + ratios.size() / 2, ratios.end());
      trace.rate_estimate = ratios[ratios.size() / 2];
    } else {
      trace.rate_estimate = 0.0;
    }
  } else {
    trace.rate_estimate = std::numeric_limits<double>::quiet_NaN();
  }

  trace.last = current;
  if (trace.converged) trace.limit = trace.last;
  return trace;
}

Matrix arithmetic_iterate_closed_form(const Matrix& t, int n) {
  if (t.rows() != t.cols()) throw Error("arithmetic_iterate_closed_form: matrix must be square");
  if (n < 0) throw Error("arithmetic_iterate_closed_form: n must be >= 0");

  PolarParts polar = polar_decompose(t);
  const Matrix& u = polar.isometry;

  // ker(T*) <= ker(T): left null vectors must also be right null vectors.
  {
    Eigen::JacobiSVD<Matrix> svd(t, Eigen::ComputeFullU);
    const RealVector& sigma = svd.singularValues();
    const double cut = sigma.size() > 0 ? 1e-10 * norm_floor(sigma(0)) : 0.0;
    const double scale = norm_floor(sigma.size() > 0 ? sigma(0) : 0.0);
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
      if (sigma(i) > cut) continue;
      if ((t * svd.matrixU().col(i)).norm() > 1e-8 * scale)
        throw KernelConditionViolated(
            "arithmetic_iterate_closed_form: requires ker(T*) within ker(T)");
    }
  }

  // sum_k 2^{-n} C(n,k) (U*)^k |T| U^k
  Matrix conjugated = polar.positive;
  Matrix sum = Matrix::Zero(t.rows(), t.cols());
  for (int k = 0; k <= n; ++k) {
    sum += binomial_weight(n, k, 0.5) * conjugated;
    if (k < n) conjugated = (u.adjoint() * conjugated * u).eval();
  }
  return u * sum;
}

namespace {

// Clusters phases (canonicalized to [0, 2pi)) whose circular distance is
// within tol, via union-find; returns a cluster id per phase.
std::vector<int> cluster_phases(const std::vector<double>& phases, double tol) {
  const size_t n = phases.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      double d = std::abs(phases[i] - phases[j]);
      d = std::min(d, 2.0 * M_PI - d);
      if (d <= tol) parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
    }
  }
  std::vector<int> cluster(n);
  for (size_t i = 0; i < n; ++i) cluster[i] = find(static_cast<int>(i));
  return cluster;
}

} // namespace

Matrix predict_arithmetic_limit(const Matrix& t, double phase_tol) {
  if (t.rows() != t.cols()) throw Error("predict_arithmetic_limit: matrix must be square");
  const Eigen::Index m = t.rows();

  PolarParts polar = polar_decompose(t);
  if (polar.rank < m)
    throw SingularInput("predict_arithmetic_limit: input must be invertible");

  // U is unitary here; its Schur form is diagonal, giving an orthonormal
  // eigenbasis even with clustered phases.
  Eigen::ComplexSchur<Matrix> schur(polar.isometry, /*computeU=*/true);
  if (schur.info() != Eigen::Success)
    throw ConvergenceFailure("predict_arithmetic_limit: Schur decomposition failed");
  const Matrix& q = schur.matrixU();

  std::vector<double> phases(static_cast<size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) {
    double theta = std::arg(schur.matrixT()(i, i));
    if (theta < 0.0) theta += 2.0 * M_PI;
    phases[static_cast<size_t>(i)] = theta;
  }
  std::vector<int> cluster = cluster_phases(phases, phase_tol);

  Matrix p = q.adjoint() * polar.positive * q;
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      if (cluster[static_cast<size_t>(i)] != cluster[static_cast<size_t>(j)])
        p(i, j) = Complex(0.0, 0.0);

  return polar.isometry * (q * p * q.adjoint());
}

} // namespace aluthge
