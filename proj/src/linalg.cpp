#include "aluthge/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace aluthge {

double frobenius_norm(const Matrix& a) { return a.norm(); }

double spectral_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

Complex trace(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error("trace: matrix must be square");
  return a.trace();
}

double normality_defect(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error("normality_defect: matrix must be square");
  return (a.adjoint() * a - a * a.adjoint()).norm();
}

bool is_hermitian(const Matrix& a, double rtol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).norm() <= rtol * norm_floor(a.norm());
}

SpectralData hermitian_eig(const Matrix& a, double rtol) {
  if (a.rows() != a.cols()) throw NotHermitian("hermitian_eig: matrix must be square");
  if (!a.allFinite()) throw Error("hermitian_eig: entries must be finite");
  if (!is_hermitian(a, rtol))
    throw NotHermitian("hermitian_eig: input is not Hermitian within tolerance");

  // Symmetrize so the solver sees an exactly Hermitian matrix.
  Matrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success)
    throw ConvergenceFailure("hermitian_eig: eigensolver did not converge");
  return SpectralData{solver.eigenvectors(), solver.eigenvalues()};
}

PolarParts polar_decompose(const Matrix& t) {
  if (t.rows() != t.cols()) throw Error("polar_decompose: matrix must be square");
  if (!t.allFinite()) throw Error("polar_decompose: entries must be finite");
  const Eigen::Index m = t.rows();

  Eigen::JacobiSVD<Matrix> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success)
    throw ConvergenceFailure("polar_decompose: SVD did not converge");

  RealVector sigma = svd.singularValues();
  const Matrix& p = svd.matrixU();
  const Matrix& q = svd.matrixV();

  // Singular values below the rank cut are treated as exact zeros.
  const double cut = sigma.size() > 0 ? 1e-12 * sigma(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > cut && sigma(i) > 0.0)
      ++rank;
    else
      sigma(i) = 0.0;
  }

  Matrix positive = q * sigma.asDiagonal() * q.adjoint();
  positive = 0.5 * (positive + positive.adjoint());

  // U = P * 1_{sigma > cut} * Q^*: columns of P beyond the rank are dropped,
  // making U a partial isometry with initial space range(|T|).
  Matrix u = Matrix::Zero(m, m);
  if (rank > 0)
    u = p.leftCols(rank) * q.leftCols(rank).adjoint();

  return PolarParts{std::move(u), std::move(positive), rank};
}

Eigen::VectorXcd eigenvalues(const Matrix& a) {
  Eigen::ComplexEigenSolver<Matrix> solver(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw ConvergenceFailure("eigenvalues: solver did not converge");
  return solver.eigenvalues();
}

} // namespace aluthge
