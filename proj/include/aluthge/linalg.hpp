#pragma once

#include <Eigen/Dense>
#include <complex>

#include "aluthge/errors.hpp"

namespace aluthge {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
struct SpectralData {
  Matrix eigenvectors; // unitary, columns are eigenvectors
  RealVector eigenvalues;
};

/// Canonical polar decomposition T = U|T| with U a partial isometry whose
/// initial space is range(|T|).
struct PolarParts {
  Matrix isometry; // U
  Matrix positive; // |T|, Hermitian positive semi-definite
  Eigen::Index rank = 0;
};

/// Relative tolerances use max(scale, kNormFloor) so zero-norm inputs
/// still get a sane absolute tolerance.
inline constexpr double kNormFloor = 1e-14;

inline double norm_floor(double scale) {
  return scale > kNormFloor ? scale : kNormFloor;
}

double frobenius_norm(const Matrix& a);
double spectral_norm(const Matrix& a);
Complex trace(const Matrix& a);

/// ||A*A - AA*||_F; zero exactly when A is normal.
double normality_defect(const Matrix& a);

bool is_hermitian(const Matrix& a, double rtol = 1e-10);

/// Throws NotHermitian when ||A - A*||_F > rtol*||A||_F, ConvergenceFailure
/// on solver breakdown. Eigenvalues come back sorted ascending.
SpectralData hermitian_eig(const Matrix& a, double rtol = 1e-10);

/// Canonical polar decomposition via SVD. Singular values below
/// 1e-12*sigma_max are treated as zero and their columns of U zeroed, so
/// U*U is the orthogonal projection onto range(|T|).
PolarParts polar_decompose(const Matrix& t);

/// Eigenvalues of a general square matrix (for spectrum comparisons).
Eigen::VectorXcd eigenvalues(const Matrix& a);

} // namespace aluthge
