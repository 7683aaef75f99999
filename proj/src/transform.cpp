#include "aluthge/transform.hpp"

#include <cmath>
#include <limits>

#include "aluthge/quadrature.hpp"

namespace aluthge {

namespace {

struct HadamardBasis {
  Matrix w;          // eigenvectors of |T|
  RealVector s;      // eigenvalues of |T|, ascending (>= 0 up to roundoff)
  Matrix isometry;   // U from the polar decomposition
  double min_gap = std::numeric_limits<double>::infinity();
};

// Eigenvalues below the rank cut are snapped to exactly 0 so the boundary
// perspective is used for them. Means whose perspective approaches the
// boundary only logarithmically (the logarithmic mean: P(s,t) ~ t/|ln s|)
// would otherwise pick up O(1/|ln eps|) noise from kernel eigenvalues that
// round to ~1e-17 instead of 0.
void snap_spectrum(RealVector& s) {
  const double cut = s.size() > 0 ? 1e-12 * s(s.size() - 1) : 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) < cut) s(i) = 0.0;
}

HadamardBasis factor(const Matrix& t) {
  PolarParts polar = polar_decompose(t);
  SpectralData eig = hermitian_eig(polar.positive);
  HadamardBasis basis;
  basis.w = std::move(eig.eigenvectors);
  basis.s = std::move(eig.eigenvalues);
  basis.isometry = std::move(polar.isometry);
  for (Eigen::Index i = 0; i + 1 < basis.s.size(); ++i)
    basis.min_gap = std::min(basis.min_gap, basis.s(i + 1) - basis.s(i));
  snap_spectrum(basis.s);
  return basis;
}

// W (M o (W* X W)) W* for the perspective multiplier M of the mean.
Matrix apply_hadamard(const HadamardBasis& basis, const OperatorMean& mean, const Matrix& x) {
  Eigen::MatrixXd multiplier = perspective_matrix(mean, basis.s);
  Matrix mixed = basis.w.adjoint() * x * basis.w;
  mixed.array() *= multiplier.cast<Complex>().array();
  return basis.w * mixed * basis.w.adjoint();
}

} // namespace

TransformResult aluthge_transform(const Matrix& t, const OperatorMean& mean) {
  if (t.rows() != t.cols()) throw Error("aluthge_transform: matrix must be square");
  HadamardBasis basis = factor(t);
  TransformResult result;
  result.delta = apply_hadamard(basis, mean, basis.isometry);
  result.mean_name = mean.descriptor();
  result.weight = mean.weight();
  result.basis_conditioning = basis.s.size() > 1 ? basis.min_gap : 0.0;
  return result;
}

Matrix aluthge_closed_form(const Matrix& t, ClosedFormKind kind, double lambda) {
  if (t.rows() != t.cols()) throw Error("aluthge_closed_form: matrix must be square");
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw InvalidWeight("aluthge_closed_form: lambda must lie in [0,1]");

  PolarParts polar = polar_decompose(t);
  const Matrix& u = polar.isometry;
  const Matrix& pos = polar.positive;

  if (kind == ClosedFormKind::Arithmetic)
    return (1.0 - lambda) * pos * u + lambda * u.adjoint() * u * u * pos;

  // Geometric: |T|^(1-lambda) U |T|^lambda via functional calculus.
  SpectralData eig = hermitian_eig(pos);
  RealVector s = eig.eigenvalues;
  snap_spectrum(s);
  RealVector left(s.size()), right(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    left(i) = std::pow(s(i), 1.0 - lambda);
    right(i) = std::pow(s(i), lambda);
  }
  const Matrix& w = eig.eigenvectors;
  return w * left.asDiagonal().toDenseMatrix().cast<Complex>() * w.adjoint() * u * w *
         right.asDiagonal().toDenseMatrix().cast<Complex>() * w.adjoint();
}

Matrix aluthge_quadrature_oracle(const Matrix& t, const OperatorMean& mean,
                                 const QuadratureOptions& opts) {
  if (t.rows() != t.cols()) throw Error("aluthge_quadrature_oracle: matrix must be square");
  if (!mean.has_measure())
    throw MeasureMissing("aluthge_quadrature_oracle: mean has no representing measure");

  HadamardBasis basis = factor(t);
  const Eigen::Index m = basis.s.size();
  const double s_max = m > 0 ? basis.s(m - 1) : 0.0;
  const double s_min = m > 0 ? basis.s(0) : 0.0;
  if (!(s_min >= 1e-8 * s_max) || s_max == 0.0)
    throw SingularInput("aluthge_quadrature_oracle: input is singular or near-singular");

  RepresentingMeasure mu = mean.measure(opts.outer_density_nodes);
  const double x_max = opts.x_max > 0.0 ? opts.x_max : 40.0 * s_max;
  QuadratureRule inner = composite_gauss_legendre(opts.inner_nodes, opts.inner_panels, 0.0, x_max);

  const Matrix u_tilde = basis.w.adjoint() * basis.isometry * basis.w;
  Matrix acc = Matrix::Zero(m, m);

  auto accumulate = [&](double lambda_node, double mass) {
    // Inner integral entries: int_0^xmax exp(-x[(1-u)/s_i + u/s_j]) dx.
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = 0; j < m; ++j) {
        const double rate = (1.0 - lambda_node) / basis.s(i) + lambda_node / basis.s(j);
        double integral = 0.0;
        for (size_t q = 0; q < inner.nodes.size(); ++q)
          integral += inner.weights[q] * std::exp(-rate * inner.nodes[q]);
        acc(i, j) += mass * integral * u_tilde(i, j);
      }
    }
  };
  for (const auto& atom : mu.atoms) accumulate(atom.location, atom.mass);
  for (const auto& node : mu.density_nodes) accumulate(node.location, node.mass);

  return basis.w * acc * basis.w.adjoint();
}

double shift_identity_check(const Matrix& t, const OperatorMean& mean, Complex alpha) {
  if (t.rows() != t.cols()) throw Error("shift_identity_check: matrix must be square");
  HadamardBasis basis = factor(t);
  const Eigen::Index m = basis.s.size();
  const double s_max = m > 0 ? basis.s(m - 1) : 0.0;
  if (m == 0 || !(basis.s(0) > 1e-12 * s_max) || s_max == 0.0)
    throw SingularInput("shift_identity_check: input must be invertible");

  RealVector inv = basis.s.cwiseInverse();
  Matrix pos_inverse =
      basis.w * inv.asDiagonal().toDenseMatrix().cast<Complex>() * basis.w.adjoint();
  Matrix argument = basis.isometry - alpha * pos_inverse;

  Matrix via_multiplier = apply_hadamard(basis, mean, argument);
  Matrix delta = apply_hadamard(basis, mean, basis.isometry);
  Matrix expected = delta - alpha * Matrix::Identity(m, m);
  return (via_multiplier - expected).norm();
}

} // namespace aluthge
