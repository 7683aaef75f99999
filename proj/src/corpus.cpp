#include "aluthge/corpus.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>

namespace aluthge::corpus {

double Rng::uniform() {
  // 53-bit mantissa, strictly inside (0,1).
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(2.0 * M_PI * u2);
  have_spare_ = true;
  return r * std::cos(2.0 * M_PI * u2);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im);
}

Kind parse_kind(const std::string& name) {
  if (name == "invertible") return Kind::Invertible;
  if (name == "singular") return Kind::Singular;
  if (name == "normal") return Kind::Normal;
  if (name == "nearly-normal") return Kind::NearlyNormal;
  if (name == "shift-truncation") return Kind::ShiftTruncation;
  throw ConfigError("unknown corpus kind '" + name + "'");
}

std::string kind_name(Kind kind) {
  switch (kind) {
    case Kind::Invertible: return "invertible";
    case Kind::Singular: return "singular";
    case Kind::Normal: return "normal";
    case Kind::NearlyNormal: return "nearly-normal";
    case Kind::ShiftTruncation: return "shift-truncation";
  }
  return "?";
}

Matrix gaussian(Rng& rng, int m) {
  Matrix a(m, m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) a(r, c) = rng.complex_normal();
  return a;
}

Matrix unitary(Rng& rng, int m) {
  Matrix g = gaussian(rng, m);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase convention so the result is a deterministic function of g.
  for (int i = 0; i < m; ++i) {
    const Complex d = r(i, i);
    const double mag = std::abs(d);
    q.col(i) *= mag > 0.0 ? d / mag : Complex(1.0, 0.0);
  }
  return q;
}

Matrix invertible(Rng& rng, int m) {
  Matrix g = gaussian(rng, m);
  Eigen::JacobiSVD<Matrix> svd(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
  RealVector sigma = svd.singularValues();
  const double floor = 0.1 * sigma(0);
  for (Eigen::Index i = 0; i < sigma.size(); ++i) sigma(i) = std::max(sigma(i), floor);
  return svd.matrixU() * sigma.asDiagonal() * svd.matrixV().adjoint();
}

Matrix singular(Rng& rng, int m) {
  // Compression keeps the left and right kernels equal, which is the regime
  // where the arithmetic closed form and the eps-limit transform coincide.
  const int defect = 1 + static_cast<int>(rng.uniform() * (m / 2));
  const int rank = m - defect;
  Matrix core = invertible(rng, rank);
  Matrix embedded = Matrix::Zero(m, m);
  embedded.topLeftCorner(rank, rank) = core;
  Matrix v = unitary(rng, m);
  return v.adjoint() * embedded * v;
}

Matrix normal(Rng& rng, int m) {
  Eigen::VectorXcd d(m);
  for (int i = 0; i < m; ++i) d(i) = rng.complex_normal();
  Matrix v = unitary(rng, m);
  return v.adjoint() * d.asDiagonal() * v;
}

Matrix nearly_normal(Rng& rng, int m) {
  Matrix n = normal(rng, m);
  Matrix perturbation = gaussian(rng, m);
  return n + (1e-4 * n.norm() / perturbation.norm()) * perturbation;
}

Matrix shift_truncation(Rng& rng, int m) {
  Matrix a = Matrix::Zero(m, m);
  for (int k = 0; k + 1 < m; ++k) a(k + 1, k) = Complex(0.5 + 1.5 * rng.uniform(), 0.0);
  return a;
}

Matrix make(Kind kind, Rng& rng, int m) {
  switch (kind) {
    case Kind::Invertible: return invertible(rng, m);
    case Kind::Singular: return singular(rng, m);
    case Kind::Normal: return normal(rng, m);
    case Kind::NearlyNormal: return nearly_normal(rng, m);
    case Kind::ShiftTruncation: return shift_truncation(rng, m);
  }
  throw ConfigError("unknown corpus kind");
}

} // namespace aluthge::corpus
