#include <doctest.h>

#include "aluthge/corpus.hpp"
#include "aluthge/linalg.hpp"

using namespace aluthge;

namespace {

Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

} // namespace

TEST_CASE("hermitian_eig on diagonal and hand-solved inputs") {
  SUBCASE("diag(2,1) sorts ascending") {
    Matrix a = mat2(2.0, 0.0, 0.0, 1.0);
    SpectralData eig = hermitian_eig(a);
    CHECK(eig.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(eig.eigenvalues(1) == doctest::Approx(2.0));
    // eigenvectors form a permutation of the identity
    for (int c = 0; c < 2; ++c) {
      double mx = 0.0;
      for (int r = 0; r < 2; ++r) mx = std::max(mx, std::abs(eig.eigenvectors(r, c)));
      CHECK(mx == doctest::Approx(1.0));
    }
  }
  SUBCASE("identity has a triple eigenvalue 1") {
    SpectralData eig = hermitian_eig(Matrix::Identity(3, 3));
    for (int i = 0; i < 3; ++i) CHECK(eig.eigenvalues(i) == doctest::Approx(1.0));
  }
  SUBCASE("[[0,1],[1,0]] has eigenvalues -1, 1 (characteristic polynomial x^2 - 1)") {
    SpectralData eig = hermitian_eig(mat2(0.0, 1.0, 1.0, 0.0));
    CHECK(eig.eigenvalues(0) == doctest::Approx(-1.0));
    CHECK(eig.eigenvalues(1) == doctest::Approx(1.0));
  }
  SUBCASE("rejects a visibly non-Hermitian input") {
    CHECK_THROWS_AS(hermitian_eig(mat2(0.0, 1.0, 0.0, 0.0)), NotHermitian);
  }
}

TEST_CASE("hermitian_eig reconstruction on random Hermitian matrices") {
  corpus::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 2 + trial % 6;
    Matrix g = corpus::gaussian(rng, m);
    Matrix a = 0.5 * (g + g.adjoint());
    SpectralData eig = hermitian_eig(a);
    const Matrix& w = eig.eigenvectors;
    CHECK((w.adjoint() * w - Matrix::Identity(m, m)).norm() <= 1e-12 * m);
    Matrix rebuilt = w * eig.eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>() * w.adjoint();
    CHECK((rebuilt - a).norm() <= 1e-10 * norm_floor(a.norm()));
    for (int i = 0; i + 1 < m; ++i) CHECK(eig.eigenvalues(i) <= eig.eigenvalues(i + 1));
  }
}

TEST_CASE("polar_decompose hand-checked cases") {
  SUBCASE("[[0,1],[2,0]]: T*T = diag(4,1), so |T| = diag(2,1) and U flips") {
    PolarParts polar = polar_decompose(mat2(0.0, 1.0, 2.0, 0.0));
    Matrix expected_pos = mat2(2.0, 0.0, 0.0, 1.0);
    Matrix expected_u = mat2(0.0, 1.0, 1.0, 0.0);
    CHECK((polar.positive - expected_pos).norm() <= 1e-12);
    CHECK((polar.isometry - expected_u).norm() <= 1e-12);
    CHECK(polar.rank == 2);
  }
  SUBCASE("unitary input: |T| = I, U = T") {
    corpus::Rng rng(3);
    Matrix v = corpus::unitary(rng, 4);
    PolarParts polar = polar_decompose(v);
    CHECK((polar.positive - Matrix::Identity(4, 4)).norm() <= 1e-12);
    CHECK((polar.isometry - v).norm() <= 1e-12);
  }
  SUBCASE("zero matrix") {
    PolarParts polar = polar_decompose(Matrix::Zero(3, 3));
    CHECK(polar.rank == 0);
    CHECK(polar.isometry.norm() == 0.0);
    CHECK(polar.positive.norm() == 0.0);
  }
}

TEST_CASE("polar_decompose invariants on random matrices") {
  corpus::Rng rng(17);
  for (int trial = 0; trial < 24; ++trial) {
    const int m = 2 + trial % 5;
    Matrix t = (trial % 3 == 0) ? corpus::singular(rng, m) : corpus::gaussian(rng, m);
    PolarParts polar = polar_decompose(t);
    const double scale = norm_floor(t.norm());

    CHECK((polar.isometry * polar.positive - t).norm() <= 1e-10 * scale);

    SpectralData eig = hermitian_eig(polar.positive);
    CHECK(eig.eigenvalues(0) >= -1e-12 * scale);

    // U*U |T| = |T|: initial space of U carries range(|T|)
    CHECK((polar.isometry.adjoint() * polar.isometry * polar.positive - polar.positive).norm() <=
          1e-10 * scale);

    // U*U is an orthogonal projection of rank == polar.rank
    Matrix proj = polar.isometry.adjoint() * polar.isometry;
    CHECK((proj * proj - proj).norm() <= 1e-10);
    CHECK(std::abs(proj.trace().real() - static_cast<double>(polar.rank)) <= 1e-8);
  }
}

TEST_CASE("norms and normality defect") {
  SUBCASE("spectral norm of diag(3, -4i) is 4") {
    Matrix a = mat2(3.0, 0.0, 0.0, Complex(0.0, -4.0));
    CHECK(spectral_norm(a) == doctest::Approx(4.0));
  }
  SUBCASE("normality defect of a unitary is 0") {
    corpus::Rng rng(5);
    CHECK(normality_defect(corpus::unitary(rng, 5)) <= 1e-13);
  }
  SUBCASE("normality defect of the Jordan cell is sqrt(2)") {
    CHECK(normality_defect(mat2(0.0, 1.0, 0.0, 0.0)) == doctest::Approx(std::sqrt(2.0)));
  }
  SUBCASE("spectral norm never exceeds the Frobenius norm") {
    corpus::Rng rng(7);
    for (int trial = 0; trial < 12; ++trial) {
      Matrix a = corpus::gaussian(rng, 2 + trial % 5);
      CHECK(spectral_norm(a) <= frobenius_norm(a) + 1e-12);
    }
  }
}
