#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "aluthge/corpus.hpp"
#include "aluthge/transform.hpp"

using namespace aluthge;

namespace {

Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

std::vector<OperatorMean> battery() {
  return {OperatorMean::arithmetic(0.5), OperatorMean::arithmetic(0.3),
          OperatorMean::geometric(0.5),  OperatorMean::geometric(0.7),
          OperatorMean::harmonic(0.5),   OperatorMean::power(0.5, 0.5),
          OperatorMean::power(0.5, -0.5), OperatorMean::logarithmic()};
}

} // namespace

TEST_CASE("transform of [[0,1],[2,0]] against hand computations") {
  const Matrix t = mat2(0.0, 1.0, 2.0, 0.0);
  // |T| = diag(2,1), U = [[0,1],[1,0]]
  SUBCASE("geometric 1/2: |T|^(1/2) U |T|^(1/2) = [[0,sqrt2],[sqrt2,0]]") {
    Matrix delta = aluthge_transform(t, OperatorMean::geometric(0.5)).delta;
    Matrix expected = mat2(0.0, std::sqrt(2.0), std::sqrt(2.0), 0.0);
    CHECK((delta - expected).norm() <= 1e-12);
  }
  SUBCASE("arithmetic 1/2: (U|T| + |T|U)/2 = [[0,1.5],[1.5,0]]") {
    Matrix delta = aluthge_transform(t, OperatorMean::arithmetic(0.5)).delta;
    Matrix expected = mat2(0.0, 1.5, 1.5, 0.0);
    CHECK((delta - expected).norm() <= 1e-12);
  }
  SUBCASE("the arithmetic transform moves the spectrum (witness regression)") {
    // spectrum of T is {+-sqrt(2)}, spectrum of the transform is {+-1.5}.
    Matrix delta = aluthge_transform(t, OperatorMean::arithmetic(0.5)).delta;
    Eigen::VectorXcd original = eigenvalues(t);
    Eigen::VectorXcd transformed = eigenvalues(delta);
    std::vector<double> mags_t, mags_d;
    for (int i = 0; i < 2; ++i) {
      mags_t.push_back(std::abs(original(i)));
      mags_d.push_back(std::abs(transformed(i)));
    }
    CHECK(mags_t[0] == doctest::Approx(std::sqrt(2.0)));
    CHECK(mags_d[0] == doctest::Approx(1.5));
    for (double mt : mags_t)
      for (double md : mags_d) CHECK(std::abs(mt - md) > 0.05);
  }
  SUBCASE("geometric transforms preserve this spectrum") {
    Matrix delta = aluthge_transform(t, OperatorMean::geometric(0.5)).delta;
    Eigen::VectorXcd transformed = eigenvalues(delta);
    std::vector<double> mags;
    for (int i = 0; i < 2; ++i) mags.push_back(std::abs(transformed(i)));
    std::sort(mags.begin(), mags.end());
    CHECK(mags[0] == doctest::Approx(std::sqrt(2.0)));
    CHECK(mags[1] == doctest::Approx(std::sqrt(2.0)));
  }
}

TEST_CASE("normal matrices are fixed points; non-normal ones move") {
  corpus::Rng rng(41);
  SUBCASE("unitary fixed point") {
    Matrix v = corpus::unitary(rng, 4);
    for (const OperatorMean& mean : battery()) {
      CAPTURE(mean.descriptor());
      Matrix delta = aluthge_transform(v, mean).delta;
      CHECK((delta - v).norm() <= 1e-12);
    }
  }
  SUBCASE("random normal fixed point") {
    for (int trial = 0; trial < 6; ++trial) {
      Matrix n = corpus::normal(rng, 3 + trial % 3);
      for (const OperatorMean& mean : battery()) {
        Matrix delta = aluthge_transform(n, mean).delta;
        CHECK((delta - n).norm() <= 1e-8 * norm_floor(n.norm()));
      }
    }
  }
  SUBCASE("visibly non-normal matrices are displaced") {
    int tested = 0;
    while (tested < 8) {
      Matrix t = corpus::invertible(rng, 4);
      const double scale = norm_floor(t.norm());
      if (normality_defect(t) <= 1e-3 * scale * scale) continue;
      ++tested;
      for (const OperatorMean& mean : battery()) {
        Matrix delta = aluthge_transform(t, mean).delta;
        CHECK((delta - t).norm() > 1e-6 * scale);
      }
    }
  }
}

TEST_CASE("closed forms as oracles for the Hadamard route") {
  corpus::Rng rng(43);
  for (int trial = 0; trial < 12; ++trial) {
    const int m = 3 + trial % 4;
    Matrix t = (trial % 4 == 0) ? corpus::singular(rng, m) : corpus::gaussian(rng, m);
    const double scale = norm_floor(t.norm());
    for (double lam : {0.0, 0.3, 0.5, 0.7, 1.0}) {
      Matrix geo = aluthge_transform(t, OperatorMean::geometric(lam)).delta;
      Matrix geo_oracle = aluthge_closed_form(t, ClosedFormKind::Geometric, lam);
      CHECK((geo - geo_oracle).norm() <= 1e-9 * scale);
    }
    for (double lam : {0.3, 0.5, 0.7}) {
      Matrix ari = aluthge_transform(t, OperatorMean::arithmetic(lam)).delta;
      Matrix ari_oracle = aluthge_closed_form(t, ClosedFormKind::Arithmetic, lam);
      if (trial % 4 == 0) {
        // corpus::singular keeps ker(T) == ker(T*), where both routes agree
        CHECK((ari - ari_oracle).norm() <= 1e-9 * scale);
      } else {
        CHECK((ari - ari_oracle).norm() <= 1e-9 * scale);
      }
    }
  }
}

TEST_CASE("geometric closed-form endpoints") {
  corpus::Rng rng(47);
  Matrix t = corpus::gaussian(rng, 4);
  PolarParts polar = polar_decompose(t);
  CHECK((aluthge_closed_form(t, ClosedFormKind::Geometric, 0.0) - polar.positive * polar.isometry)
            .norm() <= 1e-10 * t.norm());
  CHECK((aluthge_closed_form(t, ClosedFormKind::Geometric, 1.0) - t).norm() <= 1e-10 * t.norm());
}

TEST_CASE("singular input with mismatched kernels follows the eps-limit") {
  // T = [[0,1],[0,0]]: ker(T) = span(e1) but ker(T*) = span(e2). The
  // eps-regularized transform keeps the kernel row, giving lambda*T for the
  // arithmetic mean, while the projected closed form collapses to 0.
  const Matrix t = mat2(0.0, 1.0, 0.0, 0.0);
  for (double lam : {0.3, 0.5, 0.7}) {
    Matrix delta = aluthge_transform(t, OperatorMean::arithmetic(lam)).delta;
    CHECK((delta - lam * t).norm() <= 1e-12);

    // eps-limit reference: Delta(U(|T| + eps I)) as eps -> 0
    PolarParts polar = polar_decompose(t);
    Matrix reg = polar.isometry * (polar.positive + 1e-9 * Matrix::Identity(2, 2));
    Matrix delta_reg = aluthge_transform(reg, OperatorMean::arithmetic(lam)).delta;
    CHECK((delta - delta_reg).norm() <= 1e-6);

    Matrix closed = aluthge_closed_form(t, ClosedFormKind::Arithmetic, lam);
    CHECK(closed.norm() <= 1e-12); // the projected form differs here by design
  }
}

TEST_CASE("transform properties on random inputs") {
  corpus::Rng rng(53);
  for (int trial = 0; trial < 8; ++trial) {
    const int m = 3 + trial % 3;
    Matrix t = (trial % 3 == 0) ? corpus::singular(rng, m) : corpus::gaussian(rng, m);
    const double scale = norm_floor(t.norm());
    const Complex alpha = rng.complex_normal();
    Matrix v = corpus::unitary(rng, m);

    for (const OperatorMean& mean : battery()) {
      CAPTURE(mean.descriptor());
      Matrix delta = aluthge_transform(t, mean).delta;

      // homogeneity
      Matrix scaled = aluthge_transform(alpha * t, mean).delta;
      CHECK((scaled - alpha * delta).norm() <= 1e-9 * std::abs(alpha) * scale + 1e-12);

      // unitary covariance
      Matrix conjugated = aluthge_transform(v.adjoint() * t * v, mean).delta;
      CHECK((conjugated - v.adjoint() * delta * v).norm() <= 1e-9 * scale);

      // norm contraction (spectral)
      CHECK(spectral_norm(delta) <= spectral_norm(t) + 1e-9 * scale);

      // trace preservation
      CHECK(std::abs(delta.trace() - t.trace()) <= 1e-9 * scale * m);
    }
  }
}

TEST_CASE("shift identity residual") {
  corpus::Rng rng(59);
  SUBCASE("alpha = 0 degenerates to the transform itself") {
    Matrix t = corpus::invertible(rng, 4);
    for (const OperatorMean& mean : battery())
      CHECK(shift_identity_check(t, mean, Complex(0.0, 0.0)) <= 1e-12 * t.norm());
  }
  SUBCASE("random alpha on invertible inputs") {
    for (int trial = 0; trial < 6; ++trial) {
      Matrix t = corpus::invertible(rng, 4);
      const Complex alpha(1.0, 1.0);
      for (const OperatorMean& mean : battery()) {
        const double residual = shift_identity_check(t, mean, alpha);
        CHECK(residual <= 1e-9 * (spectral_norm(t) + std::abs(alpha)));
      }
    }
  }
  SUBCASE("positive definite input: everything commutes") {
    Matrix g = corpus::gaussian(rng, 3);
    Matrix pd = g * g.adjoint() + 0.5 * Matrix::Identity(3, 3);
    const double residual =
        shift_identity_check(pd, OperatorMean::geometric(0.5), Complex(2.0, -1.0));
    CHECK(residual <= 1e-10 * spectral_norm(pd));
  }
  SUBCASE("singular input is rejected") {
    CHECK_THROWS_AS(
        shift_identity_check(mat2(0.0, 1.0, 0.0, 0.0), OperatorMean::geometric(0.5), 1.0),
        SingularInput);
  }
}

TEST_CASE("quadrature oracle equals the Hadamard form") {
  corpus::Rng rng(61);
  SUBCASE("hand case: harmonic 1/2 on [[0,1],[2,0]]") {
    Matrix t = mat2(0.0, 1.0, 2.0, 0.0);
    Matrix via_integral = aluthge_quadrature_oracle(t, OperatorMean::harmonic(0.5));
    Matrix direct = aluthge_transform(t, OperatorMean::harmonic(0.5)).delta;
    CHECK((via_integral - direct).norm() <= 1e-6);
  }
  SUBCASE("scalar multiples of the identity are fixed") {
    Matrix t = Complex(1.5, 0.5) * Matrix::Identity(3, 3);
    for (const OperatorMean& mean :
         {OperatorMean::arithmetic(0.3), OperatorMean::harmonic(0.5), OperatorMean::geometric(0.5)})
      CHECK((aluthge_quadrature_oracle(t, mean) - t).norm() <= 1e-6 * t.norm());
  }
  SUBCASE("measure means on well-conditioned random inputs") {
    for (int trial = 0; trial < 4; ++trial) {
      Matrix t = corpus::invertible(rng, 4);
      const double scale = norm_floor(t.norm());
      for (const OperatorMean& mean :
           {OperatorMean::arithmetic(0.3), OperatorMean::arithmetic(0.5),
            OperatorMean::harmonic(0.3), OperatorMean::harmonic(0.5),
            OperatorMean::geometric(0.5), OperatorMean::logarithmic()}) {
        CAPTURE(mean.descriptor());
        Matrix via_integral = aluthge_quadrature_oracle(t, mean);
        Matrix direct = aluthge_transform(t, mean).delta;
        CHECK((via_integral - direct).norm() <= 1e-5 * scale);
      }
    }
  }
  SUBCASE("errors: singular input and missing measure") {
    CHECK_THROWS_AS(aluthge_quadrature_oracle(mat2(0.0, 1.0, 0.0, 0.0), OperatorMean::harmonic(0.5)),
                    SingularInput);
    Matrix t = corpus::invertible(rng, 3);
    CHECK_THROWS_AS(aluthge_quadrature_oracle(t, OperatorMean::power(0.5, 0.5)), MeasureMissing);
    CHECK_THROWS_AS(aluthge_quadrature_oracle(t, OperatorMean::geometric(0.3)), MeasureMissing);
  }
}

TEST_CASE("repeated eigenvalues of |T| need no special casing") {
  // The Hadamard multiplier is constant on degenerate blocks (P(s,s) = s),
  // so any orthonormal basis the eigensolver picks inside an eigenspace
  // gives the same transform.
  corpus::Rng rng(137);
  Eigen::VectorXd s(5);
  s << 2.0, 2.0, 2.0, 1.0, 1.0;
  for (int trial = 0; trial < 4; ++trial) {
    Matrix u = corpus::unitary(rng, 5);
    Matrix w = corpus::unitary(rng, 5);
    Matrix pos = w * s.asDiagonal().toDenseMatrix().cast<Complex>() * w.adjoint();
    Matrix t = u * pos;
    const double scale = norm_floor(t.norm());
    Matrix v = corpus::unitary(rng, 5);
    for (const OperatorMean& mean : battery()) {
      CAPTURE(mean.descriptor());
      Matrix delta = aluthge_transform(t, mean).delta;
      // covariance exercises two different eigenbases of conjugated |T|
      Matrix conjugated = aluthge_transform(v.adjoint() * t * v, mean).delta;
      CHECK((conjugated - v.adjoint() * delta * v).norm() <= 1e-9 * scale);
      CHECK(std::abs(delta.trace() - t.trace()) <= 1e-9 * scale * 5);
    }
    // closed-form oracles agree through the degeneracy as well
    Matrix geo = aluthge_transform(t, OperatorMean::geometric(0.4)).delta;
    CHECK((geo - aluthge_closed_form(t, ClosedFormKind::Geometric, 0.4)).norm() <= 1e-9 * scale);
  }
}

TEST_CASE("degenerate shapes and invalid input") {
  SUBCASE("1x1 matrices") {
    Matrix t(1, 1);
    t(0, 0) = Complex(3.0, -4.0);
    for (const OperatorMean& mean : battery()) {
      Matrix delta = aluthge_transform(t, mean).delta;
      CHECK(std::abs(delta(0, 0) - t(0, 0)) <= 1e-12); // 1x1 is normal
    }
  }
  SUBCASE("zero matrix maps to zero") {
    Matrix z = Matrix::Zero(3, 3);
    CHECK(aluthge_transform(z, OperatorMean::geometric(0.5)).delta.norm() == 0.0);
    CHECK(aluthge_transform(z, OperatorMean::arithmetic(0.3)).delta.norm() == 0.0);
  }
  SUBCASE("non-square and non-finite inputs are rejected") {
    Matrix rect = Matrix::Zero(2, 3);
    CHECK_THROWS_AS(aluthge_transform(rect, OperatorMean::geometric(0.5)), Error);
    Matrix bad = Matrix::Identity(2, 2);
    bad(0, 1) = Complex(std::nan(""), 0.0);
    CHECK_THROWS_AS(aluthge_transform(bad, OperatorMean::geometric(0.5)), Error);
    CHECK_THROWS_AS(polar_decompose(bad), Error);
  }
  SUBCASE("trace helper") {
    Matrix t(2, 2);
    t << Complex(1.0, 2.0), 5.0, 7.0, Complex(-3.0, 0.5);
    CHECK(trace(t) == Complex(-2.0, 2.5));
    CHECK_THROWS_AS(trace(Matrix::Zero(2, 3)), Error);
  }
}

TEST_CASE("transform result metadata") {
  Matrix t = mat2(0.0, 1.0, 2.0, 0.0);
  TransformResult result = aluthge_transform(t, OperatorMean::geometric(0.5));
  CHECK(result.weight == doctest::Approx(0.5));
  CHECK(result.basis_conditioning == doctest::Approx(1.0)); // eigenvalues of |T| are {1,2}
  CHECK(result.delta.allFinite());
  CHECK(spectral_norm(result.delta) <= spectral_norm(t) + 1e-9 * t.norm());
}
