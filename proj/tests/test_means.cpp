#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "aluthge/corpus.hpp"
#include "aluthge/means.hpp"

using namespace aluthge;

namespace {

std::vector<OperatorMean> catalog() {
  return {OperatorMean::arithmetic(0.5), OperatorMean::arithmetic(0.3),
          OperatorMean::geometric(0.5),  OperatorMean::geometric(0.7),
          OperatorMean::harmonic(0.5),   OperatorMean::harmonic(0.2),
          OperatorMean::power(0.5, 0.5), OperatorMean::power(0.4, -0.5),
          OperatorMean::logarithmic()};
}

} // namespace

TEST_CASE("perspective values from the catalog") {
  CHECK(OperatorMean::geometric(0.5).perspective(4.0, 1.0) == doctest::Approx(2.0));
  CHECK(OperatorMean::arithmetic(0.5).perspective(4.0, 1.0) == doctest::Approx(2.5));
  for (const OperatorMean& mean : catalog()) {
    CAPTURE(mean.descriptor());
    CHECK(mean.perspective(3.0, 3.0) == doctest::Approx(3.0)); // f(1) = 1
    CHECK(mean.f(1.0) == doctest::Approx(1.0));
  }
}

TEST_CASE("boundary extension of the perspective") {
  CHECK(OperatorMean::geometric(0.5).perspective(5.0, 0.0) == 0.0);
  CHECK(OperatorMean::arithmetic(0.5).perspective(5.0, 0.0) == doctest::Approx(2.5));
  CHECK(OperatorMean::arithmetic(0.3).perspective(0.0, 5.0) == doctest::Approx(1.5));
  CHECK(OperatorMean::harmonic(0.5).perspective(5.0, 0.0) == 0.0);
  CHECK(OperatorMean::logarithmic().perspective(5.0, 0.0) == 0.0);
  for (const OperatorMean& mean : catalog()) {
    CAPTURE(mean.descriptor());
    CHECK(mean.perspective(0.0, 0.0) == 0.0);
  }
}

TEST_CASE("logarithmic mean is stable near the diagonal") {
  const OperatorMean log_mean = OperatorMean::logarithmic();
  // reference value away from the diagonal
  CHECK(log_mean.perspective(2.0, 1.0) == doctest::Approx(1.0 / std::log(2.0)));
  // series region: compare against the exact formula evaluated in long double
  for (double eps : {1e-7, 1e-9, 1e-12, 1e-15}) {
    const double s = 1.0 + eps;
    const double t = 1.0;
    const long double exact =
        eps > 0 ? static_cast<long double>(s - t) / std::log(static_cast<long double>(s) / t) : 1.0L;
    CHECK(log_mean.perspective(s, t) ==
          doctest::Approx(static_cast<double>(exact)).epsilon(1e-13));
  }
  CHECK(log_mean.perspective(7.25, 7.25) == 7.25);
}

TEST_CASE("perspective_matrix hand cases") {
  Eigen::VectorXd s(2);
  s << 2.0, 1.0;
  Eigen::MatrixXd geo = perspective_matrix(OperatorMean::geometric(0.5), s);
  CHECK(geo(0, 0) == doctest::Approx(2.0));
  CHECK(geo(0, 1) == doctest::Approx(std::sqrt(2.0)));
  CHECK(geo(1, 0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(geo(1, 1) == doctest::Approx(1.0));

  Eigen::MatrixXd ari = perspective_matrix(OperatorMean::arithmetic(0.5), s);
  CHECK(ari(0, 1) == doctest::Approx(1.5));
  CHECK(ari(1, 0) == doctest::Approx(1.5));

  Eigen::VectorXd c = Eigen::VectorXd::Constant(4, 3.25);
  for (const OperatorMean& mean : catalog()) {
    Eigen::MatrixXd all_c = perspective_matrix(mean, c);
    CHECK((all_c.array() - 3.25).abs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("means interpolate and obey the weighted sandwich") {
  corpus::Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const double s = std::exp(3.0 * (rng.uniform() - 0.5));
    const double t = std::exp(3.0 * (rng.uniform() - 0.5));
    for (const OperatorMean& mean : catalog()) {
      CAPTURE(mean.descriptor());
      const double p = mean.perspective(s, t);
      CHECK(p >= std::min(s, t) - 1e-12 * std::max(s, t));
      CHECK(p <= std::max(s, t) + 1e-12 * std::max(s, t));
      const double lam = mean.weight();
      if (lam > 0.0 && lam < 1.0) {
        const double lower = OperatorMean::harmonic(lam).perspective(s, t);
        const double upper = OperatorMean::arithmetic(lam).perspective(s, t);
        CHECK(p >= lower - 1e-12 * upper);
        CHECK(p <= upper + 1e-12 * upper);
      }
      // positive homogeneity
      const double c = 0.25 + 3.0 * rng.uniform();
      CHECK(mean.perspective(c * s, c * t) == doctest::Approx(c * p).epsilon(1e-12));
    }
  }
}

TEST_CASE("representing functions are nondecreasing on a grid") {
  for (const OperatorMean& mean : catalog()) {
    CAPTURE(mean.descriptor());
    double prev = -1.0;
    for (int k = 0; k <= 400; ++k) {
      const double x = std::exp(-6.0 + 12.0 * k / 400.0);
      const double fx = mean.f(x);
      CHECK(fx >= prev - 1e-12 * std::max(1.0, fx));
      prev = fx;
    }
  }
}

TEST_CASE("built-in representing measures reproduce their means") {
  SUBCASE("arithmetic: (1-l) delta_0 + l delta_1") {
    for (double lam : {0.25, 0.5, 0.9}) {
      OperatorMean direct = OperatorMean::arithmetic(lam);
      OperatorMean via = OperatorMean::from_measure(direct.measure());
      for (double x : {0.1, 0.7, 1.0, 3.0, 42.0})
        CHECK(via.f(x) == doctest::Approx(direct.f(x)).epsilon(1e-12));
      CHECK(via.weight() == doctest::Approx(lam));
    }
  }
  SUBCASE("harmonic: delta_lambda") {
    for (double lam : {0.25, 0.5, 0.9}) {
      OperatorMean direct = OperatorMean::harmonic(lam);
      OperatorMean via = OperatorMean::from_measure(direct.measure());
      for (double x : {0.1, 0.7, 1.0, 3.0, 42.0})
        CHECK(via.f(x) == doctest::Approx(direct.f(x)).epsilon(1e-12));
    }
  }
  SUBCASE("geometric weight 1/2: arcsine density") {
    OperatorMean direct = OperatorMean::geometric(0.5);
    OperatorMean via = OperatorMean::from_measure(direct.measure(64));
    for (double x : {0.05, 0.3, 1.0, 2.5, 20.0})
      CHECK(via.f(x) == doctest::Approx(std::sqrt(x)).epsilon(1e-9));
  }
  SUBCASE("logarithmic density") {
    OperatorMean direct = OperatorMean::logarithmic();
    OperatorMean via = OperatorMean::from_measure(direct.measure(64));
    for (double x : {0.05, 0.3, 2.5, 20.0})
      CHECK(via.f(x) == doctest::Approx(direct.f(x)).epsilon(1e-9));
  }
  SUBCASE("measures are normalized probability measures") {
    for (const OperatorMean& mean : catalog()) {
      if (!mean.has_measure()) continue;
      RepresentingMeasure mu = mean.measure();
      CHECK(mu.total_mass() == doctest::Approx(1.0).epsilon(1e-10));
      CHECK_NOTHROW(mu.validate());
    }
  }
}

TEST_CASE("make_mean validation") {
  CHECK_THROWS_AS(OperatorMean::arithmetic(1.5), InvalidWeight);
  CHECK_THROWS_AS(OperatorMean::geometric(-0.1), InvalidWeight);
  CHECK_THROWS_AS(OperatorMean::power(0.5, 2.0), InvalidExponent);
  CHECK_THROWS_AS(make_mean(MeanKind::FromMeasure, 0.5), InvalidMeasure);
  RepresentingMeasure bad;
  bad.atoms.push_back({0.5, 0.6}); // mass sums to 0.6
  CHECK_THROWS_AS(OperatorMean::from_measure(bad), InvalidMeasure);
  // power exponent 0 falls back to the geometric mean
  CHECK(OperatorMean::power(0.3, 0.0).kind() == MeanKind::Geometric);
}

TEST_CASE("mean descriptors parse and round-trip") {
  for (const OperatorMean& mean : catalog()) {
    OperatorMean reparsed = parse_mean(mean.descriptor());
    CHECK(reparsed.kind() == mean.kind());
    CHECK(reparsed.weight() == doctest::Approx(mean.weight()));
    for (double x : {0.2, 1.0, 5.0}) CHECK(reparsed.f(x) == doctest::Approx(mean.f(x)));
  }
  CHECK_THROWS_AS(parse_mean("power:0.5"), ConfigError);
  CHECK_THROWS_AS(parse_mean("frobnicate:0.5"), ConfigError);
  CHECK_THROWS_AS(parse_mean("arithmetic"), ConfigError);
}

TEST_CASE("measure-file descriptors") {
  const std::string path = "/tmp/aluthge_test_measure.json";
  {
    std::ofstream out(path);
    // delta_{1/2}: the non-weighted harmonic mean
    out << R"({"atoms": [{"location": 0.5, "mass": 1.0}]})";
  }
  OperatorMean via_file = parse_mean("measure:" + path);
  OperatorMean direct = OperatorMean::harmonic(0.5);
  for (double x : {0.2, 1.0, 3.0, 10.0})
    CHECK(via_file.f(x) == doctest::Approx(direct.f(x)).epsilon(1e-14));
  CHECK(via_file.weight() == doctest::Approx(0.5));
  CHECK(via_file.has_measure());

  {
    std::ofstream out(path);
    out << R"({"atoms": [{"location": 0.5, "mass": 0.25}]})"; // mass != 1
  }
  CHECK_THROWS_AS(parse_mean("measure:" + path), InvalidMeasure);
  CHECK_THROWS_AS(parse_mean("measure:/tmp/aluthge_no_such_measure.json"), IoError);
  std::remove(path.c_str());
}

TEST_CASE("dominance_check certificates") {
  Eigen::VectorXd s(3);
  s << 1.0, 2.0, 5.0;

  SUBCASE("harmonic below arithmetic") {
    DominanceResult res =
        dominance_check(OperatorMean::harmonic(0.5), OperatorMean::arithmetic(0.5), s, 1e-12);
    CHECK(res.dominated);
    CHECK(res.min_eigenvalue >= -1e-12);
  }
  SUBCASE("a mean against itself gives the all-ones matrix") {
    DominanceResult res =
        dominance_check(OperatorMean::geometric(0.5), OperatorMean::geometric(0.5), s, 1e-12);
    CHECK(res.dominated);
    CHECK(res.min_eigenvalue == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("arithmetic over harmonic is refuted") {
    // Independent certificate: for R[i][j] = (s_i+s_j)^2/(4 s_i s_j) on
    // (1,2,5) and x = (1,1,-1), x^T R x = 3 + 2(9/8 - 36/20 - 49/40) = -0.8,
    // so R cannot be PSD.
    Eigen::MatrixXd r(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = std::pow(s(i) + s(j), 2) / (4.0 * s(i) * s(j));
    Eigen::Vector3d x(1.0, 1.0, -1.0);
    CHECK(x.dot(r * x) == doctest::Approx(-0.8));

    DominanceResult res =
        dominance_check(OperatorMean::arithmetic(0.5), OperatorMean::harmonic(0.5), s, 1e-12);
    CHECK_FALSE(res.dominated);
    CHECK(res.min_eigenvalue < -1e-3);
  }
  SUBCASE("strictly positive tuples required") {
    Eigen::VectorXd bad(2);
    bad << 1.0, 0.0;
    CHECK_THROWS(dominance_check(OperatorMean::harmonic(0.5), OperatorMean::arithmetic(0.5), bad,
                                 1e-12));
  }
}

TEST_CASE("dominance chain holds on random tuples") {
  corpus::Rng rng(31);
  const std::vector<OperatorMean> chain = {OperatorMean::harmonic(0.5),
                                           OperatorMean::geometric(0.5),
                                           OperatorMean::logarithmic(),
                                           OperatorMean::arithmetic(0.5)};
  for (int trial = 0; trial < 100; ++trial) {
    const int len = 2 + static_cast<int>(rng.uniform() * 5.0);
    Eigen::VectorXd s(len);
    for (int k = 0; k < len; ++k) s(k) = std::exp(4.0 * (rng.uniform() - 0.5));
    for (size_t a = 0; a + 1 < chain.size(); ++a) {
      DominanceResult res = dominance_check(chain[a], chain[a + 1], s, 1e-10);
      CAPTURE(trial);
      CAPTURE(a);
      CHECK(res.dominated);
    }
  }
}
