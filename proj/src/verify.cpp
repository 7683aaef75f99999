#include "aluthge/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>

#include "aluthge/corpus.hpp"
#include "aluthge/dynamics.hpp"
#include "aluthge/linalg.hpp"
#include "aluthge/means.hpp"
#include "aluthge/numrange.hpp"
#include "aluthge/shiftlab.hpp"
#include "aluthge/transform.hpp"

namespace aluthge::verify {

namespace {

using corpus::Rng;

std::vector<OperatorMean> builtin_means() {
  std::vector<OperatorMean> means;
  for (double w : {0.3, 0.5, 0.7}) {
    means.push_back(OperatorMean::arithmetic(w));
    means.push_back(OperatorMean::geometric(w));
    means.push_back(OperatorMean::harmonic(w));
  }
  means.push_back(OperatorMean::power(0.5, 0.5));
  means.push_back(OperatorMean::power(0.5, -0.5));
  means.push_back(OperatorMean::logarithmic());
  return means;
}

std::vector<OperatorMean> chain_means() {
  return {OperatorMean::harmonic(0.5), OperatorMean::geometric(0.5), OperatorMean::logarithmic(),
          OperatorMean::arithmetic(0.5)};
}

Matrix nth_iterate(const Matrix& t, const OperatorMean& mean, int n) {
  Matrix current = t;
  for (int k = 0; k < n; ++k) current = aluthge_transform(current, mean).delta;
  return current;
}

// Pairwise phase condition on the unitary polar factor: every pair of
// phases either matches within match_tol or is separated by at least
// gap_min radians. Keeps slow (1+e^{i delta})/2 contractions out of the
// bounded-step corpus.
bool phase_gap_ok(const Matrix& t, double gap_min, double match_tol) {
  PolarParts polar = polar_decompose(t);
  if (polar.rank < t.rows()) return false;
  Eigen::ComplexSchur<Matrix> schur(polar.isometry, false);
  if (schur.info() != Eigen::Success) return false;
  std::vector<double> phases;
  for (Eigen::Index i = 0; i < t.rows(); ++i) {
    double theta = std::arg(schur.matrixT()(i, i));
    if (theta < 0.0) theta += 2.0 * M_PI;
    phases.push_back(theta);
  }
  for (size_t i = 0; i < phases.size(); ++i) {
    for (size_t j = i + 1; j < phases.size(); ++j) {
      double d = std::abs(phases[i] - phases[j]);
      d = std::min(d, 2.0 * M_PI - d);
      if (d > match_tol && d < gap_min) return false;
    }
  }
  return true;
}

struct Battery {
  std::uint64_t seed;

  CheckResult geometric_closed_form() const {
    CheckResult r{"Example1(2)-geometric-closed-form",
                  "Hadamard transform equals |T|^(1-l) U |T|^l, geometric weights 0.3/0.5/0.7, "
                  "100 mixed 6x6 matrices",
                  true, 0.0, 1e-9, 0};
    Rng rng(seed + 1);
    for (int i = 0; i < 100; ++i) {
      Matrix t = (i % 3 == 0) ? corpus::singular(rng, 6) : corpus::invertible(rng, 6);
      const double scale = norm_floor(t.norm());
      for (double lam : {0.3, 0.5, 0.7}) {
        Matrix delta = aluthge_transform(t, OperatorMean::geometric(lam)).delta;
        Matrix oracle = aluthge_closed_form(t, ClosedFormKind::Geometric, lam);
        r.worst = std::max(r.worst, (delta - oracle).norm() / scale);
        ++r.samples;
      }
    }
    r.passed = r.worst <= r.tolerance;
    return r;
  }

  CheckResult arithmetic_closed_form() const {
    CheckResult r{"Example1(1)-arithmetic-closed-form",
                  "Hadamard transform equals (1-l)|T|U + l U*UU|T|, weights 0.3/0.5/0.7, "
                  "100 mixed 6x6 matrices",
                  true, 0.0, 1e-9, 0};
    Rng rng(seed + 1); // same corpus as the geometric check
    for (int i = 0; i < 100; ++i) {
      Matrix t = (i % 3 == 0) ? corpus::singular(rng, 6) : corpus::invertible(rng, 6);
      const double scale = norm_floor(t.norm());
      for (double lam : {0.3, 0.5, 0.7}) {
        Matrix delta = aluthge_transform(t, OperatorMean::arithmetic(lam)).delta;
        Matrix oracle = aluthge_closed_form(t, ClosedFormKind::Arithmetic, lam);
        r.worst = std::max(r.worst, (delta - oracle).norm() / scale);
        ++r.samples;
      }
    }
    r.passed = r.worst <= r.tolerance;
    return r;
  }

  CheckResult quadrature(const std::string& tag, const std::vector<OperatorMean>& means) const {
    CheckResult r{tag, "double-integral route matches the Hadamard form, 20 well-conditioned 4x4",
                  true, 0.0, 1e-5, 0};
    Rng rng(seed + 2);
    for (int i = 0; i < 20; ++i) {
      Matrix t = corpus::invertible(rng, 4);
      const double scale = norm_floor(t.norm());
      for (const OperatorMean& mean : means) {
        Matrix via_integral = aluthge_quadrature_oracle(t, mean);
        Matrix direct = aluthge_transform(t, mean).delta;
        r.worst = std::max(r.worst, (via_integral - direct).norm() / scale);
        ++r.samples;
      }
    }
    r.passed = r.worst <= r.tolerance;
    return r;
  }

  std::vector<Matrix> property_corpus() const {
    Rng rng(seed + 3);
    std::vector<Matrix> out;
    const int sizes[] = {3, 4, 5, 6};
    for (int rep = 0; rep < 2; ++rep) {
      for (int m : sizes) {
        out.push_back(corpus::invertible(rng, m));
        out.push_back(corpus::singular(rng, m));
        out.push_back(corpus::normal(rng, m));
        out.push_back(corpus::nearly_normal(rng, m));
        out.push_back(corpus::shift_truncation(rng, m));
      }
    }
    return out;
  }

  CheckResult homogeneity() const {
    CheckResult r{"Prop4.3(1)-homogeneity", "Delta(a T) = a Delta(T) for random complex a",
                  true, 0.0, 1e-9, 0};
    Rng rng(seed + 4);
    for (const Matrix& t : property_corpus()) {
      const Complex alpha = rng.complex_normal();
      const double scale = std::abs(alpha) * norm_floor(t.norm());
      for (const OperatorMean& mean : builtin_means()) {
        Matrix lhs = aluthge_transform(alpha * t, mean).delta;
        Matrix rhs = alpha * aluthge_transform(t, mean).delta;
        r.worst = std::max(r.worst, (lhs - rhs).norm() / norm_floor(scale));
        ++r.samples;
      }
    }
    r.passed = r.worst <= r.tolerance;
    return r;
  }

  CheckResult unitary_covariance() const {
    CheckResult r{"Prop4.3(2)-unitary-covariance", "Delta(V*TV) = V* Delta(T) V for unitary V",
                  true, 0.0, 1e-9, 0};
    Rng rng(seed + 5);
    for (const Matrix& t : property_corpus()) {
      Matrix v = corpus::unitary(rng, static_cast<int>(t.rows()));
      const double scale = norm_floor(t.norm());
      for (const OperatorMean& mean : builtin_means()) {
        Matrix lhs = aluthge_transform(v.adjoint() * t * v, mean).delta;
        Matrix rhs = v.adjoint() * aluthge_transform(t, mean).delta * v;
        r.worst = std::max(r.worst, (lhs - rhs).norm() / scale);
        ++r.samples;
      }
    }
    r.passed = r.worst <= r.tolerance;
    return r;
  }

  CheckResult shift_identity() const {
    CheckResult r{"Prop4.3(3)-shift-identity",
                  "Delta(T) - a I = Phi(U - a |T|^{-1}) at sampled a, invertible corpus",
                  true, 0.0, 1e-9, 0};
    Rng rng(seed + 6);
    for (const Matrix& t : property_corpus()) {
      Eigen::JacobiSVD<Matrix> svd(t);
      const auto& sv = svd.singularValues();
      if (sv(sv.size() - 1) < 1e-8 * sv(0)) continue; // identity needs |T|^{-1}
      const Complex alpha = rng.complex_normal();
      for (const OperatorMean& mean : builtin_means()) {
        const double residual = shift_identity_check(t, mean, alpha);
        r.worst = std::max(r.worst, residual / (spectral_norm(t) + std::abs(alpha)));
        ++r.samples;
      }
    }
    r.passed = r.worst <= r.tolerance;
    return r;
  }

  CheckResult norm_contraction() const {
    CheckResult r{"Prop4.3(4)-norm-contraction", "||Delta(T)|| <= ||T|| in the spectral norm",
                  true, 0.0, 1e-9, 0};
    for (const Matrix& t : property_corpus()) {
      const double base = spectral_norm(t);
      for (const OperatorMean& mean : builtin_means()) {
        const double transformed = spectral_norm(aluthge_transform(t, mean).delta);
        r.worst = std::max(r.worst, (transformed - base) / norm_floor(base));
        ++r.samples;
      }
    }
    r.passed = r.worst <= r.tolerance;
    return r;
  }

  CheckResult trace_preservation() const {
    CheckResult r{"Prop4.4-trace-preservation", "trace(Delta(T)) = trace(T)", true, 0.0, 1e-9, 0};
    for (const Matrix& t : property_corpus()) {
      const double scale = norm_floor(t.norm()) * static_cast<double>(t.rows());
      for (const OperatorMean& mean : builtin_means()) {
        const Complex diff = aluthge_transform(t, mean).delta.trace() - t.trace();
        r.worst = std::max(r.worst, std::abs(diff) / scale);
        ++r.samples;
      }
    }
    r.passed = r.worst <= r.tolerance;
    return r;
  }

  CheckResult fixed_point_normal() const {
    CheckResult r{"Thm2.6-fixed-point-normal",
                  "Delta(T) = T on the normal corpus, every weight-(0,1) mean",
                  true, 0.0, 1e-8, 0};
    Rng rng(seed + 7);
    for (int i = 0; i < 30; ++i) {
      Matrix t = corpus::normal(rng, 3 + i % 4);
      const double scale = norm_floor(t.norm());
      for (const OperatorMean& mean : builtin_means()) {
        Matrix delta = aluthge_transform(t, mean).delta;
        r.worst = std::max(r.worst, (delta - t).norm() / scale);
        ++r.samples;
      }
    }
    r.passed = r.worst <= r.tolerance;
    return r;
  }

  CheckResult nonnormal_moves() const {
    CheckResult r{"Thm2.6-nonnormal-moves",
                  "Delta(T) != T on 50 non-normal invertible matrices (worst = smallest "
                  "displacement; must stay above tolerance)",
                  true, std::numeric_limits<double>::infinity(), 1e-6, 0};
    Rng rng(seed + 8);
    int count = 0;
    while (count < 50) {
      Matrix t = corpus::invertible(rng, 3 + count % 4);
      const double scale = norm_floor(t.norm());
      if (normality_defect(t) <= 1e-3 * scale * scale) continue; // visibly non-normal
      ++count;
      for (const OperatorMean& mean : builtin_means()) {
        Matrix delta = aluthge_transform(t, mean).delta;
        r.worst = std::min(r.worst, (delta - t).norm() / scale);
        ++r.samples;
      }
    }
    r.passed = r.worst > r.tolerance;
    return r;
  }

  std::vector<Matrix> iteration_corpus() const {
    // Invertible 5x5 with the unitary factor's phases pairwise separated by
    // >= 0.35 rad (or matching within 1e-8), so 2000 steps reach tol 1e-10;
    // the contraction rate per distinct-phase pair is cos(gap/2).
    Rng rng(seed + 9);
    std::vector<Matrix> out;
    while (out.size() < 50) {
      Matrix t = corpus::invertible(rng, 5);
      if (phase_gap_ok(t, 0.35, 1e-8)) out.push_back(std::move(t));
    }
    return out;
  }

  void iteration_checks(std::vector<CheckResult>& out) const {
    CheckResult conv{"Thm5.1-iteration-convergence",
                     "arithmetic iteration of invertible matrices converges (maxSteps 2000, tol "
                     "1e-10); worst = largest final step delta",
                     true, 0.0, 1e-10, 0};
    CheckResult defect{"Thm5.1-limit-normality", "normality defect of the limit", true, 0.0, 1e-6,
                       0};
    CheckResult tr{"Thm5.1-limit-trace", "trace preserved through the limit", true, 0.0, 1e-8, 0};
    CheckResult pred{"Thm5.1-limit-prediction",
                     "limit matches the phase-clustered prediction from the polar factors", true,
                     0.0, 1e-5, 0};
    const OperatorMean arithmetic = OperatorMean::arithmetic(0.5);
    for (const Matrix& t : iteration_corpus()) {
      const double scale = norm_floor(t.norm());
      IterationTrace trace = iterate(t, arithmetic, 2000, 1e-10);
      ++conv.samples;
      ++defect.samples;
      ++tr.samples;
      ++pred.samples;
      if (!trace.converged) {
        conv.passed = false;
        conv.worst = std::max(conv.worst, trace.step_deltas.back() / scale);
        continue;
      }
      conv.worst = std::max(conv.worst, trace.step_deltas.back() / scale);
      const Matrix& limit = *trace.limit;
      defect.worst = std::max(defect.worst, normality_defect(limit) / (scale * scale));
      tr.worst = std::max(tr.worst,
                          std::abs(limit.trace() - t.trace()) / (scale * static_cast<double>(t.rows())));
      Matrix predicted = predict_arithmetic_limit(t);
      pred.worst = std::max(pred.worst, (limit - predicted).norm() / scale);
    }
    conv.passed = conv.passed && conv.worst <= conv.tolerance;
    defect.passed = defect.worst <= defect.tolerance;
    tr.passed = tr.worst <= tr.tolerance;
    pred.passed = pred.worst <= pred.tolerance;
    out.push_back(conv);
    out.push_back(defect);
    out.push_back(tr);
    out.push_back(pred);
  }

  CheckResult binomial_closed_form() const {
    CheckResult r{"Thm5.3-binomial-closed-form",
                  "U 2^-n sum C(n,k) (U*)^k |T| U^k equals the n-th iterate, n <= 10, 20 "
                  "invertible matrices",
                  true, 0.0, 1e-8, 0};
    Rng rng(seed + 10);
    const OperatorMean arithmetic = OperatorMean::arithmetic(0.5);
    for (int i = 0; i < 20; ++i) {
      Matrix t = corpus::invertible(rng, 4 + i % 2);
      const double scale = norm_floor(t.norm());
      Matrix current = t;
      for (int n = 0; n <= 10; ++n) {
        Matrix closed = arithmetic_iterate_closed_form(t, n);
        r.worst = std::max(r.worst, (closed - current).norm() / scale);
        ++r.samples;
        current = aluthge_transform(current, arithmetic).delta;
      }
    }
    r.passed = r.worst <= r.tolerance;
    return r;
  }

  void shift_checks(std::vector<CheckResult>& out) const {
    CheckResult sw{"Prop5.6-switch-points",
                   "first weights of both recursions within 2^-k of alternating targets at each "
                   "switch point (a=1, b=2, lambda=1/2, K=6); worst = max |first - target| / 2^-k",
                   true, 0.0, 1.0, 0};
    CheckResult agree{"Lem5.4-first-weight-closed-form",
                      "binomial closed forms match the stepwise recursion along the oscillating "
                      "sequence (relative)",
                      true, 0.0, 1e-12, 0};
    CheckResult sand{"Thm5.2-sandwich",
                     "harmonic <= geometric-recursion <= arithmetic first weights at every level; "
                     "worst = largest violation",
                     true, 0.0, 1e-12, 0};

    OscillatingWeights osc = build_oscillating_weights(1.0, 2.0, 6, 0.5);
    const long n_max = osc.switch_points.back();

    // Stepwise recursions for both closed-form kinds.
    WeightSequence arith{osc.weights, 0, "arithmetic"};
    WeightSequence harm{osc.weights, 0, "harmonic"};
    const OperatorMean mean_a = OperatorMean::arithmetic(0.5);
    const OperatorMean mean_h = OperatorMean::harmonic(0.5);
    std::vector<double> arith_first{arith.weights.front()};
    std::vector<double> harm_first{harm.weights.front()};
    for (long n = 1; n <= n_max; ++n) {
      arith = step_weights(arith, mean_a);
      harm = step_weights(harm, mean_h);
      arith_first.push_back(arith.weights.front());
      harm_first.push_back(harm.weights.front());
    }

    for (size_t k = 0; k < osc.switch_points.size(); ++k) {
      const long n = osc.switch_points[k];
      const double target = (k % 2 == 0) ? osc.b : osc.a;
      const double budget = std::ldexp(1.0, -static_cast<int>(k) - 1);
      const double da = std::abs(arith_first[static_cast<size_t>(n)] - target);
      const double dh = std::abs(harm_first[static_cast<size_t>(n)] - target);
      sw.worst = std::max(sw.worst, std::max(da, dh) / budget);
      ++sw.samples;
    }
    sw.passed = sw.worst < 1.0;

    for (long n = 0; n <= n_max; ++n) {
      const double ca =
          first_weight_closed_form(osc.weights, static_cast<int>(n), 0.5, FirstWeightKind::Arithmetic);
      const double ch =
          first_weight_closed_form(osc.weights, static_cast<int>(n), 0.5, FirstWeightKind::Harmonic);
      agree.worst = std::max(agree.worst,
                             std::abs(ca - arith_first[static_cast<size_t>(n)]) / std::abs(ca));
      agree.worst = std::max(agree.worst,
                             std::abs(ch - harm_first[static_cast<size_t>(n)]) / std::abs(ch));
      agree.samples += 2;
    }
    agree.passed = agree.worst <= agree.tolerance;

    SandwichTrace trace =
        sandwich_trace(osc.weights, OperatorMean::geometric(0.5), static_cast<int>(n_max));
    for (size_t k = 0; k < trace.gamma0.size(); ++k) {
      const double slack = 1e-12 * std::max(1.0, trace.upper[k]);
      sand.worst = std::max(sand.worst, trace.lower[k] - trace.gamma0[k]);
      sand.worst = std::max(sand.worst, trace.gamma0[k] - trace.upper[k] - slack);
      ++sand.samples;
    }
    sand.passed = sand.worst <= sand.tolerance;

    out.push_back(sw);
    out.push_back(agree);
    out.push_back(sand);
  }

  void numrange_checks(std::vector<CheckResult>& out) const {
    CheckResult nest{"Thm6.1-range-nesting",
                     "W(D_harm) within W(D_geom) within W(D_log) within W(D_arith) at 720 angles; "
                     "worst = max support excess / ||T||",
                     true, 0.0, 1e-7, 0};
    CheckResult base{"Sec6(i)-geometric-range-in-base",
                     "W(D_geom(T)) within W(T); worst = max support excess / ||T||", true, 0.0,
                     1e-7, 0};
    Rng rng(seed + 11);
    const std::vector<OperatorMean> chain = chain_means();
    for (int i = 0; i < 50; ++i) {
      const int m = 3 + i % 6;
      Matrix t = corpus::gaussian(rng, m);
      const double scale = norm_floor(spectral_norm(t));
      RangeReport report = range_of_transform_report(t, chain, 720, 1e-7 * scale);
      for (size_t a = 0; a + 1 < chain.size(); ++a) {
        nest.worst = std::max(nest.worst, report.pairwise[a][a + 1].max_violation / scale);
        ++nest.samples;
      }
      base.worst = std::max(base.worst, report.in_base[1].max_violation / scale);
      ++base.samples;
    }
    nest.passed = nest.worst <= nest.tolerance;
    base.passed = base.worst <= base.tolerance;
    out.push_back(nest);
    out.push_back(base);
  }

  void dominance_checks(std::vector<CheckResult>& out) const {
    CheckResult chain{"Sec6-dominance-chain",
                      "ratio matrices along harmonic-geometric-logarithmic-arithmetic stay PSD "
                      "over 100 random tuples; worst = -min eig / ||R||",
                      true, 0.0, 1e-10, 0};
    CheckResult refute{"Sec6-dominance-refutation",
                       "arithmetic over harmonic produces a negative eigenvalue (worst = most "
                       "negative min eig found; must fall below -1e-6)",
                       true, 0.0, 1e-6, 0};
    Rng rng(seed + 12);
    const std::vector<OperatorMean> means = chain_means();
    double most_negative = 0.0;
    for (int i = 0; i < 100; ++i) {
      const int len = 2 + static_cast<int>(rng.uniform() * 5.0); // 2..6
      Eigen::VectorXd s(len);
      for (int k = 0; k < len; ++k)
        s(k) = std::exp(std::log(0.1) + rng.uniform() * (std::log(10.0) - std::log(0.1)));
      for (size_t a = 0; a + 1 < means.size(); ++a) {
        Eigen::MatrixXd pf = perspective_matrix(means[a], s);
        Eigen::MatrixXd pg = perspective_matrix(means[a + 1], s);
        Eigen::MatrixXd ratio = pf.cwiseQuotient(pg);
        const double norm = ratio.norm();
        DominanceResult res = dominance_check(means[a], means[a + 1], s, 1e-10 * norm);
        if (!res.dominated) chain.passed = false;
        chain.worst = std::max(chain.worst, -res.min_eigenvalue / norm);
        ++chain.samples;
      }
      DominanceResult reversed = dominance_check(means[3], means[0], s, 1e-10);
      most_negative = std::min(most_negative, reversed.min_eigenvalue);
      ++refute.samples;
    }
    chain.passed = chain.passed && chain.worst <= chain.tolerance;
    refute.worst = most_negative;
    refute.passed = most_negative < -1e-6;
    out.push_back(chain);
    out.push_back(refute);
  }
};

} // namespace

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed) {
  Battery battery{seed};
  std::vector<CheckResult> out;

  const bool all = suite == "all";
  if (all || suite == "transform") {
    out.push_back(battery.geometric_closed_form());
    out.push_back(battery.arithmetic_closed_form());
    out.push_back(battery.quadrature("Thm4.2-quadrature-harmonic",
                                     {OperatorMean::harmonic(0.3), OperatorMean::harmonic(0.5)}));
    out.push_back(battery.quadrature("Thm4.2-quadrature-arithmetic",
                                     {OperatorMean::arithmetic(0.3), OperatorMean::arithmetic(0.5)}));
    out.push_back(battery.quadrature("Thm4.2-quadrature-geometric", {OperatorMean::geometric(0.5)}));
    out.push_back(battery.homogeneity());
    out.push_back(battery.unitary_covariance());
    out.push_back(battery.shift_identity());
    out.push_back(battery.norm_contraction());
    out.push_back(battery.trace_preservation());
    out.push_back(battery.fixed_point_normal());
    out.push_back(battery.nonnormal_moves());
  }
  if (all || suite == "dynamics") {
    battery.iteration_checks(out);
    out.push_back(battery.binomial_closed_form());
  }
  if (all || suite == "shift") {
    battery.shift_checks(out);
  }
  if (all || suite == "numrange") {
    battery.numrange_checks(out);
  }
  if (all || suite == "dominance") {
    battery.dominance_checks(out);
  }
  if (out.empty()) throw ConfigError("unknown verify suite '" + suite + "'");
  return out;
}

namespace {

std::vector<CheckResult> pick(const std::vector<CheckResult>& checks,
                              const std::vector<std::string>& tags) {
  std::vector<CheckResult> out;
  for (const std::string& tag : tags)
    for (const CheckResult& c : checks)
      if (c.tag == tag) out.push_back(c);
  return out;
}

} // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  struct CriterionSpec {
    std::string label;
    double runtime_limit;
    std::function<std::vector<CheckResult>(const Battery&)> run;
  };
  Battery battery{seed};

  const std::vector<CriterionSpec> criterion_defs = {
      {"closed-form agreement (geometric & arithmetic, mixed 6x6 corpus)", 10.0,
       [](const Battery& b) {
         return std::vector<CheckResult>{b.geometric_closed_form(), b.arithmetic_closed_form()};
       }},
      {"quadrature oracle matches the Hadamard form", 30.0,
       [](const Battery& b) {
         return std::vector<CheckResult>{
             b.quadrature("Thm4.2-quadrature-harmonic",
                          {OperatorMean::harmonic(0.3), OperatorMean::harmonic(0.5)}),
             b.quadrature("Thm4.2-quadrature-arithmetic",
                          {OperatorMean::arithmetic(0.3), OperatorMean::arithmetic(0.5)}),
             b.quadrature("Thm4.2-quadrature-geometric", {OperatorMean::geometric(0.5)})};
       }},
      {"structural properties (homogeneity, covariance, shift identity, norm, trace)", 0.0,
       [](const Battery& b) {
         return std::vector<CheckResult>{b.homogeneity(), b.unitary_covariance(),
                                         b.shift_identity(), b.norm_contraction(),
                                         b.trace_preservation()};
       }},
      {"fixed point iff normal", 0.0,
       [](const Battery& b) {
         return std::vector<CheckResult>{b.fixed_point_normal(), b.nonnormal_moves()};
       }},
      {"arithmetic iteration converges to a normal, trace-preserving, predicted limit", 120.0,
       [](const Battery& b) {
         std::vector<CheckResult> checks;
         b.iteration_checks(checks);
         return checks;
       }},
      {"binomial closed form equals the n-th iterate", 0.0,
       [](const Battery& b) { return std::vector<CheckResult>{b.binomial_closed_form()}; }},
      {"oscillating shift weights: switch points, closed forms, sandwich", 10.0,
       [](const Battery& b) {
         std::vector<CheckResult> checks;
         b.shift_checks(checks);
         return checks;
       }},
      {"numerical-range nesting along the mean chain", 120.0,
       [](const Battery& b) {
         std::vector<CheckResult> checks;
         b.numrange_checks(checks);
         return checks;
       }},
      {"dominance chain is PSD and the reversed pair refutes", 0.0,
       [](const Battery& b) {
         std::vector<CheckResult> checks;
         b.dominance_checks(checks);
         return checks;
       }},
  };

  std::vector<CriterionResult> out;
  int index = 1;
  for (const CriterionSpec& def : criterion_defs) {
    CriterionResult result;
    result.index = index++;
    result.label = def.label;
    result.runtime_limit = def.runtime_limit;
    const auto start = std::chrono::steady_clock::now();
    result.checks = def.run(battery);
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.passed = true;
    for (const CheckResult& c : result.checks) result.passed = result.passed && c.passed;
    if (def.runtime_limit > 0.0 && result.seconds > def.runtime_limit) result.passed = false;
    out.push_back(std::move(result));
  }
  return out;
}

nlohmann::json to_json(const std::vector<CheckResult>& checks, std::uint64_t seed) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["seed"] = seed;
  bool all_passed = true;
  nlohmann::json arr = nlohmann::json::array();
  for (const CheckResult& c : checks) {
    arr.push_back({{"tag", c.tag},
                   {"description", c.description},
                   {"passed", c.passed},
                   {"worst", c.worst},
                   {"tolerance", c.tolerance},
                   {"samples", c.samples}});
    all_passed = all_passed && c.passed;
  }
  j["checks"] = std::move(arr);
  j["all_passed"] = all_passed;
  return j;
}

nlohmann::json to_json(const std::vector<CriterionResult>& criteria, std::uint64_t seed) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["seed"] = seed;
  bool all_passed = true;
  nlohmann::json arr = nlohmann::json::array();
  for (const CriterionResult& c : criteria) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& chk : c.checks)
      checks.push_back({{"tag", chk.tag},
                        {"passed", chk.passed},
                        {"worst", chk.worst},
                        {"tolerance", chk.tolerance},
                        {"samples", chk.samples}});
    // `seconds` stays out of the report body so identical configurations
    // produce identical report files.
    arr.push_back({{"criterion", c.index},
                   {"label", c.label},
                   {"passed", c.passed},
                   {"within_runtime_limit",
                    c.runtime_limit <= 0.0 || c.seconds <= c.runtime_limit},
                   {"runtime_limit", c.runtime_limit},
                   {"checks", std::move(checks)}});
    all_passed = all_passed && c.passed;
  }
  j["criteria"] = std::move(arr);
  j["all_passed"] = all_passed;
  return j;
}

} // namespace aluthge::verify
