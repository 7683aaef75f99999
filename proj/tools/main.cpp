// aluthgelab: generalized Aluthge transformations of complex matrices with
// respect to Kubo-Ando operator means.
//
// Exit codes: 0 success, 1 I/O or numeric failure, 2 a mathematical property
// check failed (so CI can tell plumbing bugs from theorem violations).

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "aluthge/corpus.hpp"
#include "aluthge/dynamics.hpp"
#include "aluthge/matrix_io.hpp"
#include "aluthge/numrange.hpp"
#include "aluthge/shiftlab.hpp"
#include "aluthge/transform.hpp"
#include "aluthge/verify.hpp"

namespace {

using namespace aluthge;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitPropertyViolation = 2;

void write_json_report(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << j.dump(2) << '\n';
  if (!out) throw IoError("failed writing: " + path);
}

nlohmann::json complex_json(const Complex& z) { return {z.real(), z.imag()}; }

// ---------------------------------------------------------------------------

int run_transform(const std::string& matrix_path, const std::string& mean_descriptor,
                  const std::string& oracle, const std::string& out_path) {
  Matrix t = read_matrix(matrix_path);
  OperatorMean mean = parse_mean(mean_descriptor);
  TransformResult result = aluthge_transform(t, mean);
  const double scale = norm_floor(t.norm());

  nlohmann::json report;
  report["schema_version"] = 1;
  report["mean"] = mean.descriptor();
  report["matrix"] = matrix_path;
  report["delta"] = matrix_to_json(result.delta);
  report["basis_conditioning"] = result.basis_conditioning;

  nlohmann::json residuals;
  if (oracle == "closed" || oracle == "both") {
    if (mean.kind() == MeanKind::Geometric)
      residuals["closed_form"] =
          (result.delta - aluthge_closed_form(t, ClosedFormKind::Geometric, mean.weight())).norm() /
          scale;
    else if (mean.kind() == MeanKind::Arithmetic)
      residuals["closed_form"] =
          (result.delta - aluthge_closed_form(t, ClosedFormKind::Arithmetic, mean.weight())).norm() /
          scale;
  }
  if (oracle == "quadrature" || oracle == "both")
    residuals["quadrature"] = (result.delta - aluthge_quadrature_oracle(t, mean)).norm() / scale;
  report["residuals"] = residuals;

  // property check report (tags follow the statements they verify)
  bool ok = true;
  nlohmann::json properties = nlohmann::json::array();
  auto add_property = [&](const std::string& tag, double value, double tol) {
    properties.push_back({{"tag", tag}, {"value", value}, {"tolerance", tol}, {"passed", value <= tol}});
    ok = ok && value <= tol;
  };
  add_property("Prop4.3(4)-norm-contraction",
               (spectral_norm(result.delta) - spectral_norm(t)) / norm_floor(spectral_norm(t)),
               1e-9);
  add_property("Prop4.4-trace-preservation",
               std::abs(result.delta.trace() - t.trace()) / (scale * t.rows()), 1e-9);
  for (const auto& [key, value] : residuals.items())
    add_property(key == "quadrature" ? "Thm4.2-quadrature-oracle" : "Example1-closed-form",
                 value.get<double>(), key == "quadrature" ? 1e-5 : 1e-9);
  report["properties"] = properties;
  report["all_passed"] = ok;

  if (!out_path.empty())
    write_json_report(out_path, report);
  else
    std::cout << report.dump(2) << '\n';
  return ok ? kExitOk : kExitPropertyViolation;
}

int run_iterate(const std::string& matrix_path, const std::string& mean_descriptor, int max_steps,
                double tol, const std::string& trace_path, const std::string& out_path) {
  Matrix t = read_matrix(matrix_path);
  OperatorMean mean = parse_mean(mean_descriptor);
  IterationTrace trace = iterate(t, mean, max_steps, tol);

  if (!trace_path.empty()) {
    std::ofstream csv(trace_path);
    if (!csv) throw IoError("cannot open for writing: " + trace_path);
    csv << "step,stepDelta,defect,traceRe,traceIm\n";
    csv.precision(17);
    for (size_t k = 0; k < trace.step_deltas.size(); ++k)
      csv << (k + 1) << ',' << trace.step_deltas[k] << ',' << trace.defects[k] << ','
          << trace.traces[k].real() << ',' << trace.traces[k].imag() << '\n';
  }

  nlohmann::json report;
  report["schema_version"] = 1;
  report["mean"] = mean.descriptor();
  report["steps"] = trace.steps;
  report["converged"] = trace.converged;
  report["rate_estimate"] = trace.rate_estimate;
  report["final_defect"] = trace.defects.empty() ? normality_defect(t) : trace.defects.back();
  report["trace_initial"] = complex_json(t.trace());
  report["trace_final"] = complex_json(trace.last.trace());
  report["last"] = matrix_to_json(trace.last);
  if (trace.limit) report["limit"] = matrix_to_json(*trace.limit);

  if (!out_path.empty())
    write_json_report(out_path, report);
  else
    std::cout << report.dump(2) << '\n';
  return kExitOk;
}

int run_shift_sim(double a, double b, double lambda, int levels,
                  const std::string& mean_descriptor, const std::string& out_path) {
  OperatorMean mean = parse_mean(mean_descriptor);
  OscillatingWeights osc = build_oscillating_weights(a, b, levels, lambda);
  const int n_max = static_cast<int>(osc.switch_points.back());
  SandwichTrace trace = sandwich_trace(osc.weights, mean, n_max);

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw IoError("cannot open for writing: " + out_path);
    out = &file;
  }
  (*out) << "n,gamma0,lower,upper,blockTarget\n";
  out->precision(17);
  size_t block = 0;
  bool violated = false;
  for (int n = 0; n <= n_max; ++n) {
    while (block < osc.switch_points.size() && n > osc.switch_points[block]) ++block;
    const double target = (block % 2 == 0) ? b : a;
    (*out) << n << ',' << trace.gamma0[static_cast<size_t>(n)] << ','
           << trace.lower[static_cast<size_t>(n)] << ',' << trace.upper[static_cast<size_t>(n)]
           << ',' << target << '\n';
    const double slack = 1e-12 * std::max(1.0, trace.upper[static_cast<size_t>(n)]);
    if (trace.gamma0[static_cast<size_t>(n)] < trace.lower[static_cast<size_t>(n)] - slack ||
        trace.gamma0[static_cast<size_t>(n)] > trace.upper[static_cast<size_t>(n)] + slack)
      violated = true;
  }
  return violated ? kExitPropertyViolation : kExitOk;
}

int run_numrange(const std::string& matrix_path, const std::vector<std::string>& mean_descriptors,
                 int angles, const std::string& out_path) {
  Matrix t = read_matrix(matrix_path);
  std::vector<OperatorMean> means;
  for (const std::string& d : mean_descriptors) means.push_back(parse_mean(d));
  RangeReport report = range_of_transform_report(t, means, angles);

  nlohmann::json j;
  j["schema_version"] = 1;
  j["angles"] = angles;
  nlohmann::json per_mean = nlohmann::json::array();
  for (size_t i = 0; i < report.labels.size(); ++i) {
    nlohmann::json entry;
    entry["mean"] = report.labels[i];
    nlohmann::json points = nlohmann::json::array();
    for (const Complex& p : report.boundaries[i].points) points.push_back(complex_json(p));
    entry["boundary"] = std::move(points);
    entry["support_values"] = report.boundaries[i].support_values;
    entry["included_in_base"] = report.in_base[i].included;
    entry["base_violation"] = report.in_base[i].max_violation;
    per_mean.push_back(std::move(entry));
  }
  j["means"] = std::move(per_mean);

  nlohmann::json base_points = nlohmann::json::array();
  for (const Complex& p : report.base.points) base_points.push_back(complex_json(p));
  j["base_boundary"] = std::move(base_points);

  nlohmann::json inclusion = nlohmann::json::array();
  for (size_t i = 0; i < report.labels.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (size_t k = 0; k < report.labels.size(); ++k)
      row.push_back({{"included", report.pairwise[i][k].included},
                     {"max_violation", report.pairwise[i][k].max_violation}});
    inclusion.push_back(std::move(row));
  }
  j["inclusion_matrix"] = std::move(inclusion);

  if (!out_path.empty())
    write_json_report(out_path, j);
  else
    std::cout << j.dump(2) << '\n';
  return kExitOk;
}

int run_dominance(const std::string& mean_f, const std::string& mean_g,
                  const std::vector<double>& tuple, int samples, int max_len, std::uint64_t seed,
                  double tol, const std::string& out_path) {
  OperatorMean f = parse_mean(mean_f);
  OperatorMean g = parse_mean(mean_g);

  nlohmann::json j;
  j["schema_version"] = 1;
  j["mean_f"] = f.descriptor();
  j["mean_g"] = g.descriptor();
  nlohmann::json results = nlohmann::json::array();
  bool all_dominated = true;

  auto check_tuple = [&](const Eigen::VectorXd& s) {
    DominanceResult res = dominance_check(f, g, s, tol);
    nlohmann::json entry;
    entry["tuple"] = std::vector<double>(s.data(), s.data() + s.size());
    entry["dominated"] = res.dominated;
    entry["min_eigenvalue"] = res.min_eigenvalue;
    results.push_back(std::move(entry));
    all_dominated = all_dominated && res.dominated;
  };

  if (!tuple.empty()) {
    Eigen::VectorXd s = Eigen::Map<const Eigen::VectorXd>(tuple.data(), tuple.size());
    check_tuple(s);
  } else {
    corpus::Rng rng(seed);
    for (int i = 0; i < samples; ++i) {
      const int len = 2 + static_cast<int>(rng.uniform() * (max_len - 1));
      Eigen::VectorXd s(len);
      for (int k = 0; k < len; ++k)
        s(k) = std::exp(std::log(0.1) + rng.uniform() * (std::log(10.0) - std::log(0.1)));
      check_tuple(s);
    }
  }
  j["results"] = std::move(results);
  j["all_dominated"] = all_dominated;

  if (!out_path.empty())
    write_json_report(out_path, j);
  else
    std::cout << j.dump(2) << '\n';
  return kExitOk; // a refuted pair is a finding, not a failure
}

int run_verify(const std::string& suite, std::uint64_t seed, const std::string& out_path) {
  const bool acceptance = suite == "acceptance";
  nlohmann::json report;
  bool all_passed = true;

  if (acceptance) {
    auto criteria = verify::run_acceptance(seed);
    report = verify::to_json(criteria, seed);
    for (const auto& c : criteria) {
      std::cout << (c.passed ? "PASS" : "FAIL") << " criterion " << c.index << ": " << c.label
                << '\n';
      all_passed = all_passed && c.passed;
    }
  } else {
    auto checks = verify::run_suite(suite, seed);
    report = verify::to_json(checks, seed);
    for (const auto& c : checks) {
      std::cout << (c.passed ? "pass" : "FAIL") << "  " << c.tag << "  worst " << c.worst
                << "  tol " << c.tolerance << '\n';
      all_passed = all_passed && c.passed;
    }
  }
  if (!out_path.empty()) write_json_report(out_path, report);
  std::cout << (all_passed ? "all checks passed" : "property violations present") << '\n';
  return all_passed ? kExitOk : kExitPropertyViolation;
}

int run_generate(const std::string& kind_name, int m, int count, std::uint64_t seed,
                 const std::string& out_dir) {
  if (m < 2) throw ConfigError("generate: m must be >= 2");
  if (count < 1) throw ConfigError("generate: count must be >= 1");
  corpus::Kind kind = corpus::parse_kind(kind_name);
  std::filesystem::create_directories(out_dir);
  corpus::Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    Matrix t = corpus::make(kind, rng, m);
    char name[64];
    std::snprintf(name, sizeof(name), "%s_%04d.json", kind_name.c_str(), i);
    write_matrix((std::filesystem::path(out_dir) / name).string(), t);
  }
  std::cout << "wrote " << count << " " << kind_name << " matrices to " << out_dir << '\n';
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Aluthge transformations with respect to operator means"};
  app.require_subcommand(1);

  // transform
  std::string matrix_path, mean_descriptor = "geometric:0.5", oracle = "closed", out_path;
  auto* transform_cmd = app.add_subcommand("transform", "apply the transform to a matrix file");
  transform_cmd->add_option("--matrix", matrix_path, "matrix file (.json or .csv)")->required();
  transform_cmd->add_option("--mean", mean_descriptor, "mean descriptor, e.g. geometric:0.5");
  transform_cmd->add_option("--oracle", oracle, "closed | quadrature | both | none")
      ->check(CLI::IsMember({"closed", "quadrature", "both", "none"}));
  transform_cmd->add_option("--out", out_path, "write the JSON report here");

  // iterate
  std::string it_matrix, it_mean = "arithmetic:0.5", it_trace, it_out;
  int max_steps = 2000;
  double tol = 1e-10;
  auto* iterate_cmd = app.add_subcommand("iterate", "iterate the transform to its limit");
  iterate_cmd->add_option("--matrix", it_matrix, "matrix file")->required();
  iterate_cmd->add_option("--mean", it_mean, "mean descriptor");
  iterate_cmd->add_option("--max-steps", max_steps, "step cap");
  iterate_cmd->add_option("--tol", tol, "relative step-delta tolerance");
  iterate_cmd->add_option("--emit-trace", it_trace, "CSV trace: step,stepDelta,defect,traceRe,traceIm");
  iterate_cmd->add_option("--out", it_out, "write the JSON report here");

  // shift-sim
  double a = 1.0, b = 2.0, lambda = 0.5;
  int levels = 4;
  std::string shift_mean = "geometric:0.5", shift_out;
  auto* shift_cmd = app.add_subcommand("shift-sim", "oscillating weighted-shift construction");
  shift_cmd->add_option("--a", a, "first block value");
  shift_cmd->add_option("--b", b, "second block value");
  shift_cmd->add_option("--lambda", lambda, "weight of the envelope means");
  shift_cmd->add_option("--levels", levels, "number of switch points");
  shift_cmd->add_option("--mean", shift_mean, "mean driving the middle recursion");
  shift_cmd->add_option("--out", shift_out, "CSV output: n,gamma0,lower,upper,blockTarget");

  // numrange
  std::string nr_matrix, nr_out;
  std::vector<std::string> nr_means = {"harmonic:0.5", "geometric:0.5", "logarithmic",
                                       "arithmetic:0.5"};
  int angles = 720;
  auto* numrange_cmd = app.add_subcommand("numrange", "numerical ranges of transformed matrices");
  numrange_cmd->add_option("--matrix", nr_matrix, "matrix file")->required();
  numrange_cmd->add_option("--means", nr_means, "mean descriptors")->delimiter(',');
  numrange_cmd->add_option("--angles", angles, "support-function angles");
  numrange_cmd->add_option("--out", nr_out, "write the JSON report here");

  // dominance
  std::string dom_f = "harmonic:0.5", dom_g = "arithmetic:0.5", dom_out;
  std::vector<double> dom_tuple;
  int dom_samples = 100, dom_max_len = 6;
  std::uint64_t dom_seed = 42;
  double dom_tol = 1e-10;
  auto* dominance_cmd = app.add_subcommand("dominance", "PSD dominance certificates between means");
  dominance_cmd->add_option("--mean-f", dom_f, "candidate smaller mean");
  dominance_cmd->add_option("--mean-g", dom_g, "candidate larger mean");
  dominance_cmd->add_option("--tuple", dom_tuple, "explicit positive tuple")->delimiter(',');
  dominance_cmd->add_option("--samples", dom_samples, "random tuples when none given");
  dominance_cmd->add_option("--max-len", dom_max_len, "max tuple length");
  dominance_cmd->add_option("--seed", dom_seed, "random seed");
  dominance_cmd->add_option("--tol", dom_tol, "PSD tolerance");
  dominance_cmd->add_option("--out", dom_out, "write the JSON report here");

  // verify
  std::string suite = "all", verify_out;
  std::uint64_t verify_seed = 42;
  auto* verify_cmd = app.add_subcommand("verify", "run the property battery");
  verify_cmd->add_option("--suite", suite,
                         "all | transform | dynamics | shift | numrange | dominance | acceptance");
  verify_cmd->add_option("--seed", verify_seed, "corpus seed");
  verify_cmd->add_option("--out", verify_out, "write the JSON report here");

  // gen
  std::string gen_kind = "invertible", gen_dir = ".";
  int gen_m = 6, gen_count = 10;
  std::uint64_t gen_seed = 42;
  auto* gen_cmd = app.add_subcommand("gen", "generate a seeded matrix corpus");
  gen_cmd->add_option("--kind", gen_kind,
                      "invertible | singular | normal | nearly-normal | shift-truncation");
  gen_cmd->add_option("--m", gen_m, "matrix dimension");
  gen_cmd->add_option("--count", gen_count, "how many matrices");
  gen_cmd->add_option("--seed", gen_seed, "random seed");
  gen_cmd->add_option("--out-dir", gen_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (transform_cmd->parsed()) return run_transform(matrix_path, mean_descriptor, oracle, out_path);
    if (iterate_cmd->parsed()) return run_iterate(it_matrix, it_mean, max_steps, tol, it_trace, it_out);
    if (shift_cmd->parsed()) return run_shift_sim(a, b, lambda, levels, shift_mean, shift_out);
    if (numrange_cmd->parsed()) return run_numrange(nr_matrix, nr_means, angles, nr_out);
    if (dominance_cmd->parsed())
      return run_dominance(dom_f, dom_g, dom_tuple, dom_samples, dom_max_len, dom_seed, dom_tol,
                           dom_out);
    if (verify_cmd->parsed()) return run_verify(suite, verify_seed, verify_out);
    if (gen_cmd->parsed()) return run_generate(gen_kind, gen_m, gen_count, gen_seed, gen_dir);
  } catch (const aluthge::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
