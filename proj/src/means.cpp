#include "aluthge/means.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "aluthge/quadrature.hpp"

namespace aluthge {

namespace {

constexpr double kMassTol = 1e-10;

void check_weight(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw InvalidWeight("mean weight must lie in [0,1]");
}

std::string format_weight(double lambda) {
  std::ostringstream os;
  os << lambda;
  return os.str();
}

// Stable logarithmic mean: (s-t)/(ln s - ln t) with a series around the
// midpoint when s and t nearly coincide (the direct formula cancels there).
double logarithmic_mean(double s, double t) {
  if (s == t) return s;
  const double scale = std::max(s, t);
  if (std::abs(s - t) < 1e-8 * scale) {
    const double m = 0.5 * (s + t);
    const double u = (s - t) / (s + t);
    const double u2 = u * u;
    return m * (1.0 - u2 / 3.0 - 4.0 * u2 * u2 / 45.0);
  }
  return (s - t) / std::log(s / t);
}

} // namespace

// ---------------------------------------------------------------------------
// RepresentingMeasure

double RepresentingMeasure::total_mass() const {
  double total = 0.0;
  for (const Atom& a : atoms) total += a.mass;
  for (const Atom& a : density_nodes) total += a.mass;
  return total;
}

void RepresentingMeasure::validate() const {
  if (atoms.empty() && density_nodes.empty())
    throw InvalidMeasure("measure has no atoms and no density nodes");
  auto check = [](const Atom& a) {
    if (!(a.mass > 0.0)) throw InvalidMeasure("measure masses must be positive");
    if (!(a.location >= 0.0 && a.location <= 1.0))
      throw InvalidMeasure("measure locations must lie in [0,1]");
  };
  for (const Atom& a : atoms) check(a);
  for (const Atom& a : density_nodes) check(a);
  if (std::abs(total_mass() - 1.0) > kMassTol)
    throw InvalidMeasure("measure total mass must be 1");
}

double RepresentingMeasure::integrate(const std::function<double(double)>& g) const {
  double acc = 0.0;
  for (const Atom& a : atoms) acc += a.mass * g(a.location);
  for (const Atom& a : density_nodes) acc += a.mass * g(a.location);
  return acc;
}

double RepresentingMeasure::mass_at_zero() const {
  double acc = 0.0;
  for (const Atom& a : atoms)
    if (a.location == 0.0) acc += a.mass;
  for (const Atom& a : density_nodes)
    if (a.location == 0.0) acc += a.mass;
  return acc;
}

double RepresentingMeasure::mass_at_one() const {
  double acc = 0.0;
  for (const Atom& a : atoms)
    if (a.location == 1.0) acc += a.mass;
  for (const Atom& a : density_nodes)
    if (a.location == 1.0) acc += a.mass;
  return acc;
}

// ---------------------------------------------------------------------------
// OperatorMean factories

OperatorMean OperatorMean::arithmetic(double weight) {
  check_weight(weight);
  OperatorMean m;
  m.kind_ = MeanKind::Arithmetic;
  m.name_ = "arithmetic";
  m.weight_ = weight;
  m.f_limit0_ = 1.0 - weight;
  m.slope_inf_ = weight;
  return m;
}

OperatorMean OperatorMean::geometric(double weight) {
  check_weight(weight);
  OperatorMean m;
  m.kind_ = MeanKind::Geometric;
  m.name_ = "geometric";
  m.weight_ = weight;
  m.f_limit0_ = weight > 0.0 ? 0.0 : 1.0;
  m.slope_inf_ = weight < 1.0 ? 0.0 : 1.0;
  return m;
}

OperatorMean OperatorMean::harmonic(double weight) {
  check_weight(weight);
  OperatorMean m;
  m.kind_ = MeanKind::Harmonic;
  m.name_ = "harmonic";
  m.weight_ = weight;
  m.f_limit0_ = weight > 0.0 ? 0.0 : 1.0;
  m.slope_inf_ = weight < 1.0 ? 0.0 : 1.0;
  return m;
}

OperatorMean OperatorMean::power(double weight, double exponent) {
  check_weight(weight);
  if (!(exponent >= -1.0 && exponent <= 1.0))
    throw InvalidExponent("power mean exponent must lie in [-1,1]");
  if (std::abs(exponent) < 1e-12) return geometric(weight);
  if (exponent == 1.0) return arithmetic(weight);
  if (exponent == -1.0) return harmonic(weight);

  OperatorMean m;
  m.kind_ = MeanKind::Power;
  m.name_ = "power";
  m.weight_ = weight;
  m.power_exponent_ = exponent;
  if (weight == 0.0) {
    m.f_limit0_ = 1.0;
    m.slope_inf_ = 0.0;
  } else if (weight == 1.0) {
    m.f_limit0_ = 0.0;
    m.slope_inf_ = 1.0;
  } else if (exponent > 0.0) {
    m.f_limit0_ = std::pow(1.0 - weight, 1.0 / exponent);
    m.slope_inf_ = std::pow(weight, 1.0 / exponent);
  } else {
    m.f_limit0_ = 0.0;
    m.slope_inf_ = 0.0;
  }
  return m;
}

OperatorMean OperatorMean::logarithmic() {
  OperatorMean m;
  m.kind_ = MeanKind::Logarithmic;
  m.name_ = "logarithmic";
  m.weight_ = 0.5;
  m.f_limit0_ = 0.0;
  m.slope_inf_ = 0.0;
  return m;
}

OperatorMean OperatorMean::from_measure(RepresentingMeasure mu, std::string name) {
  mu.validate();
  OperatorMean m;
  m.kind_ = MeanKind::FromMeasure;
  m.name_ = std::move(name);
  m.f_limit0_ = mu.mass_at_zero();
  m.slope_inf_ = mu.mass_at_one();
  // weight = f'(1) = \int u dmu(u)
  m.weight_ = mu.integrate([](double u) { return u; });
  m.measure_ = std::move(mu);
  return m;
}

std::string OperatorMean::descriptor() const {
  switch (kind_) {
    case MeanKind::Arithmetic: return "arithmetic:" + format_weight(weight_);
    case MeanKind::Geometric: return "geometric:" + format_weight(weight_);
    case MeanKind::Harmonic: return "harmonic:" + format_weight(weight_);
    case MeanKind::Power:
      return "power:" + format_weight(weight_) + ":t=" + format_weight(power_exponent_);
    case MeanKind::Logarithmic: return "logarithmic";
    case MeanKind::FromMeasure: return "measure:" + name_;
  }
  return name_;
}

// ---------------------------------------------------------------------------
// Evaluation

double OperatorMean::f(double x) const {
  if (!(x > 0.0)) throw Error("representing function requires x > 0");
  const double lam = weight_;
  switch (kind_) {
    case MeanKind::Arithmetic:
      return 1.0 - lam + lam * x;
    case MeanKind::Geometric:
      return std::pow(x, lam);
    case MeanKind::Harmonic:
      return 1.0 / (1.0 - lam + lam / x);
    case MeanKind::Power:
      return std::pow(1.0 - lam + lam * std::pow(x, power_exponent_), 1.0 / power_exponent_);
    case MeanKind::Logarithmic:
      return logarithmic_mean(1.0, x);
    case MeanKind::FromMeasure:
      return measure_->integrate([x](double u) { return x / (x * (1.0 - u) + u); });
  }
  throw Error("unreachable mean kind");
}

double OperatorMean::perspective(double s, double t) const {
  if (!(s >= 0.0) || !(t >= 0.0))
    throw Error("perspective requires s >= 0 and t >= 0");
  if (s == 0.0 && t == 0.0) return 0.0;
  if (t == 0.0) return f_limit0_ * s;
  if (s == 0.0) return slope_inf_ * t;

  const double lam = weight_;
  switch (kind_) {
    case MeanKind::Arithmetic:
      return (1.0 - lam) * s + lam * t;
    case MeanKind::Geometric:
      return std::exp((1.0 - lam) * std::log(s) + lam * std::log(t));
    case MeanKind::Harmonic:
      return 1.0 / ((1.0 - lam) / s + lam / t);
    case MeanKind::Power: {
      const double p = power_exponent_;
      return std::pow((1.0 - lam) * std::pow(s, p) + lam * std::pow(t, p), 1.0 / p);
    }
    case MeanKind::Logarithmic:
      return logarithmic_mean(s, t);
    case MeanKind::FromMeasure:
      return measure_->integrate(
          [s, t](double u) { return 1.0 / ((1.0 - u) / s + u / t); });
  }
  throw Error("unreachable mean kind");
}

// ---------------------------------------------------------------------------
// Measures

bool OperatorMean::has_measure() const {
  switch (kind_) {
    case MeanKind::Arithmetic:
    case MeanKind::Harmonic:
    case MeanKind::Logarithmic:
    case MeanKind::FromMeasure:
      return true;
    case MeanKind::Geometric:
      return weight_ == 0.0 || weight_ == 0.5 || weight_ == 1.0;
    case MeanKind::Power:
      return false;
  }
  return false;
}

RepresentingMeasure OperatorMean::measure(int density_nodes) const {
  if (density_nodes < 2) throw InvalidMeasure("need at least 2 density nodes");
  RepresentingMeasure mu;
  switch (kind_) {
    case MeanKind::Arithmetic:
      if (weight_ < 1.0) mu.atoms.push_back({0.0, 1.0 - weight_});
      if (weight_ > 0.0) mu.atoms.push_back({1.0, weight_});
      return mu;
    case MeanKind::Harmonic:
      mu.atoms.push_back({weight_, 1.0});
      return mu;
    case MeanKind::Geometric: {
      if (weight_ == 0.0) {
        mu.atoms.push_back({0.0, 1.0});
        return mu;
      }
      if (weight_ == 1.0) {
        mu.atoms.push_back({1.0, 1.0});
        return mu;
      }
      if (weight_ != 0.5)
        throw MeasureMissing("geometric measure available only for weight 1/2");
      // Arcsine density 1/(pi sqrt(u(1-u))); the substitution u = sin^2(pi v/2)
      // turns it into the uniform measure dv on (0,1), removing the endpoint
      // singularities.
      QuadratureRule rule = gauss_legendre(density_nodes, 0.0, 1.0);
      for (int q = 0; q < density_nodes; ++q) {
        const double sn = std::sin(0.5 * M_PI * rule.nodes[q]);
        mu.density_nodes.push_back({sn * sn, rule.weights[q]});
      }
      return mu;
    }
    case MeanKind::Logarithmic: {
      // Density 1/(u(1-u)(ln^2(u/(1-u)) + pi^2)); with v = ln(u/(1-u)) and
      // v = pi tan(pi w/2) the measure becomes exactly dw/2 on (-1,1).
      QuadratureRule rule = gauss_legendre(density_nodes, -1.0, 1.0);
      for (int q = 0; q < density_nodes; ++q) {
        const double v = M_PI * std::tan(0.5 * M_PI * rule.nodes[q]);
        const double u = 1.0 / (1.0 + std::exp(-v));
        mu.density_nodes.push_back({u, 0.5 * rule.weights[q]});
      }
      return mu;
    }
    case MeanKind::FromMeasure:
      return *measure_;
    case MeanKind::Power:
      break;
  }
  throw MeasureMissing("mean '" + name_ + "' has no representing measure available");
}

// ---------------------------------------------------------------------------
// Factories / parsing

OperatorMean make_mean(MeanKind kind, double weight, double exponent,
                       const std::optional<RepresentingMeasure>& mu) {
  switch (kind) {
    case MeanKind::Arithmetic: return OperatorMean::arithmetic(weight);
    case MeanKind::Geometric: return OperatorMean::geometric(weight);
    case MeanKind::Harmonic: return OperatorMean::harmonic(weight);
    case MeanKind::Power: return OperatorMean::power(weight, exponent);
    case MeanKind::Logarithmic: return OperatorMean::logarithmic();
    case MeanKind::FromMeasure:
      if (!mu) throw InvalidMeasure("make_mean: FromMeasure requires a measure");
      return OperatorMean::from_measure(*mu);
  }
  throw Error("make_mean: unknown kind");
}

namespace {

RepresentingMeasure load_measure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open measure file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("measure file '" + path + "': " + e.what());
  }
  RepresentingMeasure mu;
  auto read_atoms = [&](const char* key, std::vector<RepresentingMeasure::Atom>& out) {
    if (!j.contains(key)) return;
    for (const auto& entry : j.at(key)) {
      RepresentingMeasure::Atom a;
      a.location = entry.at("location").get<double>();
      a.mass = entry.at("mass").get<double>();
      out.push_back(a);
    }
  };
  try {
    read_atoms("atoms", mu.atoms);
    read_atoms("density_nodes", mu.density_nodes);
  } catch (const nlohmann::json::exception& e) {
    throw IoError("measure file '" + path + "': " + e.what());
  }
  return mu;
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    size_t pos = 0;
    double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("cannot parse " + what + " from '" + text + "'");
  }
}

} // namespace

OperatorMean parse_mean(const std::string& descriptor) {
  const auto colon = descriptor.find(':');
  const std::string kind = descriptor.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : descriptor.substr(colon + 1);

  if (kind == "logarithmic") {
    if (!rest.empty()) throw ConfigError("logarithmic mean takes no parameters");
    return OperatorMean::logarithmic();
  }
  if (kind == "measure") {
    if (rest.empty()) throw ConfigError("measure mean needs a file path");
    return OperatorMean::from_measure(load_measure_file(rest), rest);
  }
  if (kind == "arithmetic" || kind == "geometric" || kind == "harmonic") {
    if (rest.empty()) throw ConfigError(kind + " mean needs a weight, e.g. " + kind + ":0.5");
    const double w = parse_double(rest, "mean weight");
    if (kind == "arithmetic") return OperatorMean::arithmetic(w);
    if (kind == "geometric") return OperatorMean::geometric(w);
    return OperatorMean::harmonic(w);
  }
  if (kind == "power") {
    const auto second = rest.find(':');
    if (second == std::string::npos)
      throw ConfigError("power mean descriptor is power:WEIGHT:t=EXPONENT");
    const double w = parse_double(rest.substr(0, second), "mean weight");
    std::string texpr = rest.substr(second + 1);
    if (texpr.rfind("t=", 0) != 0)
      throw ConfigError("power mean descriptor is power:WEIGHT:t=EXPONENT");
    const double t = parse_double(texpr.substr(2), "power exponent");
    return OperatorMean::power(w, t);
  }
  throw ConfigError("unknown mean kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Perspective matrices and dominance

Eigen::MatrixXd perspective_matrix(const OperatorMean& mean, const Eigen::VectorXd& s) {
  const Eigen::Index m = s.size();
  for (Eigen::Index i = 0; i < m; ++i)
    if (!(s(i) >= 0.0)) throw Error("perspective_matrix: entries must be >= 0");
  Eigen::MatrixXd out(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) out(i, j) = mean.perspective(s(i), s(j));
  return out;
}

DominanceResult dominance_check(const OperatorMean& mean_f, const OperatorMean& mean_g,
                                const Eigen::VectorXd& s, double tol) {
  const Eigen::Index m = s.size();
  for (Eigen::Index i = 0; i < m; ++i)
    if (!(s(i) > 0.0)) throw Error("dominance_check: tuple entries must be > 0");

  Eigen::MatrixXd ratio(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const double denom = mean_g.perspective(s(i), s(j));
      if (denom == 0.0) throw ZeroDenominator("dominance_check: P_g vanished on the tuple");
      ratio(i, j) = mean_f.perspective(s(i), s(j)) / denom;
    }
  }
  // PSD test on the Hermitian part; for symmetric means (weight 1/2) the
  // ratio matrix is already symmetric.
  Eigen::MatrixXd sym = 0.5 * (ratio + ratio.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  if (solver.info() != Eigen::Success)
    throw ConvergenceFailure("dominance_check: eigensolver failed");
  const double min_eig = solver.eigenvalues()(0);
  return DominanceResult{min_eig >= -tol, min_eig};
}

} // namespace aluthge
