#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "aluthge/errors.hpp"

namespace aluthge {

/// Positive probability measure on [0,1] in the harmonic-family
/// parametrization f(x) = \int [1 - u + u/x]^{-1} dmu(u). Continuous parts
/// are stored pre-discretized as quadrature nodes.
struct RepresentingMeasure {
  struct Atom {
    double location = 0.0; // in [0,1]
    double mass = 0.0;     // > 0
  };

  std::vector<Atom> atoms;         // exact point masses
  std::vector<Atom> density_nodes; // fixed-quadrature discretization of a density

  double total_mass() const;

  /// Throws InvalidMeasure unless masses are positive, locations lie in
  /// [0,1], and the total mass is 1 within 1e-10.
  void validate() const;

  /// \int g(u) dmu(u) over atoms and density nodes.
  double integrate(const std::function<double(double)>& g) const;

  /// Mass sitting exactly at u = 0 (resp. u = 1); determines the boundary
  /// behavior of the induced mean.
  double mass_at_zero() const;
  double mass_at_one() const;
};

enum class MeanKind { Arithmetic, Geometric, Harmonic, Power, Logarithmic, FromMeasure };

/// A Kubo-Ando operator mean, carried by its representing function f
/// (f(1) = 1, weight = f'(1)) and evaluated through the perspective
/// P_f(s,t) = s f(t/s), extended to the boundary of [0,inf)^2 by continuity:
///   P_f(s,0) = s * lim_{x->0+} f(x),  P_f(0,t) = t * lim_{x->inf} f(x)/x,
///   P_f(0,0) = 0.
class OperatorMean {
public:
  static OperatorMean arithmetic(double weight);
  static OperatorMean geometric(double weight);
  static OperatorMean harmonic(double weight);
  static OperatorMean power(double weight, double exponent); // exponent in [-1,1], 0 -> geometric
  static OperatorMean logarithmic();                         // non-weighted, weight 1/2
  static OperatorMean from_measure(RepresentingMeasure mu, std::string name = "measure");

  MeanKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  /// CLI descriptor, e.g. "geometric:0.5"; parse_mean round-trips it.
  std::string descriptor() const;

  double weight() const { return weight_; }
  double power_exponent() const { return power_exponent_; }

  /// Representing function on (0, inf).
  double f(double x) const;

  /// Boundary-extended perspective on [0, inf)^2.
  double perspective(double s, double t) const;

  double f_limit_at_zero() const { return f_limit0_; }
  double slope_at_infinity() const { return slope_inf_; }

  /// True when the mean can produce a representing measure (built-ins:
  /// arithmetic, harmonic, geometric with weight 1/2, logarithmic; and any
  /// measure-defined mean).
  bool has_measure() const;

  /// Representing measure; continuous densities are discretized with
  /// `density_nodes` quadrature nodes. Throws MeasureMissing when the mean
  /// has no available measure.
  RepresentingMeasure measure(int density_nodes = 64) const;

private:
  OperatorMean() = default;

  MeanKind kind_ = MeanKind::Arithmetic;
  std::string name_;
  double weight_ = 0.5;
  double power_exponent_ = 1.0;
  double f_limit0_ = 0.0; // lim_{x->0+} f(x)
  double slope_inf_ = 0.0; // lim_{x->inf} f(x)/x
  std::optional<RepresentingMeasure> measure_;
};

/// Kind-dispatching factory; `exponent` is only read for the power kind and
/// `mu` only for FromMeasure.
OperatorMean make_mean(MeanKind kind, double weight, double exponent = 1.0,
                       const std::optional<RepresentingMeasure>& mu = std::nullopt);

/// Parses CLI descriptors: "arithmetic:0.5", "geometric:0.5",
/// "harmonic:0.5", "power:0.5:t=-1", "logarithmic", "measure:FILE.json".
OperatorMean parse_mean(const std::string& descriptor);

/// M[i][j] = P_f(s_i, s_j) with boundary extension; requires s_i >= 0.
Eigen::MatrixXd perspective_matrix(const OperatorMean& mean, const Eigen::VectorXd& s);

struct DominanceResult {
  bool dominated = false;
  double min_eigenvalue = 0.0;
};

/// Single-sample certificate for the dominance relation between means:
/// builds R[i][j] = P_f(s_i,s_j)/P_g(s_i,s_j) over a strictly positive tuple
/// and tests positive semi-definiteness of its Hermitian part. Refutes
/// soundly; a "dominated" verdict is evidence for one tuple, not a proof.
DominanceResult dominance_check(const OperatorMean& mean_f, const OperatorMean& mean_g,
                                const Eigen::VectorXd& s, double tol);

} // namespace aluthge
