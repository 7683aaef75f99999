#pragma once

#include <vector>

namespace aluthge {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1].
QuadratureRule gauss_legendre(int n);

/// Gauss-Legendre rule mapped to [a, b].
QuadratureRule gauss_legendre(int n, double a, double b);

/// Composite rule: `panels` uniform panels on [a, b], `nodes_per_panel`
/// Gauss-Legendre nodes each.
QuadratureRule composite_gauss_legendre(int nodes_per_panel, int panels, double a, double b);

} // namespace aluthge
