#pragma once

#include <string>

#include "aluthge/linalg.hpp"
#include "aluthge/means.hpp"

namespace aluthge {

struct TransformResult {
  Matrix delta;
  std::string mean_name;
  double weight = 0.5;
  /// Smallest gap between adjacent eigenvalues of |T| (diagnostic for the
  /// conditioning of the eigenbasis the Hadamard form is evaluated in).
  double basis_conditioning = 0.0;
};

/// Generalized Aluthge transformation of T with respect to an operator mean:
/// with T = U|T| and |T| = W diag(s) W*, returns
///   Delta = W (M o (W* U W)) W*,   M[i][j] = P_f(s_i, s_j),
/// where o is the entrywise product. Zero eigenvalues of |T| enter through
/// the boundary-extended perspective, which matches the eps-regularized
/// limit Delta(T) = lim_{eps->0} Delta(U(|T|+eps I)).
TransformResult aluthge_transform(const Matrix& t, const OperatorMean& mean);

enum class ClosedFormKind { Geometric, Arithmetic };

/// Closed forms used as oracles for aluthge_transform:
///   geometric:  |T|^(1-lambda) U |T|^lambda
///   arithmetic: (1-lambda)|T|U + lambda U*UU|T|
/// The arithmetic form agrees with the transform whenever ker(T*) is
/// contained in ker(T) (always for invertible T); for other singular inputs
/// the transform follows the eps-limit instead, which keeps the kernel rows
/// that this closed form projects away.
Matrix aluthge_closed_form(const Matrix& t, ClosedFormKind kind, double lambda);

struct QuadratureOptions {
  double x_max = 0.0;          // 0 -> 40 * ||T||
  int inner_panels = 25;       // composite Gauss-Legendre panels on [0, x_max]
  int inner_nodes = 16;        // nodes per panel
  int outer_density_nodes = 64; // discretization of a measure density
};

/// Independent route to the transform via the double-integral representation
///   Delta(T) = int_0^1 ( int_0^inf e^{-x(1-u)|T|^{-1}} U e^{-xu|T|^{-1}} dx ) dmu(u),
/// evaluated by honest numerical quadrature (no analytic shortcut for the
/// inner integral). Requires invertible T and a mean with a representing
/// measure.
Matrix aluthge_quadrature_oracle(const Matrix& t, const OperatorMean& mean,
                                 const QuadratureOptions& opts = {});

/// Residual of the identity Delta(T) - alpha I = Phi(U - alpha |T|^{-1})
/// where Phi applies the same Hadamard multiplier to its argument.
/// Contract: <= 1e-9 * (||T|| + |alpha|) for invertible T.
double shift_identity_check(const Matrix& t, const OperatorMean& mean, Complex alpha);

} // namespace aluthge
