#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "aluthge/linalg.hpp"

namespace aluthge::corpus {

/// Deterministic random source: the gaussian is hand-rolled (Box-Muller on
/// fixed 53-bit uniforms) so identical seeds give identical corpora on any
/// platform, independent of the standard library's distributions.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(); // in (0,1)
  double normal();
  Complex complex_normal(); // independent N(0,1) real and imaginary parts

private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

enum class Kind { Invertible, Singular, Normal, NearlyNormal, ShiftTruncation };

Kind parse_kind(const std::string& name);
std::string kind_name(Kind kind);

Matrix gaussian(Rng& rng, int m);
Matrix unitary(Rng& rng, int m);

/// Condition number capped at 10 (singular values clamped into
/// [sigma_max/10, sigma_max]).
Matrix invertible(Rng& rng, int m);

/// Rank-deficient with ker(T) = ker(T*): an invertible matrix compressed to
/// a random coordinate subspace, conjugated by a random unitary.
Matrix singular(Rng& rng, int m);

/// V* diag(complex) V for a random unitary V.
Matrix normal(Rng& rng, int m);

Matrix nearly_normal(Rng& rng, int m);

/// m x m truncation of a weighted unilateral shift, weights in [0.5, 2].
Matrix shift_truncation(Rng& rng, int m);

Matrix make(Kind kind, Rng& rng, int m);

} // namespace aluthge::corpus
