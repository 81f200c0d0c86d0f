#pragma once

#include "cy2/matrix.hpp"

#include <cstdint>

namespace cy2 {

/// Deterministic, platform-independent generator (splitmix64). All random
/// draws in certificates go through this so runs are replayable from the
/// recorded seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next();
  /// Uniform in [lo, hi].
  long long next_in(long long lo, long long hi);

  /// Rational with numerator in [-bound, bound] and denominator in [1, bound].
  Rat rational(long long bound = 10);
  /// As above but never zero.
  Rat nonzero_rational(long long bound = 10);

  Mat matrix(int rows, int cols, long long bound = 10);
  /// Redraws until the determinant is nonzero.
  Mat invertible_matrix(int n, long long bound = 10);

 private:
  uint64_t state_;
};

}  // namespace cy2
