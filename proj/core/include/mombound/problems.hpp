#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mombound/momat.hpp"
#include "mombound/polynomial.hpp"
#include "mombound/rational.hpp"

namespace mombound {

/// x1^2 x2^2 (x1^2 + x2^2 - 1), minimum -1/27 on R^2_+.
Polynomial motzkin_like();
/// x1^2 + (1 - x1 x2)^2, infimum 0 on R^2_+ (not attained).
Polynomial unattained_infimum();
/// 3/8 - 5x + 21x^2 - 32x^3 + 16x^4 on [0, 1].
Polynomial double_well();

/// splitmix64: fixed, portable 64-bit generator so seeded instances are
/// reproducible bit for bit on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// min x^T Q x over {-1, 1}^n with Q symmetric and zero on the diagonal.
struct MaxCutInstance {
  std::size_t n = 0;
  RationalMatrix q;
  std::uint64_t seed = 0;

  Polynomial objective() const;
};

/// Q_ij = 1/2 for i != j, so f* = -floor(n/2).
MaxCutInstance maxcut_equal(std::size_t n);
/// Each off-diagonal pair survives with probability density; survivors are
/// uniform in (0, 1), stored as the exact value of the generated double.
MaxCutInstance maxcut_random(std::size_t n, double density, std::uint64_t seed);
/// Validates symmetry and the zero diagonal.
MaxCutInstance maxcut_from_matrix(const RationalMatrix& q, std::uint64_t seed = 0);

struct HypercubeMinimum {
  Rational value;
  std::vector<int> argmin;
};

/// Exhaustive minimum of f over {-1, 1}^n (n <= 22). Ties keep the first
/// vertex in counting order (bit i set means x_{i+1} = -1).
HypercubeMinimum brute_force_hypercube(const Polynomial& f, std::size_t n);

}  // namespace mombound
