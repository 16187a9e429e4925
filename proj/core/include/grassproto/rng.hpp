#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <string_view>

namespace grassproto {

/// Deterministic random stream identified by (seed, purpose tag).
///
/// Every generator and solver derives its own stream from the user seed and a
/// fixed tag, so adding a new consumer never reshuffles the draws seen by an
/// existing one. Uniform doubles are produced from the raw 64-bit output
/// directly (not through std::uniform_real_distribution, whose mapping is
/// implementation-defined), so a given (seed, tag) yields the same sequence on
/// every platform.
class Rng {
 public:
  Rng(std::uint64_t seed, std::string_view tag);

  /// Next raw 64-bit value; also used to derive child seeds.
  std::uint64_t next();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);

  /// Uniform index in [0, n). n must be positive.
  std::size_t uniform_index(std::size_t n);

  /// rows x cols matrix with i.i.d. entries uniform on [lo, hi).
  Eigen::MatrixXd uniform_matrix(int rows, int cols, double lo, double hi);

 private:
  std::mt19937_64 gen_;
};

}  // namespace grassproto
