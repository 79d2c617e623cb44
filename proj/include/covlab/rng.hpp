#pragma once

#include <cstdint>

namespace covlab {

/// Deterministic per-trial random stream.
///
/// Counter-based derivation: draw j of trial i is
///
///     mix64(key(master, i) + (j + 1) * GAMMA)
///     key(master, i) = mix64(master ^ mix64(GAMMA * (i + 1)))
///
/// where mix64 is the splitmix64 finalizer and GAMMA = 0x9E3779B97F4A7C15.
/// Each trial therefore owns an independent substream that depends only on
/// (master seed, trial index) — never on evaluation order or thread count —
/// so trials can be generated concurrently and replayed bit-exactly.
class TrialRng {
 public:
  TrialRng(std::uint64_t master_seed, std::uint64_t trial_index);

  std::uint64_t next_u64();

  /// Uniform double in the open interval (0, 1): 53-bit lattice shifted to
  /// bucket midpoints, so 0 and 1 can never be returned.
  double next_unit();

  /// Uniform double in [a, b).
  double next_uniform(double a, double b) { return a + (b - a) * next_unit(); }

  static std::uint64_t mix64(std::uint64_t z);
  static std::uint64_t stream_key(std::uint64_t master_seed, std::uint64_t trial_index);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace covlab
