#include "covlab/rng.hpp"

namespace covlab {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
}

std::uint64_t TrialRng::mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t TrialRng::stream_key(std::uint64_t master_seed, std::uint64_t trial_index) {
  return mix64(master_seed ^ mix64(kGamma * (trial_index + 1)));
}

TrialRng::TrialRng(std::uint64_t master_seed, std::uint64_t trial_index)
    : key_(stream_key(master_seed, trial_index)) {}

std::uint64_t TrialRng::next_u64() {
  ++counter_;
  return mix64(key_ + counter_ * kGamma);
}

double TrialRng::next_unit() {
  const double lattice = static_cast<double>(next_u64() >> 11);  // 53 bits
  return (lattice + 0.5) * 0x1.0p-53;
}

}  // namespace covlab
