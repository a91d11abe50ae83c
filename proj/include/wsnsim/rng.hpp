#pragma once

#include <cstdint>
#include <random>

namespace wsnsim {

// Deterministic uniform source. Every stochastic decision in a run flows
// through this one mapping, so a (config, seed) pair pins the trajectory
// bit-for-bit across platforms. The algorithm identity below is recorded in
// run metadata; changing either the engine or the mapping is a format break.
class UniformRng {
 public:
  explicit UniformRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53-bit resolution: top 53 bits of one engine
  // output scaled by 2^-53.
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  static constexpr const char* kAlgorithm = "mt19937_64:high53";

 private:
  std::mt19937_64 engine_;
};

}  // namespace wsnsim
