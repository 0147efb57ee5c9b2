#pragma once

#include <cstdint>
#include <random>

namespace needlet {

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seed of replication `index` under root seed `root`:
/// mix64(root + (index + 1) * 0x9E3779B97F4A7C15). Streams for distinct
/// indices are independent of how replications are scheduled.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index);

/// Seeded normal stream; identical seed => identical sequence.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  double normal() { return gauss_(engine_); }
  double uniform() { return unif_(engine_); }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> gauss_{0.0, 1.0};
  std::uniform_real_distribution<double> unif_{0.0, 1.0};
};

}  // namespace needlet
