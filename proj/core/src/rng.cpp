#include "needlet/rng.hpp"

namespace needlet {

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
  return mix64(root + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

}  // namespace needlet
