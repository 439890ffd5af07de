#ifndef AMPCAL_RNG_HPP
#define AMPCAL_RNG_HPP

#include <cstdint>

namespace ampcal {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stateless counter-based generator: every value is a pure function of
// (seed, counter, slot), so sampling order and scheduling cannot change
// results.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t bits(std::uint64_t counter, std::uint64_t slot) const {
    return mix64(mix64(mix64(seed_) ^ counter) + slot);
  }

  // Uniform in [0, 1).
  double uniform01(std::uint64_t counter, std::uint64_t slot) const {
    return static_cast<double>(bits(counter, slot) >> 11) * 0x1.0p-53;
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
};

}  // namespace ampcal

#endif  // AMPCAL_RNG_HPP
