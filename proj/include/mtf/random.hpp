#pragma once

// Counter-based generator: word k of stream s under seed S is
//   mix(mix(S ^ (s * 0xD1B54A32D192ED03)) + k * 0x9E3779B97F4A7C15)
// where mix is the SplitMix64 finalizer. Frozen; fixtures depend on it.

#include <cstdint>
#include <utility>
#include <vector>

namespace mtf {

inline constexpr std::uint64_t splitmix_finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(splitmix_finalize(seed ^ (stream * 0xD1B54A32D192ED03ULL))) {}

  std::uint64_t next() { return splitmix_finalize(key_ + (++counter_) * 0x9E3779B97F4A7C15ULL); }

  // Independent child stream; does not advance this generator.
  CounterRng split(std::uint64_t stream) const { return CounterRng(key_, stream + 1); }

  // Uniform in [0, bound), bound > 0 (Lemire's multiply-shift with rejection).
  std::uint64_t uniform(std::uint64_t bound) {
    for (;;) {
      const unsigned __int128 product = static_cast<unsigned __int128>(next()) * bound;
      const auto low = static_cast<std::uint64_t>(product);
      if (low >= (-bound) % bound) return static_cast<std::uint64_t>(product >> 64);
    }
  }

  int uniform_int(int lo, int hi) { return lo + static_cast<int>(uniform(static_cast<std::uint64_t>(hi - lo + 1))); }

  bool bernoulli(std::uint64_t numerator, std::uint64_t denominator) { return uniform(denominator) < numerator; }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[uniform(i)]);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace mtf
