#pragma once

#include <cstdint>
#include <random>

namespace dsa {

inline std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Counter-based seed derivation: (master, stream, counter) -> 64-bit seed.
// Every Monte Carlo trial owns an independent stream, so results do not
// depend on execution order or thread count.
inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream,
                                std::uint64_t counter) {
  std::uint64_t x = master;
  std::uint64_t s = splitmix64(x);
  x ^= stream * 0xD1B54A32D192ED03ULL;
  s ^= splitmix64(x);
  x ^= counter * 0x8CB92BA72F3D8DD7ULL;
  s ^= splitmix64(x);
  return s;
}

// Named sub-stream ids so different calibration stages never collide.
namespace stream_id {
inline constexpr std::uint64_t trial = 1;
inline constexpr std::uint64_t alpha = 2;
inline constexpr std::uint64_t delta = 3;
inline constexpr std::uint64_t phi = 4;
inline constexpr std::uint64_t tuning = 5;
inline constexpr std::uint64_t heldout = 6;
inline constexpr std::uint64_t test = 99;
}  // namespace stream_id

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : eng_(seed) {}

  static RandomStream derived(std::uint64_t master, std::uint64_t stream,
                              std::uint64_t counter) {
    return RandomStream(split_seed(master, stream, counter));
  }

  double uniform() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(eng_);
  }

  double gaussian() { return normal_(eng_); }

  double gaussian(double mean, double stddev) {
    return mean + stddev * normal_(eng_);
  }

  int uniform_int(int n) {
    return std::uniform_int_distribution<int>(0, n - 1)(eng_);
  }

  std::uint64_t bits() { return eng_(); }

 private:
  std::mt19937_64 eng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace dsa
