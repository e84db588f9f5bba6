#pragma once

#include <cstdint>

namespace gwex {

// splitmix64 (Vigna). One instance per logical stream; streams are derived by
// remixing the seed with the stream coordinates, so any (cycle, unit) pair can
// be generated independently of draw order.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform on the open interval (0,1): 53 random bits centered in the cell,
  // so inverse-transform sampling never hits a quantile endpoint
  double next_unit() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

namespace detail {

inline std::uint64_t mix_key(std::uint64_t key, std::uint64_t index) {
  SplitMix64 g(key ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
  return g.next();
}

}  // namespace detail

// Independent generator for the unit-th set of the cycle-th cycle under seed.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t cycle, std::uint64_t unit) {
  return SplitMix64(detail::mix_key(detail::mix_key(seed, cycle), unit));
}

}  // namespace gwex
