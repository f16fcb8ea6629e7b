#pragma once

#include <cmath>
#include <cstdint>

namespace dcg {

// splitmix64; every randomized routine derives its stream from explicit
// (seed, length, index) triples so results are independent of thread count.
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {
    // warm up so small seeds decorrelate
    splitmix64(state_);
    splitmix64(state_);
  }

  static Rng for_sequence(uint64_t seed, uint64_t length, uint64_t index, uint64_t salt = 0) {
    uint64_t s = seed;
    s = mix(s ^ (0x9E3779B97F4A7C15ULL * (length + 1)));
    s = mix(s ^ (0xBF58476D1CE4E5B9ULL * (index + 1)));
    s = mix(s ^ (0x94D049BB133111EBULL * (salt + 1)));
    return Rng(s);
  }

  uint64_t next_u64() { return splitmix64(state_); }

  // uniform in [0, n); n is tiny here (24ish), modulo bias is ~2^-59
  uint32_t next_below(uint32_t n) { return static_cast<uint32_t>(next_u64() % n); }

  bool next_bool() { return (next_u64() >> 63) != 0; }

  // uniform double in [0,1)
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // standard normal via Box-Muller
  double next_normal() {
    double u1 = next_double();
    double u2 = next_double();
    if (u1 <= 0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  // binomial draw by inversion; n up to a few thousand (shot sampling)
  int next_binomial(int n, double p) {
    int k = 0;
    for (int i = 0; i < n; ++i)
      if (next_double() < p) ++k;
    return k;
  }

 private:
  static uint64_t mix(uint64_t x) {
    uint64_t s = x;
    return splitmix64(s);
  }
  uint64_t state_;
};

}  // namespace dcg
