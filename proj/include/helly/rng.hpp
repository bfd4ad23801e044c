#pragma once

#include <cassert>
#include <cstdint>
#include <random>

namespace helly {

// splitmix64 step. Used only for deriving child seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Stream split contract used everywhere a master seed spawns per-round or
// per-trial streams: child seed i is splitmix64(master ^ golden * (i + 1)).
// Children of distinct indices never share an engine state.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t s = master ^ (0x9E3779B97F4A7C15ull * (index + 1));
  return splitmix64(s);
}

// mt19937_64 wrapped with fully specified draws. std::uniform_*_distribution
// is implementation-defined, so bounded integers and unit doubles are rolled
// by hand; identical seeds give identical streams on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Unbiased integer in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    assert(n >= 1);
    const std::uint64_t rem = (0ull - n) % n;  // 2^64 mod n
    std::uint64_t v = next_u64();
    while (rem != 0 && v >= 0ull - rem) v = next_u64();
    return v % n;
  }

  // 53-bit uniform in [0, 1).
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // Standard normal via Box-Muller; consumes two draws per pair.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - unit();  // (0, 1], keeps log finite
    double u2 = unit();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * 3.141592653589793238462643383279502884 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace helly
