#pragma once

// Counter-based RNG: every (seed, stream) pair yields an independent,
// fully-specified sequence, so Monte Carlo results are reproducible and
// independent of how samples are partitioned across workers.

#include <cstdint>
#include <cmath>

namespace gasketlab {

class CounterRng {
 public:
  CounterRng(uint64_t seed, uint64_t stream) {
    state_ = splitmix(seed + 0x9E3779B97F4A7C15ull);
    state_ = splitmix(state_ ^ (stream * 0xBF58476D1CE4E5B9ull + 0x94D049BB133111EBull));
  }

  uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return finalize(state_);
  }

  // uniform in the open interval (0,1)
  double next_double() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
  }

  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.28318530717958647692 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  static uint64_t splitmix(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    return finalize(x);
  }
  static uint64_t finalize(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  uint64_t state_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace gasketlab
