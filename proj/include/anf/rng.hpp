#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace anf {

// Deterministic random source. std::mt19937_64 has a pinned algorithm, but the
// standard distributions do not, so uniform/gaussian are spelled out here to make
// seeded runs byte-identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : eng_(seed) {}

  double uniform() { return (eng_() >> 11) * 0x1.0p-53; }  // [0, 1)

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // Box-Muller; caches the second variate.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(angle);
    have_spare_ = true;
    return r * std::cos(angle);
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace anf
