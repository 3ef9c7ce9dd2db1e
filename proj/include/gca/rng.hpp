#ifndef GCA_RNG_HPP
#define GCA_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>

namespace gca {

// Deterministic stream generator. splitmix64 core, Box-Muller gaussians.
// std:: distributions are implementation-defined, which would break the
// byte-identical report guarantee, so everything is derived from raw bits here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Per-trial stream: decorrelates the root seed from the stream id.
  Rng(std::uint64_t root_seed, std::uint64_t stream) : state_(root_seed) {
    state_ ^= 0x9e3779b97f4a7c15ull * (stream + 1);
    next();
    next();
  }

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  double gaussian() {
    // Box-Muller; u clamped away from 0 so log stays finite.
    double u = uniform();
    if (u < 0x1.0p-60) u = 0x1.0p-60;
    double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586477 * v);
  }

  std::complex<double> complex_gaussian() {
    double u = uniform();
    if (u < 0x1.0p-60) u = 0x1.0p-60;
    double v = uniform();
    double r = std::sqrt(-2.0 * std::log(u));
    return {r * std::cos(6.283185307179586477 * v),
            r * std::sin(6.283185307179586477 * v)};
  }

 private:
  std::uint64_t state_;
};

}  // namespace gca

#endif
