#pragma once
// Counter-based random streams.
//
// Every draw is a pure function of (master seed, derivation path, draw index),
// so a weight field never has to be stored: any cell can be re-sampled on
// demand, in any order, from any thread, and a run is reproducible for any
// worker count.  Derivation paths are small integer tuples, e.g.
//   Stream(seed).sub(REPLICA, r).sub(CELL, i, j).exponential(rate)
// Streams are cheap value types (a single 64-bit key).

#include <cstdint>
#include <cmath>
#include <limits>
#include <utility>

namespace hsk {

// SplitMix64 finalizer; full-avalanche bijection on 64 bits.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30; x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27; x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

class Stream {
 public:
  constexpr Stream() : key_(0) {}
  explicit constexpr Stream(std::uint64_t seed) : key_(mix64(seed ^ 0x6A09E667F3BCC908ull)) {}

  // Child stream; distinct words give decorrelated children.
  [[nodiscard]] constexpr Stream sub(std::uint64_t w) const {
    Stream s;
    s.key_ = mix64(key_ + kGolden * (w + 1));
    return s;
  }
  template <class... Ws>
  [[nodiscard]] constexpr Stream sub(std::uint64_t w, Ws... ws) const {
    return sub(w).sub(static_cast<std::uint64_t>(ws)...);
  }
  // Signed coordinates (lattice indices can be negative).
  [[nodiscard]] constexpr Stream at(long long i, long long j) const {
    return sub(static_cast<std::uint64_t>(i)).sub(static_cast<std::uint64_t>(j));
  }

  constexpr std::uint64_t bits(std::uint64_t n = 0) const {
    return mix64(key_ ^ (kGolden * (n + 1)));
  }

  // Uniform on the open interval (0,1); never returns an exact endpoint.
  double u01(std::uint64_t n = 0) const {
    return (static_cast<double>(bits(n) >> 11) + 0.5) * 0x1p-53;
  }

  // Exponential with the given rate.  rate=+inf is the degenerate point mass
  // at 0 (used for absent diagonal weights); nonpositive rate would not be a
  // distribution and maps to +inf, the absorbing "infinite weight" sentinel.
  double exponential(double rate, std::uint64_t n = 0) const {
    if (std::isinf(rate) && rate > 0) return 0.0;
    if (!(rate > 0)) return std::numeric_limits<double>::infinity();
    return -std::log(u01(n)) / rate;
  }

  // Geometric on {0,1,2,...}: P(k) = (1-theta) theta^k, theta in [0,1).
  long long geometric(double theta, std::uint64_t n = 0) const {
    if (theta <= 0.0) return 0;
    return static_cast<long long>(std::floor(std::log(u01(n)) / std::log(theta)));
  }

  // Box-Muller pair; draw n consumes uniform indices 2n and 2n+1.
  std::pair<double, double> normal_pair(std::uint64_t n = 0) const {
    const double r = std::sqrt(-2.0 * std::log(u01(2 * n)));
    const double t = 6.283185307179586476925287 * u01(2 * n + 1);
    return {r * std::cos(t), r * std::sin(t)};
  }
  double normal(std::uint64_t n = 0) const { return normal_pair(n).first; }

  // Gamma(shape, scale 1) by Marsaglia-Tsang.  The rejection loop consumes
  // this stream's own draw indices, so dedicate a stream per gamma variate
  // (derive a child; do not mix with other draws on the same stream).
  double gamma(double shape) const {
    double boost = 1.0;
    std::uint64_t idx = 0;
    if (shape < 1.0) {
      boost = std::pow(u01(idx++), 1.0 / shape);
      shape += 1.0;
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      const auto [z, z2] = normal_pair(idx);
      idx += 2;
      (void)z2;
      const double t = 1.0 + c * z;
      if (t <= 0.0) continue;
      const double v = t * t * t;
      const double u = u01(idx++);
      if (std::log(u) < 0.5 * z * z + d - d * v + d * std::log(v)) return boost * d * v;
    }
  }

  // Inverse-gamma(shape): density x^{-shape-1} e^{-1/x} / Gamma(shape).
  // shape <= 0 maps to the +inf sentinel (weight blows up).
  double inverse_gamma(double shape) const {
    if (!(shape > 0)) return std::numeric_limits<double>::infinity();
    return 1.0 / gamma(shape);
  }

  constexpr std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
};

// Top-level derivation words.  Module code derives from these so unrelated
// draws can never share a key by accident.
namespace tag {
constexpr std::uint64_t kCell = 1;       // lattice weight at (i,j)
constexpr std::uint64_t kReplica = 2;    // Monte Carlo replica index
constexpr std::uint64_t kBoundary = 3;   // boundary / seed increments
constexpr std::uint64_t kClock = 4;      // Poisson clock on a vertex
constexpr std::uint64_t kLine = 5;       // Brownian line increments
constexpr std::uint64_t kAtom = 6;       // point masses in cadlag environments
constexpr std::uint64_t kAux = 7;        // anything else, one-off draws
}  // namespace tag

}  // namespace hsk
