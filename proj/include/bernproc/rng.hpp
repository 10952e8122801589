#pragma once

#include <cmath>
#include <cstdint>

namespace bernproc {

// Counter-based seedable random stream.
//
// A stream is addressed by (seed, stream index); drawing value n applies the
// 64-bit SplitMix finalizer to key + n*GAMMA, where the per-stream key is
// itself derived from (seed, stream) with the same finalizer.  Draws depend
// only on (seed, stream, position), so chunked consumers get bit-identical
// results regardless of how the chunks are scheduled.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream) {
    key_ = mix(seed + kGamma * (stream + 1));
  }

  std::uint64_t next_u64() {
    counter_ += kGamma;
    return mix(key_ + counter_);
  }

  /// Uniform double in the open interval (0, 1).
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; the second value of each pair is cached.
  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * kPi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  /// Fair random sign in {-1, +1}.
  int next_sign() { return (next_u64() >> 63) ? 1 : -1; }

  bool next_bernoulli(double p) { return next_unit() <= p; }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
  static constexpr double kPi = 3.14159265358979323846;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace bernproc
