#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Core>

namespace msamp {

/// Deterministic random stream.
///
/// The engine is std::mt19937_64 (fully specified by the standard); all
/// conversions to double are done by hand so results never depend on the
/// standard library's distribution implementations. Identical seeds give
/// identical values on every platform, which the reproducibility contract
/// of the experiment commands relies on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, n). Modulo bias is negligible for the small n
  /// used here (net indices, row picks).
  int uniform_int(int n) {
    return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n));
  }

  /// Standard normal via Box-Muller; the second value of each pair is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform01();
    } while (u1 <= 0.0);
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  Eigen::VectorXd uniform_vec(const Eigen::VectorXd& lo,
                              const Eigen::VectorXd& hi) {
    Eigen::VectorXd v(lo.size());
    for (Eigen::Index i = 0; i < lo.size(); ++i) v[i] = uniform(lo[i], hi[i]);
    return v;
  }

  Eigen::VectorXd normal_vec(Eigen::Index n) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = normal();
    return v;
  }

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// splitmix64 step; used only to mix stream keys, not as a generator.
inline std::uint64_t mix_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Independent child stream keyed by (a, b). Work items (trials, attempts,
/// ensemble members) each derive their own stream from the run seed so the
/// result is the same no matter how the items are scheduled across threads.
inline Rng make_stream(std::uint64_t seed, std::uint64_t a,
                       std::uint64_t b = 0) {
  return Rng(mix_u64(mix_u64(seed, a), b));
}

}  // namespace msamp
