#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>

#include "sdpreg/types.hpp"

namespace sdpreg {

/// Seeded random source used by the sampler and the data generator.
/// All draws go through one mt19937_64 stream so a run is fully
/// reproducible from its 64-bit seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  double normal() {
    return std::normal_distribution<double>(0.0, 1.0)(engine_);
  }
  double normal(double mean, double sd) {
    return std::normal_distribution<double>(mean, sd)(engine_);
  }
  /// Gamma with shape/scale parameterization, mean = shape * scale.
  double gamma(double shape, double scale) {
    return std::gamma_distribution<double>(shape, scale)(engine_);
  }
  /// Inverse gamma with shape a and scale s: mean s/(a-1) for a > 1.
  double inv_gamma(double shape, double scale) {
    return 1.0 / std::gamma_distribution<double>(shape, 1.0 / scale)(engine_);
  }
  double beta(double a, double b) {
    double x = gamma(a, 1.0);
    double y = gamma(b, 1.0);
    return x / (x + y);
  }
  double exponential(double rate) {
    return std::exponential_distribution<double>(rate)(engine_);
  }
  std::uint64_t integer() { return engine_(); }

  Vec normal_vec(int n) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = normal();
    return v;
  }

  /// N_p(mean, cov); cov must be symmetric positive-definite.
  Vec mvnormal(const Vec& mean, const Mat& cov);

  /// Inverse-Wishart IW(scale, dof) via the Bartlett decomposition,
  /// E[S] = scale / (dof - p - 1) for dof > p + 1.
  Mat inverse_wishart(const Mat& scale, double dof);

  /// Index draw from unnormalized nonnegative masses; throws if all zero.
  int categorical(const Vec& unnormalized);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sdpreg
