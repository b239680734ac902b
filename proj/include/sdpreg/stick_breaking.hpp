#pragma once

#include "sdpreg/rng.hpp"
#include "sdpreg/types.hpp"

namespace sdpreg {

enum class KernelFamily { Uniform, SquaredExponential };

/// How the kernel bandwidths eps are treated: pinned to a function of
/// lambda, or sampled under the matching prior.
enum class BandwidthMode {
  FixedLambda,                  // uniform kernel, eps == lambda
  ExponentialLambda,            // uniform kernel, eps ~ Exp(rate lambda)
  FixedLambdaSqHalf,            // squared-exp kernel, eps == lambda^2 / 2
  InverseGamma_1p5_LambdaSqHalf // squared-exp kernel, eps ~ IG(1.5, lambda^2/2)
};

struct KernelSpec {
  KernelFamily family = KernelFamily::SquaredExponential;
  BandwidthMode bandwidth_mode = BandwidthMode::FixedLambdaSqHalf;
  double lambda = 0.5;

  bool bandwidth_fixed() const {
    return bandwidth_mode == BandwidthMode::FixedLambda ||
           bandwidth_mode == BandwidthMode::FixedLambdaSqHalf;
  }
  /// Fixed value, or prior mean for sampled modes; used for initialization.
  double initial_eps() const;
  /// Log prior density of one eps component (sampled modes only).
  double log_prior_eps(double eps) const;

  // Throws unless (family, bandwidth_mode) is one of the four supported rows
  // and lambda > 0.
  void validate() const;
};

/// Truncated stick-breaking state: K stick fractions (last pinned to 1),
/// one knot in the unit square and one bandwidth pair per stick.
struct SticksAndKnots {
  Vec V;     // K, in (0,1], V[K-1] == 1
  Mat psi;   // K x 2, unit-square knot coordinates
  Mat eps;   // K x 2, positive bandwidths

  int K() const { return static_cast<int>(V.size()); }
  void validate() const;

  /// Prior-consistent initial state: psi uniform on [0,1]^2, eps from
  /// KernelSpec::initial_eps(), all free sticks at 0.5.
  static SticksAndKnots init(int K, const KernelSpec& spec, Rng& rng);
};

/// Per-location cluster-assignment probabilities; rows sum to 1.
struct StickBreakingProbs {
  Mat p;  // n x K

  int n() const { return static_cast<int>(p.rows()); }
  int K() const { return static_cast<int>(p.cols()); }
};

/// Kernel value l_i(s) in [0,1] for one stick. s and psi_i are unit-square
/// points, eps_i the positive bandwidth pair. Throws on nonpositive eps.
double kernel_value(const KernelSpec& spec, const Eigen::Vector2d& s,
                    const Eigen::Vector2d& psi_i, const Eigen::Vector2d& eps_i);

/// Kernel matrix l (n x K) for all locations and sticks; the last stick's
/// kernel is pinned to 1 so rows of the probability matrix sum to 1.
Mat kernel_matrix(const SticksAndKnots& sk, const KernelSpec& spec, const Mat& unit_coords);

/// Stick-breaking probabilities from a precomputed kernel matrix.
StickBreakingProbs probs_from_kernels(const Mat& kernels, const Vec& V);

/// Full evaluation: p_k(s) = l_k(s) V_k * prod_{j<k} (1 - l_j(s) V_j),
/// with the final stick forced so every row sums to 1.
StickBreakingProbs assignment_probs(const SticksAndKnots& sk, const KernelSpec& spec,
                                    const Mat& unit_coords);

/// Affine map of raw coordinates onto the unit square, kept so results can
/// be reported back in data coordinates.
struct UnitSquareMap {
  Eigen::Vector2d lo{0.0, 0.0};
  Eigen::Vector2d range{1.0, 1.0};

  static UnitSquareMap fit(const Mat& coords);
  Mat to_unit(const Mat& coords) const;
  Eigen::Vector2d from_unit(const Eigen::Vector2d& s) const;
};

}  // namespace sdpreg
