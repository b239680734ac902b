#pragma once

#include "sdpreg/spatial_graph.hpp"
#include "sdpreg/stick_breaking.hpp"
#include "sdpreg/types.hpp"

namespace sdpreg {

/// Fixed quantities of the hierarchical model. K is the truncation level,
/// p the coefficient dimension; the remaining fields parameterize the
/// priors on atoms, cluster means/spreads, noise, sticks and bandwidth.
struct Hyperparameters {
  int K = 9;
  int p = 1;
  Vec m;                   // p, shared prior mean of the cluster means
  Mat Dk;                  // p x p SPD inverse-Wishart scale
  double ck = 0.0;         // inverse-Wishart dof, must exceed p - 1
  double alpha1 = 2.0;     // sigma^2 inverse-gamma shape
  double alpha2 = 1.0;     // sigma^2 inverse-gamma scale
  double a_v = 1.0;        // stick beta prior
  double b_v = 1.0;
  double D = 10.0;         // upper bound of the uniform prior on b
  KernelSpec kernel;

  void validate() const;

  /// Defaults resolved for dimension p: m = 0, Dk = I, ck = p + 2.
  static Hyperparameters defaults(int p, int K);
};

/// One MCMC state of the full model.
struct ChainState {
  std::vector<int> z;      // n allocations, zero-based in [0, K)
  Mat beta;                // p x K cluster atoms, column k = beta_k
  Mat mu;                  // p x K cluster-level means
  std::vector<Mat> Sigma;  // K cluster-level spreads, each p x p SPD
  Vec sigma2;              // n per-location noise variances
  SticksAndKnots sticks;
  double b = 0.0;          // weight bandwidth in (0, D)

  int n() const { return static_cast<int>(sigma2.size()); }
  int K() const { return static_cast<int>(beta.cols()); }
  int p() const { return static_cast<int>(beta.rows()); }

  void validate(const Hyperparameters& hyper) const;
};

/// log N_p(x; mean, cov) via Cholesky; throws if cov fails to factorize.
double mvn_logpdf(const Vec& x, const Vec& mean, const Mat& cov);

/// Geographically weighted pseudo-log-likelihood at location i for a given
/// coefficient vector: sum over j with w(i,j) > 0 of
/// log N(y_j; x_j' beta, sigma2(s_i) / w(i,j)). Throws if row i of W is all
/// zero.
double local_log_likelihood(int i, const Vec& beta, const ChainState& state,
                            const SpatialDataset& data, const SpatialWeights& W);

/// Sum of local_log_likelihood over members of cluster k plus
/// log N_p(beta; mu_k, Sigma_k).
double log_posterior_beta(int k, const Vec& beta, const ChainState& state,
                          const SpatialDataset& data, const SpatialWeights& W);

/// Exact gradient of log_posterior_beta in beta:
///   sum_{i: z_i = k} sum_j (w(i,j)/sigma2_i) x_j (y_j - x_j' beta)
///   - Sigma_k^{-1} (beta - mu_k).
Vec grad_log_posterior_beta(int k, const Vec& beta, const ChainState& state,
                            const SpatialDataset& data, const SpatialWeights& W);

/// Per-observation log-likelihood vector at the state's own atoms,
/// ll_i = local_log_likelihood(i, beta_{z_i}); the WAIC input.
Vec pointwise_log_likelihood(const ChainState& state, const SpatialDataset& data,
                             const SpatialWeights& W);

}  // namespace sdpreg
