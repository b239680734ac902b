#pragma once

#include <optional>
#include <string>

#include "sdpreg/model.hpp"
#include "sdpreg/rng.hpp"

namespace sdpreg {

enum class BetaProposal { Mala, RandomWalk };
enum class InitAllocation { Random, Quantile };

struct SamplerConfig {
  int iterations = 10000;
  int burn_in = 2000;
  int thin = 1;
  std::uint64_t seed = 1;

  // initial proposal scales, adapted during burn-in when adapt is on
  double step_beta = 0.05;
  double step_v = 0.6;
  double step_knot = 0.15;
  double step_eps = 0.4;
  double step_b = 0.8;
  bool adapt = true;

  BetaProposal beta_proposal = BetaProposal::Mala;
  InitAllocation init = InitAllocation::Random;

  // test/reduction switches: pin sigma2 to a constant, or pin the cluster
  // mean/spread layer at its prior center
  std::optional<double> fixed_sigma2;
  bool fix_mu_sigma = false;
  bool validate_snapshots = false;

  void validate() const;
};

struct AcceptanceCounter {
  long long accepted = 0;
  long long attempted = 0;
  long long nonfinite = 0;

  double rate() const { return attempted ? double(accepted) / double(attempted) : 0.0; }
};

/// Thinned post-burn-in snapshots plus per-snapshot pointwise log-likelihoods
/// and per-block acceptance bookkeeping.
struct Trace {
  std::vector<ChainState> states;
  std::vector<Vec> pointwise;        // each length n
  std::vector<int> kept_iterations;  // 1-based global iteration of each snapshot

  AcceptanceCounter acc_beta, acc_v, acc_knot, acc_eps, acc_b;

  Vec steps_at_burn_in_end;  // flattened step sizes when adaptation stops
  Vec final_steps;           // same layout at the end of the run

  int iterations = 0, burn_in = 0, thin = 1;
  int n = 0, K = 0, p = 0;

  int M() const { return static_cast<int>(states.size()); }
  std::vector<std::vector<int>> allocation_trace() const;
  std::vector<Mat> beta_trace() const;       // each p x K
  Mat pointwise_matrix() const;              // M x n
};

/// Per-stick proposal scales for the stick-breaking block.
struct StickStepSizes {
  Vec v;     // K-1 logit-scale scales
  Vec knot;  // K reflected-walk scales
  Vec eps;   // K log-scale scales
};

/// One sweep of Metropolis updates for V (logit scale), knots (reflected walk
/// in the unit square) and bandwidths (log scale, skipped for fixed modes),
/// targeting prior x allocation likelihood. The final stick stays pinned at 1.
/// eta > 0 applies one Robbins-Monro adaptation step toward 0.44 acceptance.
void mh_update_sticks(SticksAndKnots& sticks, const KernelSpec& spec, const Mat& unit_coords,
                      const std::vector<int>& z, double a_v, double b_v, Rng& rng,
                      StickStepSizes& steps, double eta, AcceptanceCounter& acc_v,
                      AcceptanceCounter& acc_knot, AcceptanceCounter& acc_eps);

/// Blocked MCMC over the full model. Owns its state and RNG; the dataset,
/// distances and hyperparameters are shared immutable inputs.
class GibbsSampler {
 public:
  GibbsSampler(const SpatialDataset& data, const DistanceMatrix& dist,
               const Hyperparameters& hyper, const SamplerConfig& config);

  /// Executes the full schedule and returns the trace. Deterministic in the
  /// seed; block failures carry the iteration index.
  Trace run();

  // individual blocks, exposed so tests can drive them directly
  void sample_allocations();
  bool update_beta(int k);
  void update_mu_sigma(int k);
  void update_sigma2();
  void update_sticks();
  bool update_bandwidth();

  ChainState& state() { return state_; }
  const ChainState& state() const { return state_; }
  const SpatialWeights& weights() const { return weights_; }
  const StickBreakingProbs current_probs() const { return StickBreakingProbs{probs_}; }
  const Mat& unit_coords() const { return unit_coords_; }
  Rng& rng() { return rng_; }
  Trace& trace() { return trace_; }

  /// Rebuild all derived caches; call after editing state() directly in tests.
  void refresh_caches();

  /// Pointwise log-likelihood of the current state via the cached path.
  Vec pointwise() const;

  double current_step_beta(int k) const { return step_beta_[k]; }
  double current_step_b() const { return step_b_; }

 private:
  void initialize();
  double cluster_loglik(const Vec& a, const Vec& beta, double consts) const;
  Vec cluster_weight_sums(int k) const;
  double alloc_loglik(const Mat& kernels, const Vec& V) const;
  double full_pseudo_loglik(const SpatialWeights& W, const Vec& log_w_sum) const;
  void rebuild_weight_caches();
  double adapt_eta() const;
  Vec flatten_steps() const;
  void adapt_step(double& log_step_holder, double alpha, double target);

  SpatialDataset data_;
  DistanceMatrix dist_;
  Hyperparameters hyper_;
  SamplerConfig cfg_;
  Mat unit_coords_;
  Rng rng_;

  ChainState state_;
  SpatialWeights weights_;
  Vec log_w_sum_;  // per location, sum of log w over reachable pairs
  Vec n_eff_;      // per location, count of positive weights
  Mat kernels_;    // n x K
  Mat probs_;      // n x K

  Vec step_beta_;                 // per cluster
  StickStepSizes stick_steps_;
  double step_b_ = 0.0;
  long iter_ = 0;                 // current iteration, 1-based during run
  bool adapting_ = false;

  Trace trace_;
};

/// Convenience wrapper: builds distances per metric name ("graph" or
/// "great_circle"), runs the chain, returns the trace.
Trace run_chain(const SpatialDataset& data, const Hyperparameters& hyper,
                const SamplerConfig& config, const std::string& metric = "graph");

}  // namespace sdpreg
