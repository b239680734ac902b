#include "sdpreg/model.hpp"

#include <cmath>
#include <stdexcept>

namespace sdpreg {

namespace {
constexpr double kLog2Pi = 1.8378770664093453;  // log(2*pi)
}

void Hyperparameters::validate() const {
  if (K < 1) throw std::invalid_argument("hyper: K must be >= 1");
  if (p < 1) throw std::invalid_argument("hyper: p must be >= 1");
  if (m.size() != p) throw std::invalid_argument("hyper: m must have length p");
  if (Dk.rows() != p || Dk.cols() != p)
    throw std::invalid_argument("hyper: Dk must be p x p");
  if (!Dk.isApprox(Dk.transpose(), 1e-10))
    throw std::invalid_argument("hyper: Dk must be symmetric");
  if (Eigen::LLT<Mat>(Dk).info() != Eigen::Success)
    throw std::invalid_argument("hyper: Dk must be positive-definite");
  if (!(ck > p - 1)) throw std::invalid_argument("hyper: ck must exceed p - 1");
  if (!(alpha1 > 0.0) || !(alpha2 > 0.0) || !(a_v > 0.0) || !(b_v > 0.0) || !(D > 0.0))
    throw std::invalid_argument("hyper: alpha1, alpha2, a_v, b_v, D must be > 0");
  kernel.validate();
}

Hyperparameters Hyperparameters::defaults(int p, int K) {
  Hyperparameters h;
  h.K = K;
  h.p = p;
  h.m = Vec::Zero(p);
  h.Dk = Mat::Identity(p, p);
  h.ck = p + 2;
  return h;
}

void ChainState::validate(const Hyperparameters& hyper) const {
  const int N = n();
  if (static_cast<int>(z.size()) != N) throw std::invalid_argument("state: z length != n");
  if (K() != hyper.K || p() != hyper.p)
    throw std::invalid_argument("state: atom dimensions disagree with hyper");
  for (int zi : z)
    if (zi < 0 || zi >= hyper.K) throw std::invalid_argument("state: allocation out of range");
  if (mu.rows() != hyper.p || mu.cols() != hyper.K)
    throw std::invalid_argument("state: mu must be p x K");
  if (static_cast<int>(Sigma.size()) != hyper.K)
    throw std::invalid_argument("state: Sigma count != K");
  for (const Mat& S : Sigma) {
    if (S.rows() != hyper.p || S.cols() != hyper.p)
      throw std::invalid_argument("state: Sigma_k must be p x p");
    if (!S.isApprox(S.transpose(), 1e-9))
      throw std::invalid_argument("state: Sigma_k must be symmetric");
    if (Eigen::LLT<Mat>(S).info() != Eigen::Success)
      throw std::invalid_argument("state: Sigma_k must be positive-definite");
  }
  for (int i = 0; i < N; ++i)
    if (!(sigma2[i] > 0.0)) throw std::invalid_argument("state: sigma2 must be > 0");
  sticks.validate();
  if (!(b > 0.0) || !(b < hyper.D))
    throw std::invalid_argument("state: b must lie in (0, D)");
}

double mvn_logpdf(const Vec& x, const Vec& mean, const Mat& cov) {
  Eigen::LLT<Mat> llt(cov);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("mvn_logpdf: covariance factorization failed");
  const int p = static_cast<int>(x.size());
  Vec diff = x - mean;
  Vec half = llt.matrixL().solve(diff);
  double logdet = 0.0;
  for (int i = 0; i < p; ++i) logdet += std::log(llt.matrixL()(i, i));
  return -0.5 * p * kLog2Pi - logdet - 0.5 * half.squaredNorm();
}

double local_log_likelihood(int i, const Vec& beta, const ChainState& state,
                            const SpatialDataset& data, const SpatialWeights& W) {
  const int n = data.n();
  const double s2 = state.sigma2[i];
  double ll = 0.0;
  bool any = false;
  for (int j = 0; j < n; ++j) {
    const double w = W.w(i, j);
    if (w <= 0.0) continue;
    any = true;
    const double r = data.y[j] - data.X.row(j).dot(beta);
    ll += -0.5 * (kLog2Pi + std::log(s2 / w)) - w * r * r / (2.0 * s2);
  }
  if (!any) throw std::runtime_error("local_log_likelihood: all weights zero at location");
  return ll;
}

double log_posterior_beta(int k, const Vec& beta, const ChainState& state,
                          const SpatialDataset& data, const SpatialWeights& W) {
  if (k < 0 || k >= state.K()) throw std::invalid_argument("log_posterior_beta: bad cluster");
  double lp = mvn_logpdf(beta, state.mu.col(k), state.Sigma[k]);
  const int n = data.n();
  for (int i = 0; i < n; ++i)
    if (state.z[i] == k) lp += local_log_likelihood(i, beta, state, data, W);
  return lp;
}

Vec grad_log_posterior_beta(int k, const Vec& beta, const ChainState& state,
                            const SpatialDataset& data, const SpatialWeights& W) {
  if (k < 0 || k >= state.K()) throw std::invalid_argument("grad_log_posterior_beta: bad cluster");
  const int n = data.n();
  Vec grad = Vec::Zero(state.p());
  for (int i = 0; i < n; ++i) {
    if (state.z[i] != k) continue;
    const double inv_s2 = 1.0 / state.sigma2[i];
    for (int j = 0; j < n; ++j) {
      const double w = W.w(i, j);
      if (w <= 0.0) continue;
      const double r = data.y[j] - data.X.row(j).dot(beta);
      grad += (w * inv_s2 * r) * data.X.row(j).transpose();
    }
  }
  Eigen::LLT<Mat> llt(state.Sigma[k]);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("grad_log_posterior_beta: Sigma factorization failed");
  grad -= llt.solve(beta - state.mu.col(k));
  return grad;
}

Vec pointwise_log_likelihood(const ChainState& state, const SpatialDataset& data,
                             const SpatialWeights& W) {
  const int n = data.n();
  Vec ll(n);
  for (int i = 0; i < n; ++i)
    ll[i] = local_log_likelihood(i, state.beta.col(state.z[i]), state, data, W);
  return ll;
}

}  // namespace sdpreg
