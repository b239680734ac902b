#include "sdpreg/stick_breaking.hpp"

#include <cmath>
#include <stdexcept>

namespace sdpreg {

double KernelSpec::initial_eps() const {
  switch (bandwidth_mode) {
    case BandwidthMode::FixedLambda: return lambda;
    case BandwidthMode::ExponentialLambda: return 1.0 / lambda;  // Exp(rate) mean
    case BandwidthMode::FixedLambdaSqHalf: return lambda * lambda / 2.0;
    case BandwidthMode::InverseGamma_1p5_LambdaSqHalf:
      return lambda * lambda;  // IG(1.5, lambda^2/2) mean
  }
  throw std::logic_error("unreachable");
}

double KernelSpec::log_prior_eps(double eps) const {
  if (eps <= 0.0) return -std::numeric_limits<double>::infinity();
  switch (bandwidth_mode) {
    case BandwidthMode::ExponentialLambda:
      return std::log(lambda) - lambda * eps;
    case BandwidthMode::InverseGamma_1p5_LambdaSqHalf: {
      const double a = 1.5, s = lambda * lambda / 2.0;
      return a * std::log(s) - std::lgamma(a) - (a + 1.0) * std::log(eps) - s / eps;
    }
    default:
      throw std::logic_error("log_prior_eps: bandwidth is fixed in this mode");
  }
}

void KernelSpec::validate() const {
  if (!(lambda > 0.0)) throw std::invalid_argument("kernel: lambda must be > 0");
  const bool uniform_family = family == KernelFamily::Uniform;
  switch (bandwidth_mode) {
    case BandwidthMode::FixedLambda:
    case BandwidthMode::ExponentialLambda:
      if (!uniform_family)
        throw std::invalid_argument("kernel: this bandwidth mode pairs with the uniform family");
      break;
    case BandwidthMode::FixedLambdaSqHalf:
    case BandwidthMode::InverseGamma_1p5_LambdaSqHalf:
      if (uniform_family)
        throw std::invalid_argument(
            "kernel: this bandwidth mode pairs with the squared-exponential family");
      break;
  }
}

void SticksAndKnots::validate() const {
  const int k = K();
  if (k < 1) throw std::invalid_argument("sticks: K must be >= 1");
  if (psi.rows() != k || psi.cols() != 2 || eps.rows() != k || eps.cols() != 2)
    throw std::invalid_argument("sticks: psi/eps must be K x 2");
  if (V[k - 1] != 1.0) throw std::invalid_argument("sticks: final stick must equal 1");
  for (int i = 0; i < k; ++i) {
    if (!(V[i] > 0.0) || V[i] > 1.0)
      throw std::invalid_argument("sticks: V entries must lie in (0,1]");
    for (int j = 0; j < 2; ++j) {
      if (psi(i, j) < 0.0 || psi(i, j) > 1.0)
        throw std::invalid_argument("sticks: knots must lie in the unit square");
      if (!(eps(i, j) > 0.0))
        throw std::invalid_argument("sticks: bandwidths must be > 0");
    }
  }
}

SticksAndKnots SticksAndKnots::init(int K, const KernelSpec& spec, Rng& rng) {
  if (K < 1) throw std::invalid_argument("sticks: K must be >= 1");
  SticksAndKnots sk;
  sk.V = Vec::Constant(K, 0.5);
  sk.V[K - 1] = 1.0;
  sk.psi.resize(K, 2);
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < 2; ++j) sk.psi(i, j) = rng.uniform();
  sk.eps = Mat::Constant(K, 2, spec.initial_eps());
  return sk;
}

double kernel_value(const KernelSpec& spec, const Eigen::Vector2d& s,
                    const Eigen::Vector2d& psi_i, const Eigen::Vector2d& eps_i) {
  if (!(eps_i[0] > 0.0) || !(eps_i[1] > 0.0))
    throw std::invalid_argument("kernel_value: eps components must be > 0");
  double v = 1.0;
  for (int j = 0; j < 2; ++j) {
    const double off = s[j] - psi_i[j];
    if (spec.family == KernelFamily::Uniform)
      v *= (std::abs(off) < eps_i[j] / 2.0) ? 1.0 : 0.0;
    else
      v *= std::exp(-off * off / (2.0 * eps_i[j] * eps_i[j]));
  }
  return v;
}

Mat kernel_matrix(const SticksAndKnots& sk, const KernelSpec& spec, const Mat& unit_coords) {
  const int n = static_cast<int>(unit_coords.rows());
  const int K = sk.K();
  Mat l(n, K);
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector2d s = unit_coords.row(i);
    for (int k = 0; k < K - 1; ++k)
      l(i, k) = kernel_value(spec, s, sk.psi.row(k), sk.eps.row(k));
    l(i, K - 1) = 1.0;  // truncation stick absorbs the remainder
  }
  return l;
}

StickBreakingProbs probs_from_kernels(const Mat& kernels, const Vec& V) {
  const int n = static_cast<int>(kernels.rows());
  const int K = static_cast<int>(V.size());
  Mat p(n, K);
  for (int i = 0; i < n; ++i) {
    double remain = 1.0;
    for (int k = 0; k < K; ++k) {
      const double vk = (k == K - 1) ? 1.0 : kernels(i, k) * V[k];
      p(i, k) = vk * remain;
      remain *= (1.0 - vk);
    }
  }
  return StickBreakingProbs{std::move(p)};
}

StickBreakingProbs assignment_probs(const SticksAndKnots& sk, const KernelSpec& spec,
                                    const Mat& unit_coords) {
  sk.validate();
  return probs_from_kernels(kernel_matrix(sk, spec, unit_coords), sk.V);
}

UnitSquareMap UnitSquareMap::fit(const Mat& coords) {
  UnitSquareMap m;
  for (int j = 0; j < 2; ++j) {
    m.lo[j] = coords.col(j).minCoeff();
    double hi = coords.col(j).maxCoeff();
    m.range[j] = (hi > m.lo[j]) ? hi - m.lo[j] : 1.0;
  }
  return m;
}

Mat UnitSquareMap::to_unit(const Mat& coords) const {
  Mat u = coords;
  for (int j = 0; j < 2; ++j)
    u.col(j) = (u.col(j).array() - lo[j]) / range[j];
  return u;
}

Eigen::Vector2d UnitSquareMap::from_unit(const Eigen::Vector2d& s) const {
  return {lo[0] + s[0] * range[0], lo[1] + s[1] * range[1]};
}

}  // namespace sdpreg
