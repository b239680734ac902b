#include "sdpreg/rng.hpp"

#include <stdexcept>

namespace sdpreg {

Vec Rng::mvnormal(const Vec& mean, const Mat& cov) {
  Eigen::LLT<Mat> llt(cov);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("mvnormal: covariance factorization failed");
  return mean + llt.matrixL() * normal_vec(static_cast<int>(mean.size()));
}

Mat Rng::inverse_wishart(const Mat& scale, double dof) {
  const int p = static_cast<int>(scale.rows());
  if (dof <= p - 1) throw std::invalid_argument("inverse_wishart: dof must exceed p - 1");

  // Wishart(scale^-1, dof) via Bartlett, then invert the draw.
  Eigen::LLT<Mat> llt_scale(scale);
  if (llt_scale.info() != Eigen::Success)
    throw std::runtime_error("inverse_wishart: scale factorization failed");
  Mat scale_inv = llt_scale.solve(Mat::Identity(p, p));

  Eigen::LLT<Mat> llt(scale_inv);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("inverse_wishart: inverse-scale factorization failed");
  Mat L = llt.matrixL();

  Mat A = Mat::Zero(p, p);
  for (int i = 0; i < p; ++i) {
    // chi^2_{dof - i} as gamma(k/2, 2)
    A(i, i) = std::sqrt(gamma((dof - i) / 2.0, 2.0));
    for (int j = 0; j < i; ++j) A(i, j) = normal();
  }
  Mat LA = L * A;
  Mat W = LA * LA.transpose();

  Eigen::LLT<Mat> lltw(W);
  if (lltw.info() != Eigen::Success)
    throw std::runtime_error("inverse_wishart: draw factorization failed");
  Mat S = lltw.solve(Mat::Identity(p, p));
  return 0.5 * (S + S.transpose());  // symmetrize round-off
}

int Rng::categorical(const Vec& unnormalized) {
  const double total = unnormalized.sum();
  if (!(total > 0.0) || !std::isfinite(total))
    throw std::runtime_error("categorical: all masses zero or non-finite");
  double u = uniform() * total;
  double acc = 0.0;
  const int K = static_cast<int>(unnormalized.size());
  for (int k = 0; k < K; ++k) {
    acc += unnormalized[k];
    if (u <= acc) return k;
  }
  return K - 1;  // guard against round-off at the top end
}

}  // namespace sdpreg
