#pragma once

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <vector>

namespace sdpreg {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Observed data: locations, responses, design matrix and the adjacency
/// graph over location indices 0..n-1.
struct SpatialDataset {
  Mat coords;                              // n x 2, planar or (lon, lat) in degrees
  Vec y;                                   // n
  Mat X;                                   // n x p
  std::vector<std::array<int, 2>> edges;   // undirected, zero-based, no self-loops
  std::optional<std::vector<int>> true_labels;  // simulation ground truth

  int n() const { return static_cast<int>(y.size()); }
  int p() const { return static_cast<int>(X.cols()); }

  std::vector<std::vector<int>> adjacency_lists() const;

  // Throws std::invalid_argument on any violated invariant.
  void validate(bool lonlat = false) const;
};

}  // namespace sdpreg
