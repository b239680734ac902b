#pragma once

#include "sdpreg/types.hpp"

namespace sdpreg {

inline constexpr double kEarthRadiusKm = 6371.0;

/// Pairwise distances between locations. Graph metric stores hop counts,
/// great-circle stores kilometres; +inf marks unreachable pairs.
struct DistanceMatrix {
  Mat d;

  static bool unreachable(double v) { return std::isinf(v); }
  int n() const { return static_cast<int>(d.rows()); }
};

/// Spatial weight structure: w(i,j) is the weight of observation j in the
/// local fit at location i. Entries lie in (0,1]; 0 only for unreachable pairs.
struct SpatialWeights {
  Mat w;
  double b = 0.0;  // bandwidth used to build w

  int n() const { return static_cast<int>(w.rows()); }
};

/// Hop-count shortest paths over the dataset adjacency; disconnected pairs
/// come back as +inf.
DistanceMatrix graph_distances(const SpatialDataset& data);

/// Haversine distances in km for (lon, lat) degree coordinates.
/// Throws if any latitude falls outside [-90, 90].
DistanceMatrix great_circle_distances(const Mat& coords);

/// w = 1 for d <= 1, exp(-d/b) beyond, 0 for unreachable. Throws for b <= 0.
SpatialWeights weight_matrix(const DistanceMatrix& d, double b);

}  // namespace sdpreg
