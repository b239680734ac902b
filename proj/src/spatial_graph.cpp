#include "sdpreg/spatial_graph.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace sdpreg {

std::vector<std::vector<int>> SpatialDataset::adjacency_lists() const {
  std::vector<std::vector<int>> adj(n());
  for (const auto& e : edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  return adj;
}

void SpatialDataset::validate(bool lonlat) const {
  const int N = n();
  if (N < 1) throw std::invalid_argument("dataset: needs at least one location");
  if (X.rows() != N) throw std::invalid_argument("dataset: X row count != n");
  if (X.cols() < 1) throw std::invalid_argument("dataset: X needs p >= 1 columns");
  if (coords.rows() != N || coords.cols() != 2)
    throw std::invalid_argument("dataset: coords must be n x 2");
  if (!X.allFinite() || !y.allFinite() || !coords.allFinite())
    throw std::invalid_argument("dataset: non-finite entries");
  if (lonlat) {
    for (int i = 0; i < N; ++i)
      if (coords(i, 1) < -90.0 || coords(i, 1) > 90.0)
        throw std::invalid_argument("dataset: latitude outside [-90, 90]");
  }
  for (const auto& e : edges) {
    if (e[0] < 0 || e[0] >= N || e[1] < 0 || e[1] >= N)
      throw std::invalid_argument("dataset: edge references invalid index");
    if (e[0] == e[1]) throw std::invalid_argument("dataset: self-loop edge");
  }
  if (true_labels && static_cast<int>(true_labels->size()) != N)
    throw std::invalid_argument("dataset: true_labels length != n");
}

DistanceMatrix graph_distances(const SpatialDataset& data) {
  const int n = data.n();
  const double inf = std::numeric_limits<double>::infinity();
  const auto adj = data.adjacency_lists();

  Mat d = Mat::Constant(n, n, inf);
  std::vector<int> hops(n);
  std::queue<int> frontier;
  for (int src = 0; src < n; ++src) {
    std::fill(hops.begin(), hops.end(), -1);
    hops[src] = 0;
    frontier.push(src);
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop();
      for (int v : adj[u]) {
        if (hops[v] < 0) {
          hops[v] = hops[u] + 1;
          frontier.push(v);
        }
      }
    }
    for (int j = 0; j < n; ++j)
      if (hops[j] >= 0) d(src, j) = static_cast<double>(hops[j]);
  }
  return DistanceMatrix{std::move(d)};
}

namespace {

double haversine_km(double lon1, double lat1, double lon2, double lat2) {
  const double deg = M_PI / 180.0;
  const double dlat = (lat2 - lat1) * deg;
  const double dlon = (lon2 - lon1) * deg;
  const double a = std::sin(dlat / 2) * std::sin(dlat / 2) +
                   std::cos(lat1 * deg) * std::cos(lat2 * deg) *
                       std::sin(dlon / 2) * std::sin(dlon / 2);
  return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(a)));
}

}  // namespace

DistanceMatrix great_circle_distances(const Mat& coords) {
  const int n = static_cast<int>(coords.rows());
  for (int i = 0; i < n; ++i)
    if (coords(i, 1) < -90.0 || coords(i, 1) > 90.0)
      throw std::invalid_argument("great_circle_distances: latitude outside [-90, 90]");

  Mat d = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double km = haversine_km(coords(i, 0), coords(i, 1), coords(j, 0), coords(j, 1));
      d(i, j) = km;
      d(j, i) = km;
    }
  return DistanceMatrix{std::move(d)};
}

SpatialWeights weight_matrix(const DistanceMatrix& dist, double b) {
  if (!(b > 0.0)) throw std::invalid_argument("weight_matrix: bandwidth must be > 0");
  const int n = dist.n();
  Mat w(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double d = dist.d(i, j);
      if (DistanceMatrix::unreachable(d))
        w(i, j) = 0.0;
      else
        w(i, j) = (d <= 1.0) ? 1.0 : std::exp(-d / b);
    }
  return SpatialWeights{std::move(w), b};
}

}  // namespace sdpreg
