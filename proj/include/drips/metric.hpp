#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "drips/common.hpp"
#include "drips/point_cloud.hpp"

namespace drips {

enum class metric { euclidean, manhattan, chebyshev };

inline metric parse_metric(const std::string& name) {
  if (name == "euclidean") return metric::euclidean;
  if (name == "manhattan") return metric::manhattan;
  if (name == "chebyshev") return metric::chebyshev;
  throw std::invalid_argument("unknown metric: " + name);
}

inline std::string metric_name(metric m) {
  switch (m) {
    case metric::euclidean: return "euclidean";
    case metric::manhattan: return "manhattan";
    case metric::chebyshev: return "chebyshev";
  }
  return "?";
}

inline double point_distance(const std::vector<double>& a,
                             const std::vector<double>& b, metric m) {
  double acc = 0;
  switch (m) {
    case metric::euclidean:
      for (std::size_t i = 0; i < a.size(); ++i) acc += (a[i] - b[i]) * (a[i] - b[i]);
      return std::sqrt(acc);
    case metric::manhattan:
      for (std::size_t i = 0; i < a.size(); ++i) acc += std::abs(a[i] - b[i]);
      return acc;
    case metric::chebyshev:
      for (std::size_t i = 0; i < a.size(); ++i) acc = std::max(acc, std::abs(a[i] - b[i]));
      return acc;
  }
  return acc;
}

// Symmetric pairwise distances with zero diagonal.
struct distance_matrix {
  int n = 0;
  metric m = metric::euclidean;
  std::vector<double> entries;  // row-major n*n

  double operator()(int i, int j) const { return entries[std::size_t(i) * n + j]; }

  bool operator==(const distance_matrix&) const = default;
};

inline distance_matrix compute_distance_matrix(const point_cloud& cloud, metric m) {
  distance_matrix dm;
  dm.n = cloud.size();
  dm.m = m;
  dm.entries.assign(std::size_t(dm.n) * dm.n, 0.0);
  for (int i = 0; i < dm.n; ++i)
    for (int j = i + 1; j < dm.n; ++j) {
      const double d = point_distance(cloud.points[i], cloud.points[j], m);
      dm.entries[std::size_t(i) * dm.n + j] = d;
      dm.entries[std::size_t(j) * dm.n + i] = d;
    }
  return dm;
}

// Distances between points of two clouds; rows index `a`, columns index `b`.
struct cross_distance_matrix {
  int rows = 0, cols = 0;
  std::vector<double> entries;

  double operator()(int i, int j) const { return entries[std::size_t(i) * cols + j]; }
};

inline cross_distance_matrix cross_distances(const point_cloud& a, const point_cloud& b,
                                             metric m) {
  if (a.dimension() != b.dimension())
    throw data_error("dimension mismatch between point clouds");
  cross_distance_matrix cm;
  cm.rows = a.size();
  cm.cols = b.size();
  cm.entries.resize(std::size_t(cm.rows) * cm.cols);
  for (int i = 0; i < cm.rows; ++i)
    for (int j = 0; j < cm.cols; ++j)
      cm.entries[std::size_t(i) * cm.cols + j] =
          point_distance(a.points[i], b.points[j], m);
  return cm;
}

// Strictly increasing scales starting at 0; contains every off-diagonal
// pairwise distance after exact-equality deduplication. These are the only
// scales at which vertex sets or partitions can change.
struct scale_grid {
  std::vector<double> scales;

  int size() const { return static_cast<int>(scales.size()); }
  double operator[](int i) const { return scales[i]; }

  // Largest index with scales[i] <= s. Requires s >= 0 (= scales[0]).
  int floor_index(double s) const {
    int lo = 0, hi = size() - 1;
    while (lo < hi) {
      int mid = (lo + hi + 1) / 2;
      if (scales[mid] <= s) lo = mid; else hi = mid - 1;
    }
    return lo;
  }

  bool operator==(const scale_grid&) const = default;
};

// {0} together with all pairwise distances, sorted and deduplicated by exact
// equality. With epsilon_merge > 0, runs of values whose consecutive gaps are
// <= epsilon collapse to the run minimum.
inline scale_grid phase_change_scales(const distance_matrix& dm,
                                      double epsilon_merge = 0.0) {
  std::vector<double> vals;
  vals.push_back(0.0);
  for (int i = 0; i < dm.n; ++i)
    for (int j = i + 1; j < dm.n; ++j) vals.push_back(dm(i, j));
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  if (epsilon_merge > 0.0) {
    // Fold each value into the previous kept one when the gap is <= epsilon.
    // Nonzero distances never fold into the base scale 0.
    std::vector<double> merged;
    for (double v : vals) {
      if (!merged.empty() && merged.back() != 0.0 && v - merged.back() <= epsilon_merge)
        continue;
      merged.push_back(v);
    }
    vals = std::move(merged);
  }
  return scale_grid{std::move(vals)};
}

}  // namespace drips
