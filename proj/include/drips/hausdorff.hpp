#pragma once

#include <algorithm>
#include <limits>
#include <utility>
#include <vector>

#include "drips/metric.hpp"
#include "drips/point_cloud.hpp"

namespace drips {

// Injective assignment of a source subset into a target cloud; bottleneck is
// the largest assigned distance.
struct subset_witness {
  std::vector<std::pair<int, int>> pairs;  // (source index, target index)
  double bottleneck = 0.0;
};

namespace detail {

// Kuhn's augmenting path over edges with distance <= threshold. Adjacency is
// pre-sorted by (distance, target index) so results are deterministic.
inline bool try_augment(int src, double threshold,
                        const std::vector<std::vector<std::pair<double, int>>>& adj,
                        std::vector<int>& target_of, std::vector<int>& source_of,
                        std::vector<char>& visited) {
  for (const auto& [d, t] : adj[src]) {
    if (d > threshold) break;
    if (visited[t]) continue;
    visited[t] = 1;
    if (source_of[t] < 0 ||
        try_augment(source_of[t], threshold, adj, target_of, source_of, visited)) {
      target_of[src] = t;
      source_of[t] = src;
      return true;
    }
  }
  return false;
}

inline bool feasible(double threshold, int nsrc, int ntgt,
                     const std::vector<std::vector<std::pair<double, int>>>& adj,
                     std::vector<int>& target_of, std::vector<int>& source_of) {
  target_of.assign(nsrc, -1);
  source_of.assign(ntgt, -1);
  std::vector<char> visited(ntgt);
  for (int s = 0; s < nsrc; ++s) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!try_augment(s, threshold, adj, target_of, source_of, visited)) return false;
  }
  return true;
}

}  // namespace detail

// Minimum-bottleneck injective matching of `subset` (row indices of dm) into
// the target (column indices). Binary search over candidate distances with
// augmenting-path feasibility checks; single-valued by the (distance, target
// index) tie-break.
inline subset_witness bottleneck_inject(const std::vector<int>& subset,
                                        const cross_distance_matrix& dm) {
  const int nsrc = static_cast<int>(subset.size());
  const int ntgt = dm.cols;
  if (nsrc > ntgt)
    throw std::invalid_argument("bottleneck_inject: subset larger than target");

  std::vector<std::vector<std::pair<double, int>>> adj(nsrc);
  std::vector<double> candidates;
  candidates.reserve(std::size_t(nsrc) * ntgt);
  for (int s = 0; s < nsrc; ++s) {
    adj[s].reserve(ntgt);
    for (int t = 0; t < ntgt; ++t) {
      const double d = dm(subset[s], t);
      adj[s].emplace_back(d, t);
      candidates.push_back(d);
    }
    std::sort(adj[s].begin(), adj[s].end());
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<int> target_of, source_of;
  int lo = 0, hi = static_cast<int>(candidates.size()) - 1;
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (detail::feasible(candidates[mid], nsrc, ntgt, adj, target_of, source_of))
      hi = mid;
    else
      lo = mid + 1;
  }
  detail::feasible(candidates[lo], nsrc, ntgt, adj, target_of, source_of);

  subset_witness w;
  w.bottleneck = 0.0;
  for (int s = 0; s < nsrc; ++s) {
    w.pairs.emplace_back(subset[s], target_of[s]);
    w.bottleneck = std::max(w.bottleneck, dm(subset[s], target_of[s]));
  }
  return w;
}

// Symmetric Hausdorff distance between two clouds of the same dimension.
inline double hausdorff_distance(const point_cloud& a, const point_cloud& b, metric m) {
  const cross_distance_matrix cm = cross_distances(a, b, m);
  double d_ab = 0;
  for (int i = 0; i < cm.rows; ++i) {
    double nearest = std::numeric_limits<double>::infinity();
    for (int j = 0; j < cm.cols; ++j) nearest = std::min(nearest, cm(i, j));
    d_ab = std::max(d_ab, nearest);
  }
  double d_ba = 0;
  for (int j = 0; j < cm.cols; ++j) {
    double nearest = std::numeric_limits<double>::infinity();
    for (int i = 0; i < cm.rows; ++i) nearest = std::min(nearest, cm(i, j));
    d_ba = std::max(d_ba, nearest);
  }
  return std::max(d_ab, d_ba);
}

// Worst (k+1)-subset over both directions, with its optimal matching. This is
// the Hausdorff distance between the spaces of (k+1)-tuples of distinct
// points in the sup product metric: tuple order is irrelevant there, so each
// distinct tuple is a subset and its nearest distinct tuple is the
// minimum-bottleneck injective matching into the other cloud.
struct config_distance_witness {
  double value = 0.0;
  bool subset_in_second = false;  // subset indexes the second cloud
  std::vector<int> subset;
  subset_witness matching;
};

namespace detail {

// max over (k+1)-subsets of the source cloud of the min-bottleneck matching
// into the target cloud.
inline void directed_config(const point_cloud& src, const point_cloud& tgt, int k,
                            metric m, bool src_is_second, config_distance_witness& best) {
  const cross_distance_matrix cm = cross_distances(src, tgt, m);
  const int n = src.size(), take = k + 1;
  std::vector<int> comb(take);
  for (int i = 0; i < take; ++i) comb[i] = i;
  while (true) {
    subset_witness w = bottleneck_inject(comb, cm);
    if (w.bottleneck > best.value) {
      best.value = w.bottleneck;
      best.subset_in_second = src_is_second;
      best.subset = comb;
      best.matching = std::move(w);
    }
    int i = take - 1;
    while (i >= 0 && comb[i] == n - take + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < take; ++j) comb[j] = comb[j - 1] + 1;
  }
}

}  // namespace detail

inline config_distance_witness config_hausdorff_witness(const point_cloud& x,
                                                        const point_cloud& y, int k,
                                                        metric m) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (k + 1 > x.size() || k + 1 > y.size())
    throw std::invalid_argument("k+1 exceeds a cloud size");
  config_distance_witness best;
  best.value = -1.0;
  detail::directed_config(x, y, k, m, false, best);
  detail::directed_config(y, x, k, m, true, best);
  if (best.value < 0) best.value = 0;
  return best;
}

inline double config_hausdorff_distance(const point_cloud& x, const point_cloud& y, int k,
                                        metric m) {
  return config_hausdorff_witness(x, y, k, m).value;
}

}  // namespace drips
