#pragma once

// Independent brute-force reference implementations used only by tests.
// These deliberately avoid the library's union-find / lineage machinery.

#include <algorithm>
#include <limits>
#include <vector>

#include "drips/branch_tree.hpp"
#include "drips/degree_rips.hpp"
#include "drips/gamma_tree.hpp"
#include "drips/metric.hpp"

namespace oracle {

// Path components via Warshall transitive closure over the full adjacency
// relation restricted to the degree-filtered vertex set.
inline drips::partition brute_force_components(const drips::distance_matrix& dm,
                                               double s, int k) {
  const int n = dm.n;
  std::vector<char> vertex(n, 0);
  for (int i = 0; i < n; ++i) {
    int count = 0;
    for (int j = 0; j < n; ++j)
      if (j != i && dm(i, j) <= s) ++count;
    if (count >= k) vertex[i] = 1;
  }
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      reach[i][j] = vertex[i] && vertex[j] && (i == j || dm(i, j) <= s);
  for (int via = 0; via < n; ++via)
    for (int i = 0; i < n; ++i)
      if (reach[i][via])
        for (int j = 0; j < n; ++j)
          if (reach[via][j]) reach[i][j] = 1;

  drips::partition p;
  p.scale = s;
  p.k = k;
  p.point_block.assign(n, -1);
  std::vector<char> taken(n, 0);
  for (int i = 0; i < n; ++i) {
    if (!vertex[i] || taken[i]) continue;
    std::vector<int> block;
    for (int j = 0; j < n; ++j)
      if (reach[i][j]) {
        block.push_back(j);
        taken[j] = 1;
      }
    for (int v : block) p.point_block[v] = block.front();
    p.blocks.push_back(std::move(block));
  }
  return p;
}

namespace detail {

inline void ordered_tuples(int n, int arity, std::vector<int>& cur,
                           std::vector<char>& used,
                           std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == arity) {
    out.push_back(cur);
    return;
  }
  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    used[i] = 1;
    cur.push_back(i);
    ordered_tuples(n, arity, cur, used, out);
    cur.pop_back();
    used[i] = 0;
  }
}

}  // namespace detail

// Hausdorff distance between the distinct-(k+1)-tuple spaces, enumerated
// literally with the sup product metric.
inline double naive_config_hausdorff(const drips::point_cloud& x,
                                     const drips::point_cloud& y, int k,
                                     drips::metric m) {
  const int arity = k + 1;
  std::vector<std::vector<int>> tx, ty;
  std::vector<int> cur;
  std::vector<char> used_x(x.size(), 0), used_y(y.size(), 0);
  detail::ordered_tuples(x.size(), arity, cur, used_x, tx);
  detail::ordered_tuples(y.size(), arity, cur, used_y, ty);

  auto sup_dist = [&](const std::vector<int>& a, const drips::point_cloud& ca,
                      const std::vector<int>& b, const drips::point_cloud& cb) {
    double d = 0;
    for (int i = 0; i < arity; ++i)
      d = std::max(d, drips::point_distance(ca.points[a[i]], cb.points[b[i]], m));
    return d;
  };
  auto directed = [&](const std::vector<std::vector<int>>& from,
                      const drips::point_cloud& cf,
                      const std::vector<std::vector<int>>& to,
                      const drips::point_cloud& ct) {
    double worst = 0;
    for (const auto& a : from) {
      double nearest = std::numeric_limits<double>::infinity();
      for (const auto& b : to) nearest = std::min(nearest, sup_dist(a, cf, b, ct));
      worst = std::max(worst, nearest);
    }
    return worst;
  };
  return std::max(directed(tx, x, ty, y), directed(ty, y, tx, x));
}

// Single-linkage merge heights: for each pair, the smallest grid scale at
// which the two points are connected in the plain threshold graph. BFS per
// scale; no union-find.
inline std::vector<std::vector<double>> naive_single_linkage(
    const drips::distance_matrix& dm) {
  const int n = dm.n;
  const drips::scale_grid grid = drips::phase_change_scales(dm);
  std::vector<std::vector<double>> heights(
      n, std::vector<double>(n, std::numeric_limits<double>::infinity()));
  for (int i = 0; i < n; ++i) heights[i][i] = 0;
  for (int gi = 0; gi < grid.size(); ++gi) {
    const double s = grid[gi];
    std::vector<int> comp(n, -1);
    for (int start = 0; start < n; ++start) {
      if (comp[start] >= 0) continue;
      std::vector<int> queue{start};
      comp[start] = start;
      while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        for (int w = 0; w < n; ++w)
          if (comp[w] < 0 && dm(v, w) <= s) {
            comp[w] = start;
            queue.push_back(w);
          }
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (comp[i] == comp[j] && heights[i][j] > s) heights[i][j] = s;
  }
  return heights;
}

// Order relation recomputed from raw block member lists (subset inclusion),
// bypassing the point_block lookup path.
inline bool naive_leq(const drips::gamma_tree& t, drips::gamma_node a,
                      drips::gamma_node b) {
  if (a.scale_index > b.scale_index) return false;
  const std::vector<int>* ba = nullptr;
  for (const auto& blk : t.partitions[a.scale_index].blocks)
    if (blk.front() == a.label) ba = &blk;
  const std::vector<int>* bb = nullptr;
  for (const auto& blk : t.partitions[b.scale_index].blocks)
    if (blk.front() == b.label) bb = &blk;
  if (!ba || !bb) return false;
  return std::includes(bb->begin(), bb->end(), ba->begin(), ba->end());
}

// Minimal upper bound by scanning every node of every grid scale.
inline drips::gamma_node brute_force_join(const drips::gamma_tree& t,
                                          drips::gamma_node a, drips::gamma_node b) {
  for (int j = 0; j < t.num_scales(); ++j)
    for (const auto& blk : t.partitions[j].blocks) {
      const drips::gamma_node cand{j, blk.front()};
      if (naive_leq(t, a, cand) && naive_leq(t, b, cand)) return cand;
    }
  throw std::runtime_error("brute_force_join: no upper bound");
}

// Independent characterization of the maximal branch point below n: the
// join of every branch point below it.
inline drips::gamma_node max_branch_oracle(const drips::gamma_tree& t,
                                           const drips::branch_tree& bt,
                                           drips::gamma_node n) {
  std::vector<drips::gamma_node> below;
  for (const auto& b : bt.points)
    if (drips::node_leq(t, b.node, n)) below.push_back(b.node);
  return drips::join_many(t, below);
}

}  // namespace oracle
