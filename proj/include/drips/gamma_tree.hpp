#pragma once

#include <span>
#include <vector>

#include "drips/degree_rips.hpp"
#include "drips/metric.hpp"

namespace drips {

// A component at a grid scale: (scale index, canonical block label). The same
// underlying component appears once per scale it persists through; lineage
// links consecutive appearances.
struct gamma_node {
  int scale_index = 0;
  int label = 0;

  auto operator<=>(const gamma_node&) const = default;
};

// The component hierarchy over the phase-change grid: one partition per grid
// scale plus lineage. Partitions at small scales may be empty; for k >= n the
// whole tree is empty.
struct gamma_tree {
  scale_grid grid;
  int k = 0;
  std::vector<partition> partitions;  // aligned with grid.scales

  int num_scales() const { return grid.size(); }

  bool all_empty() const {
    for (const auto& p : partitions)
      if (!p.empty()) return false;
    return true;
  }

  // Label of the block containing `point` at scale index i, or -1.
  int label_at(int scale_index, int point) const {
    return partitions[scale_index].point_block[point];
  }

  bool operator==(const gamma_tree&) const = default;
};

inline gamma_tree build_gamma(const distance_matrix& dm, int k,
                              double epsilon_merge = 0.0) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  gamma_tree t;
  t.grid = phase_change_scales(dm, epsilon_merge);
  t.k = k;
  t.partitions.reserve(t.grid.size());
  for (int i = 0; i < t.grid.size(); ++i)
    t.partitions.push_back(components_at(dm, t.grid[i], k));
  return t;
}

inline bool valid_node(const gamma_tree& t, gamma_node n) {
  if (n.scale_index < 0 || n.scale_index >= t.num_scales()) return false;
  const auto& pb = t.partitions[n.scale_index].point_block;
  return n.label >= 0 && n.label < static_cast<int>(pb.size()) &&
         pb[n.label] == n.label;
}

inline void require_node(const gamma_tree& t, gamma_node n) {
  if (!valid_node(t, n))
    throw std::invalid_argument("invalid hierarchy node (scale_index=" +
                                std::to_string(n.scale_index) +
                                ", label=" + std::to_string(n.label) + ")");
}

// Lineage image of node n's block at scale index j >= n.scale_index. The
// label point is a member of every block above it, so one lookup suffices.
inline int ancestor_label(const gamma_tree& t, gamma_node n, int j) {
  return t.label_at(j, n.label);
}

// (s,[x]) <= (t,[y]): scale order plus lineage inclusion.
inline bool node_leq(const gamma_tree& t, gamma_node a, gamma_node b) {
  require_node(t, a);
  require_node(t, b);
  if (a.scale_index > b.scale_index) return false;
  return ancestor_label(t, a, b.scale_index) == b.label;
}

struct no_upper_bound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Least upper bound: the node at the smallest grid scale where the two
// lineages coincide. Simultaneous walk up the grid.
inline gamma_node join(const gamma_tree& t, gamma_node a, gamma_node b) {
  require_node(t, a);
  require_node(t, b);
  for (int j = std::max(a.scale_index, b.scale_index); j < t.num_scales(); ++j) {
    const int la = ancestor_label(t, a, j);
    const int lb = ancestor_label(t, b, j);
    if (la == lb) return gamma_node{j, la};
  }
  throw no_upper_bound("nodes have no common upper bound");
}

inline gamma_node join_many(const gamma_tree& t, std::span<const gamma_node> nodes) {
  if (nodes.empty()) throw std::invalid_argument("join_many: empty node list");
  gamma_node acc = nodes.front();
  require_node(t, acc);
  for (std::size_t i = 1; i < nodes.size(); ++i) acc = join(t, acc, nodes[i]);
  return acc;
}

// All nodes of the tree, ordered by (scale_index, label).
inline std::vector<gamma_node> all_nodes(const gamma_tree& t) {
  std::vector<gamma_node> out;
  for (int i = 0; i < t.num_scales(); ++i)
    for (const auto& b : t.partitions[i].blocks)
      out.push_back(gamma_node{i, b.front()});
  return out;
}

// Ultrametric d([x],[y]) = u - s on the blocks of one slice, where u is the
// join scale and s the slice scale.
struct slice_matrix {
  int scale_index = 0;
  std::vector<int> labels;
  std::vector<double> values;  // row-major over labels

  double operator()(int i, int j) const {
    return values[std::size_t(i) * labels.size() + j];
  }
};

inline slice_matrix slice_ultrametric(const gamma_tree& t, int scale_index) {
  if (scale_index < 0 || scale_index >= t.num_scales())
    throw std::invalid_argument("scale index out of range");
  const partition& p = t.partitions[scale_index];
  if (p.empty()) throw data_error("empty slice at scale index " +
                                  std::to_string(scale_index));
  slice_matrix sm;
  sm.scale_index = scale_index;
  for (const auto& b : p.blocks) sm.labels.push_back(b.front());
  const int nb = static_cast<int>(sm.labels.size());
  sm.values.assign(std::size_t(nb) * nb, 0.0);
  const double s = t.grid[scale_index];
  for (int i = 0; i < nb; ++i)
    for (int j = i + 1; j < nb; ++j) {
      const gamma_node u = join(t, gamma_node{scale_index, sm.labels[i]},
                                gamma_node{scale_index, sm.labels[j]});
      const double d = t.grid[u.scale_index] - s;
      sm.values[std::size_t(i) * nb + j] = d;
      sm.values[std::size_t(j) * nb + i] = d;
    }
  return sm;
}

}  // namespace drips
