#pragma once

#include <numeric>
#include <vector>

#include "drips/metric.hpp"

namespace drips {

// Vertices of the degree-Rips 1-skeleton at (s, k): points with at least k
// distinct neighbors within distance <= s (closed inequality).
struct vertex_set {
  double scale = 0;
  int k = 0;
  std::vector<int> members;  // sorted point indices
};

inline vertex_set vertices_at(const distance_matrix& dm, double s, int k) {
  vertex_set vs;
  vs.scale = s;
  vs.k = k;
  for (int i = 0; i < dm.n; ++i) {
    int neighbors = 0;
    for (int j = 0; j < dm.n && neighbors < k; ++j)
      if (j != i && dm(i, j) <= s) ++neighbors;
    if (neighbors >= k) vs.members.push_back(i);
  }
  return vs;
}

// Path components of the degree-Rips 1-skeleton at (s, k). Blocks are
// disjoint sorted index sets covering the vertex set, ordered and labeled by
// their minimum member.
struct partition {
  double scale = 0;
  int k = 0;
  std::vector<std::vector<int>> blocks;
  std::vector<int> point_block;  // per point: block label, or -1 if not a vertex

  bool empty() const { return blocks.empty(); }
  int label_of(int block_index) const { return blocks[block_index].front(); }

  const std::vector<int>* block_with_label(int label) const {
    for (const auto& b : blocks)
      if (b.front() == label) return &b;
    return nullptr;
  }

  bool operator==(const partition&) const = default;
};

inline partition components_at(const distance_matrix& dm, double s, int k) {
  const vertex_set vs = vertices_at(dm, s, k);
  partition p;
  p.scale = s;
  p.k = k;
  p.point_block.assign(dm.n, -1);

  std::vector<int> root(dm.n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int i) {
    while (root[i] != i) {
      root[i] = root[root[i]];
      i = root[i];
    }
    return i;
  };
  std::vector<char> is_vertex(dm.n, 0);
  for (int v : vs.members) is_vertex[v] = 1;
  for (std::size_t a = 0; a < vs.members.size(); ++a)
    for (std::size_t b = a + 1; b < vs.members.size(); ++b) {
      const int i = vs.members[a], j = vs.members[b];
      if (dm(i, j) <= s) {
        int ri = find(i), rj = find(j);
        if (ri != rj) root[std::max(ri, rj)] = std::min(ri, rj);
      }
    }

  // group by root; roots are minimal in their class, so iterating in index
  // order yields blocks sorted by label
  std::vector<int> block_of(dm.n, -1);
  for (int v : vs.members) {
    const int r = find(v);
    if (block_of[r] < 0) {
      block_of[r] = static_cast<int>(p.blocks.size());
      p.blocks.emplace_back();
    }
    p.blocks[block_of[r]].push_back(v);
  }
  for (const auto& b : p.blocks)
    for (int v : b) p.point_block[v] = b.front();
  return p;
}

}  // namespace drips
