#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "drips/gamma_tree.hpp"

namespace drips {

enum class branch_condition { merge, birth };

inline std::string condition_name(branch_condition c) {
  return c == branch_condition::merge ? "merge" : "birth";
}

struct branch_point {
  gamma_node node;
  branch_condition condition = branch_condition::birth;

  bool operator==(const branch_point&) const = default;
};

// The sub-poset of branch points, ordered by (scale_index, label).
struct branch_tree {
  int k = 0;
  std::vector<branch_point> points;

  int size() const { return static_cast<int>(points.size()); }

  int index_of(gamma_node n) const {
    auto it = std::lower_bound(points.begin(), points.end(), n,
                               [](const branch_point& p, gamma_node q) {
                                 return p.node < q;
                               });
    if (it == points.end() || it->node != n) return -1;
    return static_cast<int>(it - points.begin());
  }

  bool contains(gamma_node n) const { return index_of(n) >= 0; }

  bool operator==(const branch_tree&) const = default;
};

namespace detail {

// Number of blocks at scale index i-1 whose lineage lands in the block
// labeled `label` at scale index i. At index 0 there is no previous scale.
inline int predecessor_count(const gamma_tree& t, int i, int label) {
  if (i == 0) return 0;
  int count = 0;
  for (const auto& b : t.partitions[i - 1].blocks)
    if (t.label_at(i, b.front()) == label) ++count;
  return count;
}

}  // namespace detail

// A block at scale index i is a branch point when at least two blocks merge
// into it from the previous grid scale, or when no block maps in at all (a
// birth; every block at the smallest grid index counts). A block reached by
// exactly one previous block is not a branch point even if it absorbs new
// vertices. Partitions are constant between phase-change numbers, so the
// consecutive-index comparison decides both conditions.
inline branch_tree extract_branch_points(const gamma_tree& t,
                                         bool include_min_scale_births = true) {
  branch_tree bt;
  bt.k = t.k;
  for (int i = 0; i < t.num_scales(); ++i) {
    for (const auto& b : t.partitions[i].blocks) {
      const int label = b.front();
      const int preds = detail::predecessor_count(t, i, label);
      if (preds >= 2) {
        bt.points.push_back({gamma_node{i, label}, branch_condition::merge});
      } else if (preds == 0) {
        if (i == 0 && !include_min_scale_births) continue;
        bt.points.push_back({gamma_node{i, label}, branch_condition::birth});
      }
    }
  }
  return bt;
}

// Join taken in the base hierarchy; the result is itself a branch point
// (closure under joins), enforced here.
inline gamma_node branch_join(const gamma_tree& t, const branch_tree& bt, gamma_node a,
                              gamma_node b) {
  if (!bt.contains(a) || !bt.contains(b))
    throw std::invalid_argument("branch_join: node is not a branch point");
  const gamma_node u = join(t, a, b);
  if (!bt.contains(u))
    throw std::logic_error("branch-point join closure violated");
  return u;
}

// The unique largest branch point <= n: walk the lineage backward until the
// current block is a branch point. A non-branch node has exactly one
// predecessor block, and every lineage starts at a birth.
inline gamma_node max_branch_below(const gamma_tree& t, const branch_tree& bt,
                                   gamma_node n) {
  require_node(t, n);
  gamma_node cur = n;
  while (!bt.contains(cur)) {
    if (cur.scale_index == 0)
      throw std::logic_error("no branch point below node");  // birth missing
    const partition& prev = t.partitions[cur.scale_index - 1];
    int pred_label = -1;
    for (int member : *t.partitions[cur.scale_index].block_with_label(cur.label)) {
      if (prev.point_block[member] >= 0) {
        pred_label = prev.point_block[member];
        break;
      }
    }
    if (pred_label < 0)
      throw std::logic_error("no branch point below node");  // birth missing
    cur = gamma_node{cur.scale_index - 1, pred_label};
  }
  return cur;
}

// Index into bt.points of the smallest branch point strictly above branch
// point `index`, or -1 for the terminal one.
inline int parent_branch_index(const gamma_tree& t, const branch_tree& bt, int index) {
  const gamma_node n = bt.points[index].node;
  for (int j = n.scale_index + 1; j < t.num_scales(); ++j) {
    const gamma_node up{j, ancestor_label(t, n, j)};
    const int idx = bt.index_of(up);
    if (idx >= 0) return idx;
  }
  return -1;
}

struct retraction_report {
  bool pass = true;
  long checked = 0;
  std::vector<std::string> failures;  // capped
};

namespace detail {

inline void record_failure(retraction_report& rep, const std::string& msg) {
  rep.pass = false;
  if (rep.failures.size() < 20) rep.failures.push_back(msg);
}

inline std::string node_desc(const gamma_tree& t, gamma_node n) {
  return "(s=" + format_double(t.grid[n.scale_index]) +
         ", block " + std::to_string(n.label) + ")";
}

}  // namespace detail

// Poset-level retraction evidence: max is below the identity, fixes branch
// points, and is monotone.
inline retraction_report retraction_check(const gamma_tree& t, const branch_tree& bt) {
  retraction_report rep;
  const std::vector<gamma_node> nodes = all_nodes(t);
  std::vector<gamma_node> max_of(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    max_of[i] = max_branch_below(t, bt, nodes[i]);
    ++rep.checked;
    if (!node_leq(t, max_of[i], nodes[i]))
      detail::record_failure(rep, "max not below node " + detail::node_desc(t, nodes[i]));
  }
  for (const branch_point& b : bt.points) {
    ++rep.checked;
    if (max_branch_below(t, bt, b.node) != b.node)
      detail::record_failure(rep, "max does not fix branch point " +
                                      detail::node_desc(t, b.node));
  }
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (i == j) continue;
      if (!node_leq(t, nodes[i], nodes[j])) continue;
      ++rep.checked;
      if (!node_leq(t, max_of[i], max_of[j]))
        detail::record_failure(rep, "max not monotone on " + detail::node_desc(t, nodes[i]) +
                                        " <= " + detail::node_desc(t, nodes[j]));
    }
  return rep;
}

}  // namespace drips
