#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "drips/branch_tree.hpp"
#include "drips/gamma_tree.hpp"
#include "drips/hausdorff.hpp"

namespace drips {

// Raised when a requested shift radius r cannot realize the interleaving:
// some witness subset has no injective matching within bottleneck r. Carries
// the offending subset so reports can show what failed.
struct interleaving_construction_error : std::runtime_error {
  std::vector<int> subset;   // source point indices of the failing witness set
  bool subset_in_y = true;   // which cloud the subset indexes
  double required = 0.0;     // minimum achievable bottleneck for that subset
  double r = 0.0;

  interleaving_construction_error(const std::string& msg, std::vector<int> subset_,
                                  bool in_y, double required_, double r_)
      : std::runtime_error(msg), subset(std::move(subset_)), subset_in_y(in_y),
        required(required_), r(r_) {}
};

// Nested data sets X ⊆ Y with a shift radius r strictly above the
// configuration-space Hausdorff distance for the chosen k.
struct nested_pair {
  point_cloud x, y;
  std::vector<int> embedding;  // X index -> Y index, exact coordinate match
  int k = 0;
  double r = 0.0;
  metric m = metric::euclidean;
  double config_distance = 0.0;
};

inline nested_pair make_nested_pair(point_cloud x, point_cloud y, int k, metric m,
                                    std::optional<double> r = std::nullopt) {
  if (x.dimension() != y.dimension())
    throw data_error("dimension mismatch between X and Y");
  nested_pair p;
  p.k = k;
  p.m = m;
  p.embedding.reserve(x.size());
  for (int i = 0; i < x.size(); ++i) {
    int match = -1;
    for (int j = 0; j < y.size(); ++j)
      if (y.points[j] == x.points[i]) { match = j; break; }
    if (match < 0)
      throw data_error("X is not a subset of Y: point " + std::to_string(i) +
                       " of X has no exact match in Y");
    p.embedding.push_back(match);
  }
  const config_distance_witness cw = config_hausdorff_witness(x, y, k, m);
  p.config_distance = cw.value;
  if (r) {
    if (*r <= 0) throw std::invalid_argument("r must be positive");
    if (*r <= cw.value) {
      std::string subset_cloud = cw.subset_in_second ? "Y" : "X";
      std::string msg = "r=" + format_double(*r) +
                        " does not exceed the configuration Hausdorff distance " +
                        format_double(cw.value) + "; worst (k+1)-subset of " +
                        subset_cloud + " = {";
      for (std::size_t i = 0; i < cw.subset.size(); ++i)
        msg += (i ? "," : "") + std::to_string(cw.subset[i]);
      msg += "} needs bottleneck " + format_double(cw.value);
      throw interleaving_construction_error(msg, cw.subset, cw.subset_in_second,
                                            cw.value, *r);
    }
    p.r = *r;
  } else {
    p.r = cw.value + 1e-9;  // the radius must strictly exceed the distance
  }
  p.x = std::move(x);
  p.y = std::move(y);
  return p;
}

// The vertex-level map θ at one scale: each vertex y of L_{s,k}(Y) goes to a
// vertex of L_{s+2r,k}(X) within distance r, identically on X-points.
struct theta_map {
  double scale = 0.0;
  std::vector<int> assignment;           // per Y index: X index, or -1 off-domain
  std::vector<subset_witness> witnesses; // per Y index
};

inline theta_map theta_vertex_map(const nested_pair& p, double s,
                                  const distance_matrix& dmx,
                                  const distance_matrix& dmy,
                                  const cross_distance_matrix& y_to_x) {
  theta_map th;
  th.scale = s;
  th.assignment.assign(p.y.size(), -1);
  th.witnesses.assign(p.y.size(), {});

  std::vector<int> x_of_y(p.y.size(), -1);
  for (int i = 0; i < p.x.size(); ++i) x_of_y[p.embedding[i]] = i;

  const vertex_set vy = vertices_at(dmy, s, p.k);
  for (int y : vy.members) {
    if (x_of_y[y] >= 0) {
      th.assignment[y] = x_of_y[y];
      th.witnesses[y] = subset_witness{{{y, x_of_y[y]}}, 0.0};
      continue;
    }
    // witness tuple: y plus its k nearest distinct neighbors within s
    std::vector<std::pair<double, int>> near;
    for (int j = 0; j < dmy.n; ++j)
      if (j != y && dmy(y, j) <= s) near.emplace_back(dmy(y, j), j);
    std::sort(near.begin(), near.end());
    std::vector<int> witness_set{y};
    for (int i = 0; i < p.k; ++i) witness_set.push_back(near[i].second);

    subset_witness w = bottleneck_inject(witness_set, y_to_x);
    if (w.bottleneck > p.r) {
      std::string msg = "no injective matching of witness set {";
      for (std::size_t i = 0; i < witness_set.size(); ++i)
        msg += (i ? "," : "") + std::to_string(witness_set[i]);
      msg += "} of Y into X within r=" + format_double(p.r) +
             " (needs " + format_double(w.bottleneck) + ")";
      throw interleaving_construction_error(msg, witness_set, true, w.bottleneck, p.r);
    }
    for (const auto& [src, tgt] : w.pairs)
      if (src == y) th.assignment[y] = tgt;
    th.witnesses[y] = std::move(w);
  }

  // postconditions: images are vertices at the shifted scale, and scale-s
  // edges stay within s+2r so components map to components
  const double shifted = s + 2 * p.r;
  for (int y : vy.members) {
    const int tx = th.assignment[y];
    int neighbors = 0;
    for (int j = 0; j < dmx.n && neighbors < p.k; ++j)
      if (j != tx && dmx(tx, j) <= shifted) ++neighbors;
    if (neighbors < p.k)
      throw std::logic_error("theta image is not a vertex at the shifted scale");
  }
  for (std::size_t a = 0; a < vy.members.size(); ++a)
    for (std::size_t b = a + 1; b < vy.members.size(); ++b) {
      const int ya = vy.members[a], yb = vy.members[b];
      if (dmy(ya, yb) <= s && dmx(th.assignment[ya], th.assignment[yb]) > shifted)
        throw std::logic_error("theta does not carry an edge into the shifted scale");
    }
  return th;
}

inline theta_map theta_vertex_map(const nested_pair& p, double s) {
  const distance_matrix dmx = compute_distance_matrix(p.x, p.m);
  const distance_matrix dmy = compute_distance_matrix(p.y, p.m);
  const cross_distance_matrix y_to_x = cross_distances(p.y, p.x, p.m);
  return theta_vertex_map(p, s, dmx, dmy, y_to_x);
}

// i*: Br_k(X) -> Br_k(Y); branch point (s,[x]) goes to the maximal branch
// point below (s,[i(x)]). One entry per bx.points, in order.
inline std::vector<gamma_node> induced_map_i(const nested_pair& p, const gamma_tree& gx,
                                             const branch_tree& bx, const gamma_tree& gy,
                                             const branch_tree& by) {
  std::vector<gamma_node> out;
  out.reserve(bx.points.size());
  for (const branch_point& b : bx.points) {
    const double s = gx.grid[b.node.scale_index];
    const int j = gy.grid.floor_index(s);
    const int y_point = p.embedding[b.node.label];
    const int y_label = gy.label_at(j, y_point);
    if (y_label < 0)
      throw std::logic_error("X vertex missing from Y hierarchy");  // degrees only grow
    out.push_back(max_branch_below(gy, by, gamma_node{j, y_label}));
  }
  return out;
}

// θ*: Br_k(Y) -> Br_k(X); (t,[y]) goes to the maximal branch point below the
// component of θ(y) at parameter t+2r. Well-definedness is checked across
// every member of the block, not just one representative.
inline std::vector<gamma_node> induced_map_theta(const nested_pair& p,
                                                 const gamma_tree& gx,
                                                 const branch_tree& bx,
                                                 const gamma_tree& gy,
                                                 const branch_tree& by,
                                                 const distance_matrix& dmx,
                                                 const distance_matrix& dmy,
                                                 const cross_distance_matrix& y_to_x) {
  std::vector<gamma_node> out;
  out.reserve(by.points.size());
  std::map<int, theta_map> theta_at;  // keyed by Y scale index
  for (const branch_point& c : by.points) {
    const double t = gy.grid[c.node.scale_index];
    auto it = theta_at.find(c.node.scale_index);
    if (it == theta_at.end())
      it = theta_at.emplace(c.node.scale_index,
                            theta_vertex_map(p, t, dmx, dmy, y_to_x)).first;
    const theta_map& th = it->second;

    const int m_idx = gx.grid.floor_index(t + 2 * p.r);
    int x_label = -2;
    for (int member : *gy.partitions[c.node.scale_index].block_with_label(c.node.label)) {
      const int tx = th.assignment[member];
      const int lbl = gx.label_at(m_idx, tx);
      if (x_label == -2) x_label = lbl;
      else if (lbl != x_label)
        throw std::logic_error("theta* not well-defined on a component");
    }
    if (x_label < 0) throw std::logic_error("theta image missing from X hierarchy");
    out.push_back(max_branch_below(gx, bx, gamma_node{m_idx, x_label}));
  }
  return out;
}

inline std::vector<gamma_node> induced_map_theta(const nested_pair& p,
                                                 const gamma_tree& gx,
                                                 const branch_tree& bx,
                                                 const gamma_tree& gy,
                                                 const branch_tree& by) {
  const distance_matrix dmx = compute_distance_matrix(p.x, p.m);
  const distance_matrix dmy = compute_distance_matrix(p.y, p.m);
  const cross_distance_matrix y_to_x = cross_distances(p.y, p.x, p.m);
  return induced_map_theta(p, gx, bx, gy, by, dmx, dmy, y_to_x);
}

// σ*: shift by 2r inside one tree, then retract to the branch tree.
inline std::vector<gamma_node> induced_map_sigma(const gamma_tree& t,
                                                 const branch_tree& bt, double r) {
  if (r < 0) throw std::invalid_argument("r must be nonnegative");
  std::vector<gamma_node> out;
  out.reserve(bt.points.size());
  for (const branch_point& b : bt.points) {
    const int j = t.grid.floor_index(t.grid[b.node.scale_index] + 2 * r);
    out.push_back(max_branch_below(t, bt,
                                   gamma_node{j, ancestor_label(t, b.node, j)}));
  }
  return out;
}

struct check_result {
  bool pass = true;
  long checked = 0;
  std::vector<std::string> failures;  // capped at 20
};

struct interleaving_report {
  std::string metric_label;
  int k = 0;
  double r = 0.0;
  double config_distance = 0.0;
  check_result eq4, eq5, eq6, join_compat, pi0_diagram;
  double max_shift = 0.0;
  bool pass = false;
};

namespace detail {

inline void check_fail(check_result& c, const std::string& msg) {
  c.pass = false;
  if (c.failures.size() < 20) c.failures.push_back(msg);
}

}  // namespace detail

// Mechanical verification of the branch-tree interleaving: the two composite
// relations, the shift bound, join compatibility, and strict commutativity of
// the component-level square at every grid scale.
inline interleaving_report verify_interleaving(const nested_pair& p) {
  const distance_matrix dmx = compute_distance_matrix(p.x, p.m);
  const distance_matrix dmy = compute_distance_matrix(p.y, p.m);
  const cross_distance_matrix y_to_x = cross_distances(p.y, p.x, p.m);
  const gamma_tree gx = build_gamma(dmx, p.k);
  const gamma_tree gy = build_gamma(dmy, p.k);
  const branch_tree bx = extract_branch_points(gx);
  const branch_tree by = extract_branch_points(gy);

  const std::vector<gamma_node> i_star = induced_map_i(p, gx, bx, gy, by);
  const std::vector<gamma_node> theta_star =
      induced_map_theta(p, gx, bx, gy, by, dmx, dmy, y_to_x);
  const std::vector<gamma_node> sigma_x = induced_map_sigma(gx, bx, p.r);
  const std::vector<gamma_node> sigma_y = induced_map_sigma(gy, by, p.r);

  interleaving_report rep;
  rep.metric_label = metric_name(p.m);
  rep.k = p.k;
  rep.r = p.r;
  rep.config_distance = p.config_distance;
  const double shift_bound = 2 * p.r;

  // eq4: theta* after i* stays below sigma* on the X branch tree
  for (int bi = 0; bi < bx.size(); ++bi) {
    ++rep.eq4.checked;
    const int yi = by.index_of(i_star[bi]);
    if (yi < 0) throw std::logic_error("i* image is not a branch point");
    if (!node_leq(gx, theta_star[yi], sigma_x[bi]))
      detail::check_fail(rep.eq4, "theta*i* above sigma* at " +
                                      detail::node_desc(gx, bx.points[bi].node));
  }

  // eq5: i* after theta* stays below sigma* on the Y branch tree
  for (int ci = 0; ci < by.size(); ++ci) {
    ++rep.eq5.checked;
    const int xi = bx.index_of(theta_star[ci]);
    if (xi < 0) throw std::logic_error("theta* image is not a branch point");
    if (!node_leq(gy, i_star[xi], sigma_y[ci]))
      detail::check_fail(rep.eq5, "i*theta* above sigma* at " +
                                      detail::node_desc(gy, by.points[ci].node));
  }

  // eq6: b <= sigma*(b) <= the node shifted by 2r, with scale shift <= 2r
  auto check_eq6 = [&](const gamma_tree& g, const branch_tree& bt,
                       const std::vector<gamma_node>& sigma, const char* side) {
    for (int bi = 0; bi < bt.size(); ++bi) {
      ++rep.eq6.checked;
      const gamma_node b = bt.points[bi].node;
      const int j = g.grid.floor_index(g.grid[b.scale_index] + shift_bound);
      const gamma_node shifted{j, ancestor_label(g, b, j)};
      const double shift = g.grid[sigma[bi].scale_index] - g.grid[b.scale_index];
      rep.max_shift = std::max(rep.max_shift, shift);
      if (!node_leq(g, b, sigma[bi]) || !node_leq(g, sigma[bi], shifted) ||
          shift > shift_bound)
        detail::check_fail(rep.eq6, std::string("shift relation fails in ") + side +
                                        " at " + detail::node_desc(g, b));
    }
  };
  check_eq6(gx, bx, sigma_x, "X");
  check_eq6(gy, by, sigma_y, "Y");

  // join compatibility: i* preserves joins up to the order relation
  for (int a = 0; a < bx.size(); ++a)
    for (int b = a + 1; b < bx.size(); ++b) {
      ++rep.join_compat.checked;
      const gamma_node ab = branch_join(gx, bx, bx.points[a].node, bx.points[b].node);
      const int ab_idx = bx.index_of(ab);
      const gamma_node lhs = branch_join(gy, by, i_star[a], i_star[b]);
      if (!node_leq(gy, lhs, i_star[ab_idx]))
        detail::check_fail(rep.join_compat,
                           "join of images above image of join for " +
                               detail::node_desc(gx, bx.points[a].node) + ", " +
                               detail::node_desc(gx, bx.points[b].node));
    }

  // component-level square at every grid scale of either tree
  std::vector<double> scales = gx.grid.scales;
  scales.insert(scales.end(), gy.grid.scales.begin(), gy.grid.scales.end());
  std::sort(scales.begin(), scales.end());
  scales.erase(std::unique(scales.begin(), scales.end()), scales.end());
  std::map<double, theta_map> theta_at;
  for (double s : scales) {
    const theta_map& th =
        theta_at.emplace(s, theta_vertex_map(p, s, dmx, dmy, y_to_x)).first->second;
    const int ix = gx.grid.floor_index(s);
    const int ixs = gx.grid.floor_index(s + shift_bound);
    for (const auto& block : gx.partitions[ix].blocks)
      for (int x : block) {
        ++rep.pi0_diagram.checked;
        const int img = th.assignment[p.embedding[x]];
        if (img != x) {
          detail::check_fail(rep.pi0_diagram,
                             "theta not the identity on X point " + std::to_string(x) +
                                 " at s=" + format_double(s));
          continue;
        }
        if (gx.label_at(ixs, img) != gx.label_at(ixs, x))
          detail::check_fail(rep.pi0_diagram,
                             "upper triangle breaks at X point " + std::to_string(x) +
                                 ", s=" + format_double(s));
      }
    const int iy = gy.grid.floor_index(s);
    const int iys = gy.grid.floor_index(s + shift_bound);
    for (const auto& block : gy.partitions[iy].blocks)
      for (int y : block) {
        ++rep.pi0_diagram.checked;
        const int ty = p.embedding[th.assignment[y]];
        if (gy.label_at(iys, ty) < 0 || gy.label_at(iys, ty) != gy.label_at(iys, y))
          detail::check_fail(rep.pi0_diagram,
                             "lower triangle breaks at Y point " + std::to_string(y) +
                                 ", s=" + format_double(s));
      }
  }

  rep.pass = rep.eq4.pass && rep.eq5.pass && rep.eq6.pass && rep.join_compat.pass &&
             rep.pi0_diagram.pass;
  return rep;
}

}  // namespace drips
