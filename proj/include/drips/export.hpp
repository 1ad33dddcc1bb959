#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "drips/branch_tree.hpp"
#include "drips/gamma_tree.hpp"
#include "drips/stability.hpp"

namespace drips {

using nlohmann::json;

inline json gamma_to_json(const gamma_tree& t) {
  json j;
  j["k"] = t.k;
  j["scales"] = t.grid.scales;
  json nodes = json::array();
  json lineage = json::array();
  for (int i = 0; i < t.num_scales(); ++i) {
    for (const auto& b : t.partitions[i].blocks) {
      nodes.push_back({{"scale_index", i}, {"label", b.front()}, {"members", b}});
      if (i + 1 < t.num_scales())
        lineage.push_back({i, b.front(), t.label_at(i + 1, b.front())});
    }
  }
  j["nodes"] = std::move(nodes);
  j["lineage"] = std::move(lineage);
  return j;
}

// Rebuilds a tree from its export. Lineage entries are validated against the
// reconstructed partitions.
inline gamma_tree gamma_from_json(const json& j) {
  gamma_tree t;
  try {
    t.k = j.at("k").get<int>();
    t.grid.scales = j.at("scales").get<std::vector<double>>();
    int n = 0;
    for (const auto& node : j.at("nodes"))
      for (int m : node.at("members")) n = std::max(n, m + 1);
    t.partitions.resize(t.grid.scales.size());
    for (std::size_t i = 0; i < t.partitions.size(); ++i) {
      t.partitions[i].scale = t.grid.scales[i];
      t.partitions[i].k = t.k;
      t.partitions[i].point_block.assign(n, -1);
    }
    for (const auto& node : j.at("nodes")) {
      const int i = node.at("scale_index").get<int>();
      if (i < 0 || i >= static_cast<int>(t.partitions.size()))
        throw data_error("tree JSON: scale_index out of range");
      auto members = node.at("members").get<std::vector<int>>();
      if (members.empty() || members.front() != node.at("label").get<int>())
        throw data_error("tree JSON: label must be the minimum member");
      for (int m : members) t.partitions[i].point_block[m] = members.front();
      t.partitions[i].blocks.push_back(std::move(members));
    }
    for (const auto& link : j.at("lineage")) {
      const int i = link.at(0).get<int>();
      const int from = link.at(1).get<int>();
      const int to = link.at(2).get<int>();
      if (i + 1 >= static_cast<int>(t.partitions.size()) ||
          t.partitions[i].point_block[from] != from ||
          t.partitions[i + 1].point_block[from] != to)
        throw data_error("tree JSON: inconsistent lineage entry");
    }
  } catch (const json::exception& e) {
    throw data_error(std::string("malformed tree JSON: ") + e.what());
  }
  return t;
}

inline std::string gamma_to_dot(const gamma_tree& t) {
  std::string out = "digraph hierarchy {\n  rankdir=BT;\n";
  for (int i = 0; i < t.num_scales(); ++i) {
    out += "  { rank=same;";
    for (const auto& b : t.partitions[i].blocks)
      out += " n" + std::to_string(i) + "_" + std::to_string(b.front()) + ";";
    out += " }\n";
    for (const auto& b : t.partitions[i].blocks) {
      out += "  n" + std::to_string(i) + "_" + std::to_string(b.front()) +
             " [label=\"s=" + format_double(t.grid[i]) + "\\n{";
      for (std::size_t m = 0; m < b.size(); ++m)
        out += (m ? "," : "") + std::to_string(b[m]);
      out += "}\"];\n";
    }
  }
  for (int i = 0; i + 1 < t.num_scales(); ++i)
    for (const auto& b : t.partitions[i].blocks)
      out += "  n" + std::to_string(i) + "_" + std::to_string(b.front()) + " -> n" +
             std::to_string(i + 1) + "_" + std::to_string(t.label_at(i + 1, b.front())) +
             ";\n";
  out += "}\n";
  return out;
}

inline json branch_to_json(const gamma_tree& t, const branch_tree& bt) {
  json j;
  j["k"] = bt.k;
  json pts = json::array();
  json parents = json::array();
  for (int i = 0; i < bt.size(); ++i) {
    const branch_point& b = bt.points[i];
    const auto* members = t.partitions[b.node.scale_index].block_with_label(b.node.label);
    pts.push_back({{"scale", t.grid[b.node.scale_index]},
                   {"label", b.node.label},
                   {"condition", condition_name(b.condition)},
                   {"members", *members}});
    const int parent = parent_branch_index(t, bt, i);
    if (parent < 0) parents.push_back(nullptr);
    else parents.push_back(parent);
  }
  j["branch_points"] = std::move(pts);
  j["parent"] = std::move(parents);
  return j;
}

inline std::string branch_to_dot(const gamma_tree& t, const branch_tree& bt) {
  std::string out = "digraph branches {\n  rankdir=BT;\n";
  for (int i = 0; i < bt.size(); ++i) {
    const branch_point& b = bt.points[i];
    const auto* members = t.partitions[b.node.scale_index].block_with_label(b.node.label);
    out += "  b" + std::to_string(i) + " [label=\"s=" +
           format_double(t.grid[b.node.scale_index]) + " " +
           condition_name(b.condition) + "\\n{";
    for (std::size_t m = 0; m < members->size(); ++m)
      out += (m ? "," : "") + std::to_string((*members)[m]);
    out += "}\"];\n";
  }
  for (int i = 0; i < bt.size(); ++i) {
    const int parent = parent_branch_index(t, bt, i);
    if (parent >= 0)
      out += "  b" + std::to_string(i) + " -> b" + std::to_string(parent) + ";\n";
  }
  out += "}\n";
  return out;
}

// CSV with block labels as the header row and leading column.
inline std::string slice_to_csv(const slice_matrix& sm) {
  std::string out = "label";
  for (int l : sm.labels) out += "," + std::to_string(l);
  out += "\n";
  for (std::size_t i = 0; i < sm.labels.size(); ++i) {
    out += std::to_string(sm.labels[i]);
    for (std::size_t j = 0; j < sm.labels.size(); ++j)
      out += "," + format_double(sm(static_cast<int>(i), static_cast<int>(j)));
    out += "\n";
  }
  return out;
}

inline json check_to_json(const check_result& c) {
  return json{{"pass", c.pass}, {"checked", c.checked}, {"failures", c.failures}};
}

inline json report_to_json(const interleaving_report& rep) {
  json j;
  j["metric"] = rep.metric_label;
  j["k"] = rep.k;
  j["r"] = rep.r;
  j["config_hausdorff"] = rep.config_distance;
  j["checks"] = {{"eq4", check_to_json(rep.eq4)},
                 {"eq5", check_to_json(rep.eq5)},
                 {"eq6", check_to_json(rep.eq6)},
                 {"join_compat", check_to_json(rep.join_compat)},
                 {"pi0_diagram", check_to_json(rep.pi0_diagram)}};
  j["max_shift"] = rep.max_shift;
  j["pass"] = rep.pass;
  return j;
}

}  // namespace drips
