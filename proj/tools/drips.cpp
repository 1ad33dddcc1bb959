#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "drips/drips.hpp"

namespace {

struct io_options {
  std::string delimiter = ",";
  bool header = false;
  bool dedupe = false;
};

void add_io_flags(CLI::App* cmd, io_options& io) {
  cmd->add_option("--delimiter", io.delimiter, "field separator (single character)");
  cmd->add_flag("--header", io.header, "skip the first non-blank row");
  cmd->add_flag("--dedupe", io.dedupe, "drop exact duplicate points instead of failing");
}

drips::csv_options to_csv_options(const io_options& io) {
  if (io.delimiter.size() != 1)
    throw std::invalid_argument("--delimiter must be a single character");
  return {io.delimiter[0], io.header, io.dedupe};
}

drips::point_cloud load_cloud(const std::string& path, const io_options& io) {
  int dropped = 0;
  drips::point_cloud c = drips::read_csv_file(path, to_csv_options(io), &dropped);
  if (dropped > 0)
    std::cerr << path << ": dropped " << dropped << " duplicate point(s)\n";
  return c;
}

// Artifact to --out with the summary on stdout, or artifact to stdout with
// the summary on stderr — stdout carries exactly one machine-readable thing.
void emit(const std::string& artifact, const std::string& out_path,
          const std::string& summary) {
  if (out_path.empty()) {
    std::cout << artifact;
    if (!summary.empty()) std::cerr << summary << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw drips::data_error("cannot open output file: " + out_path);
    out << artifact;
    if (!summary.empty()) std::cout << summary << "\n";
  }
}

int cmd_hierarchy(const std::string& input, int k, const std::string& metric_label,
                  const std::string& format, double epsilon_merge,
                  const std::string& out_path, const io_options& io) {
  const drips::point_cloud cloud = load_cloud(input, io);
  const drips::distance_matrix dm =
      drips::compute_distance_matrix(cloud, drips::parse_metric(metric_label));
  const drips::gamma_tree t = drips::build_gamma(dm, k, epsilon_merge);
  if (t.all_empty())
    std::cerr << "warning: hierarchy is empty (k >= number of points?)\n";
  const std::string artifact = format == "dot"
                                   ? drips::gamma_to_dot(t)
                                   : drips::gamma_to_json(t).dump(2) + "\n";
  emit(artifact, out_path,
       "n=" + std::to_string(cloud.size()) + " k=" + std::to_string(k) +
           " scales=" + std::to_string(t.num_scales()) +
           " nodes=" + std::to_string(drips::all_nodes(t).size()));
  return 0;
}

int cmd_branches(const std::string& input, int k, const std::string& metric_label,
                 const std::string& format, double epsilon_merge,
                 const std::string& out_path, const io_options& io) {
  const drips::point_cloud cloud = load_cloud(input, io);
  const drips::distance_matrix dm =
      drips::compute_distance_matrix(cloud, drips::parse_metric(metric_label));
  const drips::gamma_tree t = drips::build_gamma(dm, k, epsilon_merge);
  const drips::branch_tree bt = drips::extract_branch_points(t);
  int births = 0, merges = 0;
  for (const auto& b : bt.points)
    (b.condition == drips::branch_condition::birth ? births : merges) += 1;
  const std::string artifact = format == "dot"
                                   ? drips::branch_to_dot(t, bt)
                                   : drips::branch_to_json(t, bt).dump(2) + "\n";
  emit(artifact, out_path,
       "k=" + std::to_string(k) + " branch_points=" + std::to_string(bt.size()) +
           " birth=" + std::to_string(births) + " merge=" + std::to_string(merges));
  return 0;
}

int cmd_ultrametric(const std::string& input, int k, const std::string& metric_label,
                    int scale_index, double epsilon_merge, const std::string& out_path,
                    const io_options& io) {
  const drips::point_cloud cloud = load_cloud(input, io);
  const drips::distance_matrix dm =
      drips::compute_distance_matrix(cloud, drips::parse_metric(metric_label));
  const drips::gamma_tree t = drips::build_gamma(dm, k, epsilon_merge);
  const drips::slice_matrix sm = drips::slice_ultrametric(t, scale_index);
  emit(drips::slice_to_csv(sm), out_path,
       "scale_index=" + std::to_string(scale_index) +
           " scale=" + drips::format_double(t.grid[scale_index]) +
           " blocks=" + std::to_string(sm.labels.size()));
  return 0;
}

int cmd_confdist(const std::string& first, const std::string& second, int k,
                 const std::string& metric_label, const io_options& io) {
  const drips::point_cloud x = load_cloud(first, io);
  const drips::point_cloud y = load_cloud(second, io);
  const double d =
      drips::config_hausdorff_distance(x, y, k, drips::parse_metric(metric_label));
  std::cout << drips::format_double(d) << "\n";
  return 0;
}

int cmd_stability(const std::string& first, const std::string& second, int k,
                  const std::string& metric_label, std::optional<double> r,
                  const std::string& out_path, const io_options& io) {
  const drips::point_cloud x = load_cloud(first, io);
  const drips::point_cloud y = load_cloud(second, io);
  try {
    const drips::nested_pair p =
        drips::make_nested_pair(x, y, k, drips::parse_metric(metric_label), r);
    const drips::interleaving_report rep = drips::verify_interleaving(p);
    emit(drips::report_to_json(rep).dump(2) + "\n", out_path,
         std::string("pass=") + (rep.pass ? "true" : "false") +
             " r=" + drips::format_double(rep.r) +
             " max_shift=" + drips::format_double(rep.max_shift));
    return rep.pass ? 0 : 3;
  } catch (const drips::interleaving_construction_error& e) {
    drips::json j;
    j["error"] = "construction";
    j["message"] = e.what();
    j["r"] = e.r;
    j["required"] = e.required;
    j["subset"] = e.subset;
    j["subset_of"] = e.subset_in_y ? "Y" : "X";
    j["pass"] = false;
    emit(j.dump(2) + "\n", out_path, "pass=false (construction)");
    return 3;
  }
}

int cmd_fuzz(unsigned seed, int count, int k_opt, int max_n,
             const std::string& metric_label) {
  if (count <= 0) throw std::invalid_argument("--count must be positive");
  if (max_n < 2) throw std::invalid_argument("--max-n must be at least 2");
  drips::rng_t rng(seed);
  for (int i = 0; i < count; ++i) {
    const int k = k_opt >= 0 ? k_opt : i % 3;
    const drips::metric m = metric_label.empty() ? drips::random_metric(rng)
                                                 : drips::parse_metric(metric_label);
    const drips::nested_pair p = drips::random_nested_pair(
        rng, std::max(max_n, k + 1), k, m, i % 2 == 0, 1 + i % 3);
    const drips::interleaving_report rep = drips::verify_interleaving(p);
    std::cout << "instance " << i << ": n_x=" << p.x.size() << " n_y=" << p.y.size()
              << " k=" << k << " metric=" << drips::metric_name(m)
              << " r=" << drips::format_double(p.r) << (rep.pass ? " pass" : " FAIL")
              << "\n";
    if (!rep.pass) {
      for (const auto* c :
           {&rep.eq4, &rep.eq5, &rep.eq6, &rep.join_compat, &rep.pi0_diagram})
        for (const auto& f : c->failures) std::cerr << "  " << f << "\n";
      return 3;
    }
  }
  std::cout << "ok: " << count << " instances\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degree-Rips component hierarchies, branch-point trees, and "
               "stability verification for finite metric data sets"};
  app.require_subcommand(1);

  std::string input, second_input, out_path;
  int k = 0;
  std::string metric_label = "euclidean";
  std::string format = "json";
  double epsilon_merge = 0.0;
  int scale_index = 0;
  double r_value = 0.0;
  io_options io;
  unsigned seed = 0;
  int count = 100, fuzz_k = -1, max_n = 12;
  std::string fuzz_metric;

  const auto add_common = [&](CLI::App* cmd, bool with_format) {
    cmd->add_option("--k", k, "degree parameter (default 0)");
    cmd->add_option("--metric", metric_label, "euclidean|manhattan|chebyshev");
    cmd->add_option("--epsilon-merge", epsilon_merge,
                    "collapse adjacent grid scales closer than this");
    cmd->add_option("--out", out_path, "write the artifact to this file");
    if (with_format)
      cmd->add_option("--format", format, "json|dot (default json)")
          ->check(CLI::IsMember({"json", "dot"}));
    add_io_flags(cmd, io);
  };

  CLI::App* hier = app.add_subcommand(
      "hierarchy", "component hierarchy of a CSV point cloud across all scales");
  hier->add_option("input", input, "CSV point cloud")->required();
  add_common(hier, true);

  CLI::App* bran = app.add_subcommand(
      "branches", "branch points (births and merges) of the hierarchy");
  bran->add_option("input", input, "CSV point cloud")->required();
  add_common(bran, true);

  CLI::App* ultra = app.add_subcommand(
      "ultrametric", "ultrametric block distances of one hierarchy slice as CSV");
  ultra->add_option("input", input, "CSV point cloud")->required();
  ultra->add_option("--scale-index", scale_index, "grid index of the slice (default 0)");
  add_common(ultra, false);

  CLI::App* conf = app.add_subcommand(
      "confdist", "configuration-space Hausdorff distance of two point clouds");
  conf->add_option("first", input, "CSV point cloud")->required();
  conf->add_option("second", second_input, "CSV point cloud")->required();
  conf->add_option("--k", k, "degree parameter (default 0)");
  conf->add_option("--metric", metric_label, "euclidean|manhattan|chebyshev");
  add_io_flags(conf, io);

  CLI::App* stab = app.add_subcommand(
      "stability", "verify the branch-tree interleaving for nested clouds X within Y");
  stab->add_option("first", input, "CSV point cloud X (subset)")->required();
  stab->add_option("second", second_input, "CSV point cloud Y (superset)")->required();
  stab->add_option("--k", k, "degree parameter (default 0)");
  stab->add_option("--metric", metric_label, "euclidean|manhattan|chebyshev");
  CLI::Option* r_opt = stab->add_option(
      "--r", r_value, "shift radius; must exceed the configuration Hausdorff distance");
  stab->add_option("--out", out_path, "write the report to this file");
  add_io_flags(stab, io);

  CLI::App* fuzz = app.add_subcommand(
      "fuzz", "verify the interleaving on seeded random nested pairs");
  fuzz->add_option("--seed", seed, "RNG seed (default 0)");
  fuzz->add_option("--count", count, "number of instances (default 100)");
  fuzz->add_option("--k", fuzz_k, "fixed degree; omit to cycle 0,1,2");
  fuzz->add_option("--max-n", max_n, "largest cloud size (default 12)");
  fuzz->add_option("--metric", fuzz_metric, "fixed metric; omit to vary by seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (hier->parsed())
      return cmd_hierarchy(input, k, metric_label, format, epsilon_merge, out_path, io);
    if (bran->parsed())
      return cmd_branches(input, k, metric_label, format, epsilon_merge, out_path, io);
    if (ultra->parsed())
      return cmd_ultrametric(input, k, metric_label, scale_index, epsilon_merge,
                             out_path, io);
    if (conf->parsed())
      return cmd_confdist(input, second_input, k, metric_label, io);
    if (stab->parsed())
      return cmd_stability(input, second_input, k, metric_label,
                           r_opt->count() ? std::optional<double>(r_value) : std::nullopt,
                           out_path, io);
    if (fuzz->parsed()) return cmd_fuzz(seed, count, fuzz_k, max_n, fuzz_metric);
  } catch (const drips::interleaving_construction_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const drips::data_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 1;
}
