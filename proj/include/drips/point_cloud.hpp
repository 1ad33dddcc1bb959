#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "drips/common.hpp"

namespace drips {

// A finite data set: distinct points sharing one dimension, indexed 0..n-1.
struct point_cloud {
  std::vector<std::vector<double>> points;

  int size() const { return static_cast<int>(points.size()); }
  int dimension() const {
    return points.empty() ? 0 : static_cast<int>(points.front().size());
  }

  bool operator==(const point_cloud&) const = default;
};

// Validates the point-cloud invariants. With dedupe=true exact duplicate
// rows are dropped (first occurrence kept) and counted in *dropped;
// otherwise duplicates are a data_error.
inline point_cloud make_point_cloud(std::vector<std::vector<double>> rows,
                                    bool dedupe = false, int* dropped = nullptr) {
  if (rows.empty()) throw data_error("point cloud is empty");
  const std::size_t dim = rows.front().size();
  if (dim == 0) throw data_error("points must have dimension >= 1");
  for (const auto& p : rows)
    if (p.size() != dim) throw data_error("inconsistent point dimensions");

  std::vector<std::vector<double>> kept;
  kept.reserve(rows.size());
  int dup_count = 0;
  for (auto& p : rows) {
    bool seen = false;
    for (const auto& q : kept)
      if (q == p) { seen = true; break; }
    if (seen) {
      if (!dedupe) throw data_error("duplicate point in data set");
      ++dup_count;
    } else {
      kept.push_back(std::move(p));
    }
  }
  if (dropped) *dropped = dup_count;
  return point_cloud{std::move(kept)};
}

struct csv_options {
  char delimiter = ',';
  bool skip_header = false;
  bool dedupe = false;
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline double parse_field(const std::string& field, std::size_t row) {
  const std::string t = trim(field);
  double v = 0;
  auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (res.ec != std::errc{} || res.ptr != t.data() + t.size())
    throw data_error("row " + std::to_string(row) + ": not a number: '" + field + "'");
  return v;
}

}  // namespace detail

// One point per row, numeric columns as coordinates. Ragged rows are
// rejected; fully blank lines are skipped.
inline point_cloud read_csv(std::istream& in, const csv_options& opts = {},
                            int* dropped = nullptr) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  bool header_pending = opts.skip_header;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::trim(line).empty()) continue;
    if (header_pending) { header_pending = false; continue; }
    std::vector<double> coords;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, opts.delimiter))
      coords.push_back(detail::parse_field(field, lineno));
    if (coords.empty()) throw data_error("row " + std::to_string(lineno) + ": no fields");
    if (width == 0) width = coords.size();
    if (coords.size() != width)
      throw data_error("row " + std::to_string(lineno) + ": ragged row (" +
                       std::to_string(coords.size()) + " fields, expected " +
                       std::to_string(width) + ")");
    rows.push_back(std::move(coords));
  }
  return make_point_cloud(std::move(rows), opts.dedupe, dropped);
}

inline point_cloud read_csv_file(const std::string& path, const csv_options& opts = {},
                                 int* dropped = nullptr) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open file: " + path);
  return read_csv(in, opts, dropped);
}

}  // namespace drips
