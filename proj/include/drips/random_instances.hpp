#pragma once

// Seeded instance generators for the fuzz subcommand and the property
// suites. Integer-lattice clouds produce exact distance ties on purpose.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "drips/metric.hpp"
#include "drips/point_cloud.hpp"
#include "drips/stability.hpp"

namespace drips {

using rng_t = std::mt19937;

// n distinct points in the given dimension. With lattice=true coordinates
// are small integers (ties abound); otherwise uniform reals in [0, 10).
// lattice_extent <= 0 picks the smallest extent >= 6 with room for n
// distinct points, so one-dimensional lattices stay feasible.
inline point_cloud random_cloud(rng_t& rng, int n, int dim, bool lattice,
                                int lattice_extent = 0) {
  if (lattice && lattice_extent <= 0)
    for (lattice_extent = 6; std::pow(lattice_extent, dim) < 2.0 * n;)
      ++lattice_extent;
  std::vector<std::vector<double>> rows;
  std::uniform_int_distribution<int> cell(0, std::max(lattice_extent, 1) - 1);
  std::uniform_real_distribution<double> coord(0.0, 10.0);
  int guard = 0;
  while (static_cast<int>(rows.size()) < n) {
    std::vector<double> p(dim);
    for (int d = 0; d < dim; ++d)
      p[d] = lattice ? static_cast<double>(cell(rng)) : coord(rng);
    if (std::find(rows.begin(), rows.end(), p) == rows.end())
      rows.push_back(std::move(p));
    if (++guard > 100000)
      throw std::runtime_error("random_cloud: lattice too small for n");
  }
  return make_point_cloud(std::move(rows));
}

inline metric random_metric(rng_t& rng) {
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: return metric::euclidean;
    case 1: return metric::manhattan;
    default: return metric::chebyshev;
  }
}

// Random Y plus a random subset X (size at least k+1), with
// r = configuration Hausdorff distance + 1e-9.
inline nested_pair random_nested_pair(rng_t& rng, int max_n, int k, metric m,
                                      bool lattice, int dim) {
  const int min_x = k + 1;
  std::uniform_int_distribution<int> size_dist(std::max(min_x, 2), max_n);
  const int ny = size_dist(rng);
  const point_cloud y = random_cloud(rng, ny, dim, lattice);
  std::vector<int> indices(ny);
  std::iota(indices.begin(), indices.end(), 0);
  std::shuffle(indices.begin(), indices.end(), rng);
  std::uniform_int_distribution<int> x_size_dist(min_x, ny);
  const int nx = x_size_dist(rng);
  std::vector<int> chosen(indices.begin(), indices.begin() + nx);
  std::sort(chosen.begin(), chosen.end());
  std::vector<std::vector<double>> rows;
  for (int i : chosen) rows.push_back(y.points[i]);
  point_cloud x = make_point_cloud(std::move(rows));
  return make_nested_pair(std::move(x), y, k, m);
}

}  // namespace drips
