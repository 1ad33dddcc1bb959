#include <gtest/gtest.h>

#include "drips/export.hpp"
#include "drips/stability.hpp"
#include "support/generators.hpp"

using namespace drips;

namespace {

point_cloud line_cloud(std::initializer_list<double> xs) {
  std::vector<std::vector<double>> rows;
  for (double x : xs) rows.push_back({x});
  return make_point_cloud(std::move(rows));
}

nested_pair golden_pair(int k, double r) {
  return make_nested_pair(line_cloud({0, 1, 3}), line_cloud({0, 1, 1.5, 3}), k,
                          metric::euclidean, r);
}

}  // namespace

TEST(MakeNestedPair, EmbeddingAndDefaults) {
  const nested_pair p =
      make_nested_pair(line_cloud({0, 1, 3}), line_cloud({0, 1, 1.5, 3}), 0,
                       metric::euclidean);
  EXPECT_EQ(p.embedding, (std::vector<int>{0, 1, 3}));
  EXPECT_EQ(p.config_distance, 0.5);
  EXPECT_GT(p.r, p.config_distance);  // default radius sits just above
  EXPECT_LT(p.r, 0.51);

  const nested_pair q = golden_pair(0, 0.6);
  EXPECT_EQ(q.r, 0.6);
  EXPECT_EQ(q.k, 0);
}

TEST(MakeNestedPair, RejectsBadInput) {
  EXPECT_THROW(make_nested_pair(make_point_cloud({{0.0, 0.0}}), line_cloud({0, 1}), 0,
                                metric::euclidean),
               data_error);
  EXPECT_THROW(make_nested_pair(line_cloud({0, 7}), line_cloud({0, 1, 3}), 0,
                                metric::euclidean),
               data_error);
  EXPECT_THROW(golden_pair(0, 0.0), std::invalid_argument);
  EXPECT_THROW(golden_pair(0, -1.0), std::invalid_argument);
}

TEST(MakeNestedPair, UndersizedRadiusCarriesWorstSubset) {
  try {
    golden_pair(0, 0.4);
    FAIL() << "expected interleaving_construction_error";
  } catch (const interleaving_construction_error& e) {
    EXPECT_EQ(e.required, 0.5);
    EXPECT_EQ(e.r, 0.4);
    EXPECT_TRUE(e.subset_in_y);
    EXPECT_EQ(e.subset, std::vector<int>{2});  // the off-X point 1.5
    EXPECT_NE(std::string(e.what()).find("0.5"), std::string::npos);
  }

  try {
    golden_pair(1, 0.9);
    FAIL() << "expected interleaving_construction_error";
  } catch (const interleaving_construction_error& e) {
    EXPECT_EQ(e.required, 1.0);
    EXPECT_EQ(e.subset, (std::vector<int>{1, 2}));
    EXPECT_TRUE(e.subset_in_y);
  }
}

TEST(ThetaMap, IdentityOnSharedPoints) {
  const nested_pair p = golden_pair(0, 0.6);
  const theta_map th = theta_vertex_map(p, 1.0);
  EXPECT_EQ(th.scale, 1.0);
  EXPECT_EQ(th.assignment, (std::vector<int>{0, 1, 1, 2}));
  EXPECT_EQ(th.witnesses[2].bottleneck, 0.5);
}

TEST(ThetaMap, WitnessSetUsesNearbyNeighbors) {
  const nested_pair p = golden_pair(1, 1.1);
  const theta_map th = theta_vertex_map(p, 1.0);
  // point 3 of Y is isolated at this scale and degree, hence off-domain
  EXPECT_EQ(th.assignment, (std::vector<int>{0, 1, 1, -1}));
  EXPECT_EQ(th.witnesses[2].pairs,
            (std::vector<std::pair<int, int>>{{2, 1}, {1, 0}}));
  EXPECT_EQ(th.witnesses[2].bottleneck, 1.0);
}

TEST(ThetaMap, TooSmallRadiusThrows) {
  // bypass the constructor guard to exercise the matching-level failure
  const nested_pair p{line_cloud({0, 1, 3}), line_cloud({0, 1, 1.5, 3}),
                      {0, 1, 3},             1,
                      0.6,                   metric::euclidean,
                      1.0};
  try {
    theta_vertex_map(p, 1.0);
    FAIL() << "expected interleaving_construction_error";
  } catch (const interleaving_construction_error& e) {
    EXPECT_EQ(e.subset, (std::vector<int>{2, 1}));  // point plus its neighbor
    EXPECT_EQ(e.required, 1.0);
    EXPECT_EQ(e.r, 0.6);
  }
}

TEST(ThetaMap, StaysWithinRadiusOnRandomPairs) {
  gen::rng_t rng(53);
  for (int iter = 0; iter < 30; ++iter) {
    const int k = iter % 3;
    const nested_pair p = gen::random_nested_pair(rng, 8, k, gen::random_metric(rng),
                                                  iter % 2 == 0, 1 + iter % 3);
    const distance_matrix dmy = compute_distance_matrix(p.y, p.m);
    const cross_distance_matrix y_to_x = cross_distances(p.y, p.x, p.m);
    const scale_grid grid = phase_change_scales(dmy);
    for (int g = 0; g < grid.size(); ++g) {
      const theta_map th = theta_vertex_map(p, grid[g]);
      for (const int y : vertices_at(dmy, grid[g], k).members) {
        ASSERT_GE(th.assignment[y], 0);
        ASSERT_LE(y_to_x(y, th.assignment[y]), p.r);
      }
      for (int i = 0; i < p.x.size(); ++i)
        if (th.assignment[p.embedding[i]] >= 0)
          ASSERT_EQ(th.assignment[p.embedding[i]], i);
    }
  }
}

TEST(InducedMaps, LineCloudWorkedExample) {
  const nested_pair p = golden_pair(0, 0.6);
  const gamma_tree gx = build_gamma(compute_distance_matrix(p.x, p.m), 0);
  const gamma_tree gy = build_gamma(compute_distance_matrix(p.y, p.m), 0);
  const branch_tree bx = extract_branch_points(gx);
  const branch_tree by = extract_branch_points(gy);

  const auto i_star = induced_map_i(p, gx, bx, gy, by);
  EXPECT_EQ(i_star, (std::vector<gamma_node>{{0, 0}, {0, 1}, {0, 3}, {2, 0}, {3, 0}}));

  const auto theta_star = induced_map_theta(p, gx, bx, gy, by);
  EXPECT_EQ(theta_star, (std::vector<gamma_node>{
                            {1, 0}, {1, 0}, {1, 0}, {0, 2}, {1, 0}, {2, 0}, {2, 0}}));

  const auto sigma_x = induced_map_sigma(gx, bx, p.r);
  EXPECT_EQ(sigma_x, (std::vector<gamma_node>{{1, 0}, {1, 0}, {0, 2}, {2, 0}, {2, 0}}));

  const auto sigma_y = induced_map_sigma(gy, by, p.r);
  EXPECT_EQ(sigma_y, (std::vector<gamma_node>{
                         {2, 0}, {2, 0}, {2, 0}, {0, 3}, {3, 0}, {3, 0}, {3, 0}}));
}

TEST(InducedMaps, SigmaAtZeroIsIdentity) {
  const gamma_tree t = build_gamma(
      compute_distance_matrix(line_cloud({0, 1, 3}), metric::euclidean), 0);
  const branch_tree bt = extract_branch_points(t);
  const auto sigma = induced_map_sigma(t, bt, 0.0);
  for (int i = 0; i < bt.size(); ++i) EXPECT_EQ(sigma[i], bt.points[i].node);
  EXPECT_THROW(induced_map_sigma(t, bt, -0.5), std::invalid_argument);
}

TEST(InducedMaps, OrderPreservingOnRandomPairs) {
  gen::rng_t rng(59);
  for (int iter = 0; iter < 20; ++iter) {
    const int k = iter % 3;
    const nested_pair p = gen::random_nested_pair(rng, 8, k, gen::random_metric(rng),
                                                  iter % 2 == 0, 1 + iter % 2);
    const gamma_tree gx = build_gamma(compute_distance_matrix(p.x, p.m), k);
    const gamma_tree gy = build_gamma(compute_distance_matrix(p.y, p.m), k);
    const branch_tree bx = extract_branch_points(gx);
    const branch_tree by = extract_branch_points(gy);
    const auto i_star = induced_map_i(p, gx, bx, gy, by);
    const auto theta_star = induced_map_theta(p, gx, bx, gy, by);
    for (int a = 0; a < bx.size(); ++a)
      for (int b = 0; b < bx.size(); ++b)
        if (node_leq(gx, bx.points[a].node, bx.points[b].node))
          ASSERT_TRUE(node_leq(gy, i_star[a], i_star[b]));
    for (int a = 0; a < by.size(); ++a)
      for (int b = 0; b < by.size(); ++b)
        if (node_leq(gy, by.points[a].node, by.points[b].node))
          ASSERT_TRUE(node_leq(gx, theta_star[a], theta_star[b]));
  }
}

TEST(VerifyInterleaving, LineCloudDegreeZero) {
  const interleaving_report rep = verify_interleaving(golden_pair(0, 0.6));
  EXPECT_TRUE(rep.pass);
  EXPECT_TRUE(rep.eq4.pass && rep.eq5.pass && rep.eq6.pass);
  EXPECT_TRUE(rep.join_compat.pass && rep.pi0_diagram.pass);
  EXPECT_EQ(rep.config_distance, 0.5);
  EXPECT_EQ(rep.r, 0.6);
  EXPECT_EQ(rep.k, 0);
  EXPECT_EQ(rep.metric_label, "euclidean");
  EXPECT_EQ(rep.max_shift, 1.0);
  EXPECT_GT(rep.eq4.checked, 0);
  EXPECT_GT(rep.pi0_diagram.checked, 0);
}

TEST(VerifyInterleaving, LineCloudDegreeOne) {
  const interleaving_report rep = verify_interleaving(golden_pair(1, 1.1));
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.config_distance, 1.0);
  EXPECT_EQ(rep.max_shift, 0.0);  // both branch trees are single births here
}

TEST(VerifyInterleaving, ReportSerializationIsStable) {
  const json a = report_to_json(verify_interleaving(golden_pair(0, 0.6)));
  const json b = report_to_json(verify_interleaving(golden_pair(0, 0.6)));
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_TRUE(a.at("pass").get<bool>());
  EXPECT_EQ(a.at("checks").at("eq4").at("pass"), true);
  EXPECT_EQ(a.at("config_hausdorff"), 0.5);
}

TEST(VerifyInterleaving, RandomNestedPairsPass) {
  gen::rng_t rng(61);
  for (int iter = 0; iter < 40; ++iter) {
    const int k = iter % 3;
    const nested_pair p = gen::random_nested_pair(rng, 9, k, gen::random_metric(rng),
                                                  iter % 2 == 0, 1 + iter % 3);
    const interleaving_report rep = verify_interleaving(p);
    std::string why;
    for (const auto* c : {&rep.eq4, &rep.eq5, &rep.eq6, &rep.join_compat, &rep.pi0_diagram})
      if (!c->failures.empty()) why += c->failures.front() + "; ";
    ASSERT_TRUE(rep.pass) << "iter " << iter << ": " << why;
    ASSERT_LE(rep.max_shift, 2 * p.r);
  }
}
