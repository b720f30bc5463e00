#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "mobius/costing.hpp"
#include "mobius/error.hpp"
#include "mobius/fast_transforms.hpp"

namespace mobius {
namespace {

TEST(CostOfGraph, Examples) {
  EXPECT_EQ(cost_of_graph(Graph::identity(FiniteSet(7))), 0u);
  EXPECT_EQ(cost_of_graph(Graph::empty(FiniteSet(3), FiniteSet(4))), 0u);
  EXPECT_EQ(cost_of_graph(Graph(FiniteSet(3), FiniteSet(2), {{0, 0}, {1, 0}, {2, 0}, {2, 1}})), 2u);
  EXPECT_EQ(cost_of_graph(inclusion_graph(5, Relation::subset, true)), 180u);
}

TEST(CostOfGraph, ArrowsMinusImage) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const Graph g = inclusion_graph(n, Relation::superset, false);
    // every subset has a preimage, so cost = #arrows - #subsets = 3^n - 2^n
    std::uint64_t p3 = 1;
    for (std::size_t i = 0; i < n; ++i) p3 *= 3;
    EXPECT_EQ(g.arrow_count(), p3);
    EXPECT_EQ(cost_of_graph(g), p3 - (std::uint64_t{1} << n));
  }
}

TEST(CostOfMAlgorithm, HasseSequences) {
  EXPECT_EQ(cost_of_malgorithm(hasse_sequence(5, Relation::subset, true)), 75u);
  EXPECT_EQ(cost_of_malgorithm(hasse_sequence(12, Relation::subset, true)), 24564u);
  for (std::size_t n = 1; n <= 12; ++n) {
    EXPECT_EQ(cost_of_malgorithm(hasse_sequence(n, Relation::subset, false)), n << (n - 1));
    EXPECT_EQ(cost_of_malgorithm(hasse_sequence(n, Relation::superset, false)), n << (n - 1));
  }
  EXPECT_EQ(cost_of_malgorithm(obvious_algorithm(5, true)), 180u);
}

TEST(AnalyticCosts, Rows) {
  const auto r10 = analytic_costs(10);
  EXPECT_EQ(r10.subsets, 1024u);
  EXPECT_EQ(r10.cost_obvious, 57002u);
  EXPECT_EQ(r10.cost_hasse, 5110u);
  EXPECT_EQ(r10.cost_hasse_full, 5120u);
  EXPECT_NEAR(r10.ratio, 11.155, 5e-4);

  const auto r15 = analytic_costs(15);
  EXPECT_EQ(r15.cost_obvious, 14283372u);
  EXPECT_EQ(r15.cost_hasse, 245745u);
  EXPECT_NEAR(r15.ratio, 58.123, 5e-4);

  const auto r3 = analytic_costs(3);
  EXPECT_EQ(r3.slow_combine_additions, 56u);
  EXPECT_EQ(r3.slow_plausibility_additions, 19u);
  EXPECT_EQ(r3.fast_commonality_additions, 24u);
  EXPECT_EQ(r3.fast_plausibility_additions, 9u);

  EXPECT_EQ(static_cast<int>(std::floor(analytic_costs(5).addition_ratio())), 5);
  EXPECT_EQ(static_cast<int>(std::floor(analytic_costs(8).addition_ratio())), 23);
  EXPECT_EQ(static_cast<int>(std::floor(analytic_costs(10).addition_ratio())), 72);
  EXPECT_EQ(analytic_costs(5).multiplication_ratio(), 32.0);

  // n = 1: the Hasse cost is zero and the ratio is undefined
  EXPECT_TRUE(std::isnan(analytic_costs(1).ratio));
}

TEST(AnalyticCosts, Capacity) {
  EXPECT_THROW(analytic_costs(0), Error);
  EXPECT_THROW(analytic_costs(31), Error);
  EXPECT_NO_THROW(analytic_costs(30));
}

TEST(StageMerges, CountAndComposite) {
  const auto h = hasse_sequence(4, Relation::subset, false);
  const auto merges = stage_merges(h);
  EXPECT_EQ(merges.size(), 8u);
  for (const auto& m : merges) EXPECT_EQ(composite(m), composite(h));
  EXPECT_EQ(merges.front().stage_count(), 1u);
  EXPECT_EQ(merges.back().stage_count(), 4u);
}

// Among the decompositions obtained by grouping Hasse stages, only the
// all-singleton split reaches the minimum cost. The one tie is n = 2 without
// the empty set, where the single inclusion graph also costs 2.
TEST(Optimality, HasseSplitIsCheapestMerge) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::reverse(order.begin(), order.end());
    for (bool exclude : {false, true}) {
      const std::uint64_t best = exclude ? (n << (n - 1)) - n : (n << (n - 1));
      for (const auto& h : {hasse_sequence(n, Relation::subset, exclude),
                            hasse_sequence(n, Relation::subset, exclude, std::span<const std::size_t>(order))}) {
        for (const auto& m : stage_merges(h)) {
          ASSERT_TRUE(verify_decomposition(m).valid);
          const std::uint64_t cost = cost_of_malgorithm(m);
          EXPECT_GE(cost, best);
          if (m.stage_count() == n || (exclude && n == 2)) {
            EXPECT_EQ(cost, best);
          } else {
            EXPECT_GT(cost, best) << "n=" << n << " stages=" << m.stage_count();
          }
        }
      }
    }
  }
}

TEST(RunBenchmark, CountsMatchAnalytic) {
  BenchmarkConfig config;
  config.n_min = 5;
  config.n_max = 8;
  config.trials = 2;
  const auto reports = run_benchmark(config);
  EXPECT_EQ(reports.size(), 4u * 4u);
  for (const auto& r : reports) {
    ASSERT_TRUE(r.analytic_additions.has_value());
    EXPECT_EQ(r.additions, *r.analytic_additions);
    if (r.analytic_multiplications) {
      EXPECT_EQ(r.multiplications, *r.analytic_multiplications);
    }
    if (r.n == 5 && r.task == Task::mass_to_bel && r.arm == Arm::fast) {
      EXPECT_EQ(r.additions, 75u);
      EXPECT_EQ(r.per_stage, std::vector<std::uint64_t>(5, 15));
    }
    if (r.n == 8 && r.task == Task::mass_to_bel && r.arm == Arm::naive) {
      EXPECT_EQ(r.additions, 6050u);
    }
    EXPECT_GE(r.wall_time, 0.0);
  }
}

TEST(RunBenchmark, FastArmAtTwenty) {
  BenchmarkConfig config;
  config.n_min = config.n_max = 20;
  config.trials = 1;
  config.arms = {Arm::fast};
  config.tasks = {Task::mass_to_bel};
  const auto reports = run_benchmark(config);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].additions, 20u * ((1u << 19) - 1));
  EXPECT_GT(reports[0].wall_time, 0.0);
  EXPECT_LT(reports[0].wall_time, 5.0);
}

TEST(RunBenchmark, Limits) {
  BenchmarkConfig config;
  config.n_min = 5;
  config.n_max = 13;
  EXPECT_THROW(run_benchmark(config), Error);
  config.n_max = 4;
  EXPECT_THROW(run_benchmark(config), Error);
  config.n_min = 0;
  config.n_max = 3;
  EXPECT_THROW(run_benchmark(config), Error);
}

TEST(ComparisonTable, CsvColumns) {
  std::ostringstream analytic;
  write_csv(analytic, comparison_table(5, 6));
  EXPECT_EQ(analytic.str(),
            "n,subsets,cost_obvious,cost_hasse,ratio,slow_additions,fast_additions,addition_ratio,"
            "slow_multiplications,fast_multiplications,multiplication_ratio\n"
            "5,32,180,75,2.400,1203,235,5.119,1024,32,32.000\n"
            "6,64,602,186,3.237,4697,570,8.240,4096,64,64.000\n");

  BenchmarkConfig config;
  config.n_min = 5;
  config.n_max = 6;
  config.trials = 1;
  std::ostringstream measured;
  write_csv(measured, comparison_table(run_benchmark(config)));
  const std::string text = measured.str();
  const std::string header = text.substr(0, text.find('\n'));
  EXPECT_NE(header.find("measured_hasse"), std::string::npos);
  EXPECT_NE(header.find("seconds_fast_pipeline"), std::string::npos);
  EXPECT_NE(text.find("\n5,32,180,75,2.400,1203,235,5.119,1024,32,32.000,180,75,1203,235,1024,32,"),
            std::string::npos);
}

}  // namespace
}  // namespace mobius
