#include <gtest/gtest.h>

#include <map>

#include "graphreal/enumeration.hpp"
#include "graphreal/sampling.hpp"
#include "support.hpp"

using namespace graphreal;
using namespace graphreal::testing;

namespace {

const DegreeSequence kTwoHubs({3, 3, 2, 2, 2, 2, 2, 2});

Rational leaf_probability(std::span<const std::size_t> sizes) {
  BigInt product = 1;
  for (auto s : sizes) product *= s;
  return Rational(BigInt(1), product);
}

}  // namespace

TEST(SplitMix64, ReferenceVector) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng.next(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(rng.next(), 0x06c45d188009454fULL);

  auto stream = SplitMix64::stream(42, 0);
  EXPECT_EQ(stream.next(), 0x57e1faba65107204ULL);
}

TEST(SplitMix64, BelowStaysInRange) {
  SplitMix64 rng(9);
  std::vector<int> hits(7, 0);
  for (int k = 0; k < 70000; ++k) ++hits[rng.below(7)];
  for (int h : hits) EXPECT_NEAR(h, 10000, 500);
}

TEST(Weighted, Examples) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto s = sample_weighted(DegreeSequence({2, 2, 2, 2}), seed);
    EXPECT_EQ(s.probability, Rational(1, 3));
    EXPECT_EQ(s.branch_sizes, (std::vector<std::size_t>{3, 1}));
    EXPECT_EQ(s.graph.degrees(), (std::vector<int>{2, 2, 2, 2}));
  }
  const auto edge = sample_weighted(DegreeSequence({1, 1}), 5);
  EXPECT_EQ(edge.graph, LabeledGraph(2, {{1, 2}}));
  EXPECT_EQ(edge.probability, Rational(1));

  const auto k4 = sample_weighted(DegreeSequence({3, 3, 3, 3}), 5);
  EXPECT_EQ(k4.graph.edge_count(), 6u);
  EXPECT_EQ(k4.probability, Rational(1));

  EXPECT_THROW(sample_weighted(DegreeSequence({1, 1, 1}), 5), Error);
}

TEST(Weighted, DeterministicPerSeedAndStream) {
  const auto a = sample_weighted(kTwoHubs, 77, 4);
  const auto b = sample_weighted(kTwoHubs, 77, 4);
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.probability, b.probability);
}

TEST(Weighted, ProbabilityMatchesBranchProduct) {
  for (std::uint64_t stream = 0; stream < 50; ++stream) {
    const auto s = sample_weighted(kTwoHubs, 3, stream);
    EXPECT_EQ(s.probability, leaf_probability(s.branch_sizes));
    EXPECT_EQ(s.graph.degrees(), kTwoHubs.vector());
  }
}

TEST(Weighted, NormalizationAndEstimatorIdentity) {
  for (const auto& d : graphical_family(6)) {
    Rational total = 0;
    Rational weighted_inverse = 0;
    const auto count = enumerate_all(d, [&](const LabeledGraph&, std::span<const std::size_t> sizes) {
      const auto p = leaf_probability(sizes);
      total += p;
      weighted_inverse += p * (1 / p);
      return true;
    });
    ASSERT_EQ(total, Rational(1));
    ASSERT_EQ(weighted_inverse, Rational(BigInt(count)));
  }
}

TEST(Weighted, DistributionIsNotAlwaysUniform) {
  bool found = false;
  for (const auto& d : graphical_family(6)) {
    std::set<Rational> probabilities;
    enumerate_all(d, [&](const LabeledGraph&, std::span<const std::size_t> sizes) {
      probabilities.insert(leaf_probability(sizes));
      return true;
    });
    if (probabilities.size() > 1) {
      found = true;
      break;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Estimate, ExactOnUniformTrees) {
  const auto cycle = estimate_count(DegreeSequence({2, 2, 2, 2}), 50, 1);
  EXPECT_EQ(cycle.mean, Rational(3));
  EXPECT_DOUBLE_EQ(cycle.estimate, 3.0);
  EXPECT_DOUBLE_EQ(cycle.standard_error, 0.0);
  EXPECT_EQ(estimate_count(DegreeSequence({1, 1}), 10, 1).mean, Rational(1));
}

TEST(Estimate, ThreadIndependentAndClose) {
  const auto one = estimate_count(kTwoHubs, 4000, 11, 1);
  const auto four = estimate_count(kTwoHubs, 4000, 11, 4);
  EXPECT_EQ(one.mean, four.mean);
  EXPECT_EQ(one.samples, 4000u);
  EXPECT_NEAR(one.estimate, 4265.0, 6 * one.standard_error + 1);
}

TEST(MolloyReed, Examples) {
  const auto edge = molloy_reed_sample(DegreeSequence({1, 1}), 1);
  EXPECT_EQ(edge.graph, LabeledGraph(2, {{1, 2}}));
  EXPECT_EQ(edge.stats.restarts, 0u);
  EXPECT_EQ(edge.stats.stub_connections, 1u);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto tri = molloy_reed_sample(DegreeSequence({2, 2, 2}), seed);
    EXPECT_EQ(tri.graph, LabeledGraph(3, {{1, 2}, {1, 3}, {2, 3}}));
    EXPECT_EQ(tri.stats.restarts, tri.stats.self_loops + tri.stats.multi_edges + tri.stats.cg_rejects);
  }
  EXPECT_THROW(molloy_reed_sample(DegreeSequence({1, 1, 1}), 1), Error);
}

TEST(MolloyReed, Deterministic) {
  MrOptions options;
  options.early_reject = true;
  const auto a = molloy_reed_sample(kTwoHubs, 5, options, 2);
  const auto b = molloy_reed_sample(kTwoHubs, 5, options, 2);
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.stats.stub_connections, b.stats.stub_connections);
}

TEST(MolloyReed, BudgetExceeded) {
  MrOptions options;
  options.budget = 2;
  try {
    molloy_reed_sample(kTwoHubs, 1, options);
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RestartBudgetExceeded);
    EXPECT_EQ(e.stats().stub_connections, 2u);
  }
}

TEST(MolloyReed, RoughlyUniformOnCycles) {
  for (bool early : {false, true}) {
    MrOptions options;
    options.early_reject = early;
    std::map<LabeledGraph, int> freq;
    SplitMix64 rng(123);
    for (int k = 0; k < 6000; ++k) ++freq[molloy_reed_sample(DegreeSequence({2, 2, 2, 2}), rng, options).graph];
    ASSERT_EQ(freq.size(), 3u);
    for (const auto& [g, c] : freq) EXPECT_NEAR(c / 6000.0, 1.0 / 3, 0.03);
  }
}

TEST(EarlyReject, RejectionsAreNeverCompletable) {
  std::size_t rejections = 0;
  for (const auto& d : graphical_family(5)) {
    const auto n = d.size();
    for_each_bounded_subgraph(d.vector(), [&](const std::vector<Edge>& edges) {
      if (edges.empty()) return;
      const LabeledGraph partial(n, edges);
      std::vector<int> residual = d.vector();
      std::vector<std::vector<NodeLabel>> neighbours(n);
      for (const auto& [u, v] : edges) {
        --residual[static_cast<std::size_t>(u - 1)];
        --residual[static_cast<std::size_t>(v - 1)];
        neighbours[static_cast<std::size_t>(u - 1)].push_back(v);
        neighbours[static_cast<std::size_t>(v - 1)].push_back(u);
      }
      const auto [u, v] = edges.back();
      if (!cg_rejects_connection(residual, neighbours, u, v)) return;
      ++rejections;
      OracleQuery q(d);
      q.fixed_partial = partial;
      ASSERT_FALSE(oracle_exists(q));
    });
  }
  EXPECT_GT(rejections, 0u);
}
