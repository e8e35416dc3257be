#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "graphreal/core.hpp"

using namespace graphreal;

namespace {

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected graphreal::Error";
  return ErrorKind::ParseError;
}

}  // namespace

TEST(ValidateInput, PathSequenceIsKept) {
  const std::vector<int> raw{2, 1, 1};
  const auto v = validate_input_sequence(raw);
  EXPECT_EQ(v.sequence.vector(), (std::vector<int>{2, 1, 1}));
  EXPECT_EQ(v.original_label, (std::vector<NodeLabel>{1, 2, 3}));
}

TEST(ValidateInput, SortsStripsZerosAndRecordsLabels) {
  const std::vector<int> raw{1, 2, 0, 1};
  const auto v = validate_input_sequence(raw);
  EXPECT_EQ(v.sequence.vector(), (std::vector<int>{2, 1, 1}));
  // Ties keep input order: the two 1s were at positions 1 and 4.
  EXPECT_EQ(v.original_label, (std::vector<NodeLabel>{2, 1, 4}));
  EXPECT_EQ(v.input_size, 4u);
}

TEST(ValidateInput, Errors) {
  EXPECT_EQ(kind_of([] { validate_input_sequence(std::vector<int>{5, 1, 1, 1}); }), ErrorKind::DegreeTooLarge);
  EXPECT_EQ(kind_of([] { validate_input_sequence(std::vector<int>{2, -1, 1}); }), ErrorKind::InvalidDegree);
  EXPECT_EQ(kind_of([] { validate_input_sequence(std::vector<int>{}); }), ErrorKind::InvalidDegree);
  // A zero does not count towards n.
  EXPECT_EQ(kind_of([] { validate_input_sequence(std::vector<int>{2, 1, 0}); }), ErrorKind::DegreeTooLarge);
}

TEST(ValidateInput, Idempotent) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<int> raw(static_cast<std::size_t>(n));
    for (auto& d : raw) d = static_cast<int>(rng() % static_cast<unsigned>(n));
    ValidatedSequence once;
    try {
      once = validate_input_sequence(raw);
    } catch (const Error&) {
      continue;
    }
    if (once.sequence.empty()) continue;  // all zeros
    const auto twice = validate_input_sequence(once.sequence.degrees());
    EXPECT_EQ(twice.sequence, once.sequence);
  }
}

TEST(DegreeSequence, RejectsUnsortedAndNegative) {
  EXPECT_EQ(kind_of([] { DegreeSequence({1, 2, 1}); }), ErrorKind::InvalidDegree);
  EXPECT_EQ(kind_of([] { DegreeSequence({2, -1}); }), ErrorKind::InvalidDegree);
  EXPECT_NO_THROW(DegreeSequence({3, 2, 1}));
  EXPECT_NO_THROW(DegreeSequence({0, 0, 0}));
  EXPECT_EQ(DegreeSequence({3, 3, 2, 2}).sum(), 10);
}

TEST(GraphDegreeSequence, Examples) {
  const LabeledGraph triangle(3, {{1, 2}, {2, 3}, {1, 3}});
  EXPECT_EQ(graph_degree_sequence(triangle).sorted.vector(), (std::vector<int>{2, 2, 2}));

  const LabeledGraph empty(3);
  EXPECT_EQ(graph_degree_sequence(empty).sorted.vector(), (std::vector<int>{0, 0, 0}));

  const LabeledGraph path(3, {{1, 2}, {2, 3}});
  const auto degrees = graph_degree_sequence(path);
  EXPECT_EQ(degrees.per_label, (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(degrees.sorted.vector(), (std::vector<int>{2, 1, 1}));
}

TEST(GraphDegreeSequence, HandshakeOnRandomGraphs) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    std::vector<Edge> edges;
    for (NodeLabel u = 1; u <= n; ++u) {
      for (NodeLabel v = u + 1; v <= n; ++v) {
        if (rng() % 2) edges.emplace_back(v, u);  // reversed on purpose
      }
    }
    const LabeledGraph g(static_cast<std::size_t>(n), edges);
    const auto per_label = graph_degree_sequence(g).per_label;
    EXPECT_EQ(std::accumulate(per_label.begin(), per_label.end(), 0) % 2, 0);
    EXPECT_EQ(std::accumulate(per_label.begin(), per_label.end(), 0u), 2 * g.edge_count());
  }
}

TEST(LabeledGraph, CanonicalEquality) {
  const LabeledGraph a(4, {{3, 1}, {2, 1}, {4, 3}});
  const LabeledGraph b(4, {{1, 2}, {1, 3}, {3, 4}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.edges(), (std::vector<Edge>{{1, 2}, {1, 3}, {3, 4}}));
  EXPECT_TRUE(a.has_edge(3, 1));
  EXPECT_FALSE(a.has_edge(2, 3));
  EXPECT_NE(a, LabeledGraph(5, {{1, 2}, {1, 3}, {3, 4}}));
}

TEST(LabeledGraph, RejectsNonSimple) {
  EXPECT_EQ(kind_of([] { LabeledGraph(3, {{1, 1}}); }), ErrorKind::InvalidGraph);
  EXPECT_EQ(kind_of([] { LabeledGraph(3, {{1, 2}, {2, 1}}); }), ErrorKind::InvalidGraph);
  EXPECT_EQ(kind_of([] { LabeledGraph(3, {{1, 4}}); }), ErrorKind::InvalidGraph);
}

TEST(AdjacencySet, FuzzRejectsInvalidMembers) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const NodeLabel focal = 1 + static_cast<NodeLabel>(rng() % 6);
    std::vector<NodeLabel> members(rng() % 5);
    for (auto& m : members) m = 1 + static_cast<NodeLabel>(rng() % 6);
    const bool sorted_unique = std::adjacent_find(members.begin(), members.end(),
                                                  [](int a, int b) { return a >= b; }) == members.end();
    const bool has_focal = std::find(members.begin(), members.end(), focal) != members.end();
    if (sorted_unique && !has_focal) {
      EXPECT_NO_THROW(AdjacencySet(focal, members));
    } else {
      EXPECT_EQ(kind_of([&] { AdjacencySet(focal, members); }), ErrorKind::InvalidSet);
    }
  }
}

TEST(ForbiddenSet, SortsAndRejectsFocal) {
  const ForbiddenSet x(2, {5, 1, 3});
  EXPECT_EQ(x.members(), (std::vector<NodeLabel>{1, 3, 5}));
  EXPECT_TRUE(x.contains(3));
  EXPECT_EQ(kind_of([] { ForbiddenSet(2, {2}); }), ErrorKind::InvalidSet);
  EXPECT_EQ(kind_of([] { ForbiddenSet(2, {3, 3}); }), ErrorKind::InvalidSet);
}
