#include <gtest/gtest.h>

#include "graphreal/oracle.hpp"

using namespace graphreal;

TEST(Oracle, Examples) {
  EXPECT_EQ(oracle_enumerate(OracleQuery(DegreeSequence({2, 2, 1, 1}))),
            (std::vector<LabeledGraph>{LabeledGraph(4, {{1, 2}, {1, 3}, {2, 4}}),
                                       LabeledGraph(4, {{1, 2}, {1, 4}, {2, 3}})}));

  OracleQuery star(DegreeSequence({1, 1, 1, 1}));
  star.forbidden_star = ForbiddenSet(1, {2});
  EXPECT_EQ(oracle_enumerate(star), (std::vector<LabeledGraph>{LabeledGraph(4, {{1, 3}, {2, 4}}),
                                                               LabeledGraph(4, {{1, 4}, {2, 3}})}));

  EXPECT_TRUE(oracle_enumerate(OracleQuery(DegreeSequence({3, 2, 1}))).empty());
  EXPECT_TRUE(oracle_exists(OracleQuery(DegreeSequence({2, 2, 2, 2}))));
  EXPECT_FALSE(oracle_exists(OracleQuery(DegreeSequence({1, 1, 1}))));
}

TEST(Oracle, FixedPartial) {
  OracleQuery q(DegreeSequence({2, 2, 1, 1}));
  q.fixed_partial = LabeledGraph(4, {{1, 2}, {3, 4}});
  EXPECT_FALSE(oracle_exists(q));

  q.fixed_partial = LabeledGraph(4, {{1, 3}});
  EXPECT_EQ(oracle_enumerate(q), (std::vector<LabeledGraph>{LabeledGraph(4, {{1, 2}, {1, 3}, {2, 4}})}));

  // A careless start on the 4-cycle sequence.
  q = OracleQuery(DegreeSequence({2, 2, 2, 2}));
  q.fixed_partial = LabeledGraph(4, {{1, 2}, {1, 3}, {2, 3}});
  EXPECT_FALSE(oracle_exists(q));
}

TEST(Oracle, CountsAgreeWithEnumeration) {
  EXPECT_EQ(oracle_count(OracleQuery(DegreeSequence({1, 1, 1, 1}))), 3u);
  EXPECT_EQ(oracle_count(OracleQuery(DegreeSequence({2, 2, 2, 2}))), 3u);
  EXPECT_EQ(oracle_count(OracleQuery(DegreeSequence({3, 3, 3, 3}))), 1u);
  EXPECT_EQ(oracle_count(OracleQuery(DegreeSequence({2, 2, 2, 2, 2}))), 12u);
  EXPECT_EQ(oracle_count(OracleQuery(DegreeSequence({0, 0}))), 1u);
}

TEST(Oracle, EveryGraphRealizesItsQuery) {
  const std::vector<int> degrees{3, 1, 2, 2, 1, 3};
  OracleQuery q(degrees);
  q.forbidden_star = ForbiddenSet(6, {1});
  const auto graphs = oracle_enumerate(q);
  ASSERT_FALSE(graphs.empty());
  for (const auto& g : graphs) {
    EXPECT_EQ(g.degrees(), degrees);
    EXPECT_FALSE(g.has_edge(1, 6));
  }
  EXPECT_TRUE(std::is_sorted(graphs.begin(), graphs.end()));
}

TEST(Oracle, RelabelingPreservesCount) {
  // Counts depend only on the multiset of degrees.
  EXPECT_EQ(oracle_count(OracleQuery(std::vector<int>{1, 2, 1, 2})),
            oracle_count(OracleQuery(DegreeSequence({2, 2, 1, 1}))));
  EXPECT_EQ(oracle_count(OracleQuery(std::vector<int>{2, 3, 3, 2, 2})),
            oracle_count(OracleQuery(DegreeSequence({3, 3, 2, 2, 2}))));
}

TEST(Oracle, TooLarge) {
  try {
    oracle_exists(OracleQuery(std::vector<int>(11, 2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OracleTooLarge);
  }
}
