#pragma once

// Exhaustive generators shared by the unit and acceptance suites. Only core
// types and the oracle are used here, so families built from these helpers
// stay independent of the code under test.

#include <functional>
#include <vector>

#include "graphreal/core.hpp"
#include "graphreal/oracle.hpp"

namespace graphreal::testing {

/// Every nonincreasing sequence of length n with entries in [0, max_degree].
inline std::vector<std::vector<int>> nonincreasing_sequences(int n, int max_degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int cap) {
    if (static_cast<int>(current.size()) == n) {
      out.push_back(current);
      return;
    }
    for (int v = cap; v >= 0; --v) {
      current.push_back(v);
      rec(v);
      current.pop_back();
    }
  };
  rec(max_degree);
  return out;
}

/// Nonincreasing sequences with 1 <= n <= max_n and entries <= n - 1.
inline std::vector<DegreeSequence> sequence_family(int max_n) {
  std::vector<DegreeSequence> out;
  for (int n = 1; n <= max_n; ++n) {
    for (auto& s : nonincreasing_sequences(n, n - 1)) out.emplace_back(std::move(s));
  }
  return out;
}

/// Members of sequence_family(max_n) the oracle can realize.
inline std::vector<DegreeSequence> graphical_family(int max_n) {
  std::vector<DegreeSequence> out;
  for (auto& d : sequence_family(max_n)) {
    if (oracle_exists(OracleQuery(d))) out.push_back(std::move(d));
  }
  return out;
}

/// All k-subsets of the given labels, each sorted increasing.
inline std::vector<std::vector<NodeLabel>> subsets_of_size(const std::vector<NodeLabel>& pool, std::size_t k) {
  std::vector<std::vector<NodeLabel>> out;
  std::vector<NodeLabel> current;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (current.size() == k) {
      out.push_back(current);
      return;
    }
    for (std::size_t p = start; p < pool.size(); ++p) {
      current.push_back(pool[p]);
      rec(p + 1);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

/// Every subset of the given labels.
inline std::vector<std::vector<NodeLabel>> all_subsets(const std::vector<NodeLabel>& pool) {
  std::vector<std::vector<NodeLabel>> out;
  for (std::size_t k = 0; k <= pool.size(); ++k) {
    auto part = subsets_of_size(pool, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/// Labels 1..n other than the given one.
inline std::vector<NodeLabel> others(std::size_t n, NodeLabel except) {
  std::vector<NodeLabel> out;
  for (NodeLabel v = 1; v <= static_cast<NodeLabel>(n); ++v) {
    if (v != except) out.push_back(v);
  }
  return out;
}

/// Graphicality of the residual after removing `focal` and decrementing the
/// members, decided by the oracle.
inline bool oracle_reduction_graphical(const DegreeSequence& d, NodeLabel focal, const std::vector<NodeLabel>& members) {
  auto residual = d.vector();
  for (auto v : members) --residual[static_cast<std::size_t>(v - 1)];
  residual[static_cast<std::size_t>(focal - 1)] = 0;
  for (int v : residual) {
    if (v < 0) return false;
  }
  return oracle_exists(OracleQuery(residual));
}

/// Every simple subgraph of K_n whose degrees stay within `bound`.
inline void for_each_bounded_subgraph(const std::vector<int>& bound,
                                      const std::function<void(const std::vector<Edge>&)>& visit) {
  const auto n = static_cast<NodeLabel>(bound.size());
  std::vector<Edge> pairs;
  for (NodeLabel u = 1; u <= n; ++u) {
    for (NodeLabel v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<int> degree(bound.size(), 0);
  std::vector<Edge> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t p) {
    if (p == pairs.size()) {
      visit(chosen);
      return;
    }
    rec(p + 1);
    const auto [u, v] = pairs[p];
    auto& du = degree[static_cast<std::size_t>(u - 1)];
    auto& dv = degree[static_cast<std::size_t>(v - 1)];
    if (du < bound[static_cast<std::size_t>(u - 1)] && dv < bound[static_cast<std::size_t>(v - 1)]) {
      ++du;
      ++dv;
      chosen.push_back(pairs[p]);
      rec(p + 1);
      chosen.pop_back();
      --du;
      --dv;
    }
  };
  rec(0);
}

}  // namespace graphreal::testing
