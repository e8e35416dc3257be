#pragma once

// Brute-force ground truth. Backtracks over the lexicographic list of
// candidate node pairs; deliberately shares nothing with the constrained or
// enumeration code beyond the core types.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "graphreal/core.hpp"

namespace graphreal {

inline constexpr std::size_t kOracleMaxNodes = 10;

struct OracleQuery {
  /// Degree of each label (need not be sorted).
  std::vector<int> degrees;
  /// Edges (focal, j) for j in the set are excluded.
  std::optional<ForbiddenSet> forbidden_star;
  /// Edges that every reported graph must contain.
  std::optional<LabeledGraph> fixed_partial;

  OracleQuery() = default;
  explicit OracleQuery(const DegreeSequence& d) : degrees(d.vector()) {}
  explicit OracleQuery(std::vector<int> per_label) : degrees(std::move(per_label)) {}
};

/// Every simple labeled graph satisfying the query, sorted. Throws
/// OracleTooLarge beyond kOracleMaxNodes nodes.
std::vector<LabeledGraph> oracle_enumerate(const OracleQuery& q);

/// Stops at the first solution.
bool oracle_exists(const OracleQuery& q);

std::uint64_t oracle_count(const OracleQuery& q);

}  // namespace graphreal
