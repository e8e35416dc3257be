#pragma once

// Star-constrained graphicality. A node i with forbidden partners X(i) can
// be realized iff the sequence reduced by the leftmost allowed adjacency set
// L(i) is graphical.

#include <span>
#include <vector>

#include "graphreal/core.hpp"

namespace graphreal {

/// Residual degrees per original label after removing a focal node and
/// decrementing its neighbours. Entries may be -1, which marks the
/// reduction as not graphical.
struct ReducedSequence {
  std::vector<int> residual;
  NodeLabel removed = 0;

  bool has_negative() const;
  /// No negative entry and the multiset is graphical.
  bool graphical() const;
};

ReducedSequence reduce_by_set(std::span<const int> residual, const AdjacencySet& a);
ReducedSequence reduce_by_set(const DegreeSequence& d, const AdjacencySet& a);

/// Elementwise b_k <= a_k ("b is to the left of a"). Throws Incomparable on
/// focal or cardinality mismatch.
bool set_leq(const AdjacencySet& b, const AdjacencySet& a);

/// Colexicographic order: compare at the largest position where the sets
/// differ. Throws Incomparable on cardinality mismatch.
bool colex_less(const AdjacencySet& a, const AdjacencySet& b);

/// L(i): the d_i allowed nodes (not i, not in X) of largest residual degree,
/// smallest label first among equal degrees. On a nonincreasing sequence this
/// is exactly the d_i lowest allowed labels. Throws TooManyForbidden when
/// |X| > n - 1 - d_i.
AdjacencySet leftmost_restricted(std::span<const int> residual, NodeLabel i, const ForbiddenSet& x);
AdjacencySet leftmost_restricted(const DegreeSequence& d, NodeLabel i, const ForbiddenSet& x);

/// Can the residual degrees be realized by a simple graph with no edge
/// between i and any member of X? Accepts unsorted residual views (zeros
/// and all); labels are never re-assigned.
bool cg_test(std::span<const int> residual, NodeLabel i, const ForbiddenSet& x);
bool cg_test(const DegreeSequence& d, NodeLabel i, const ForbiddenSet& x);

}  // namespace graphreal
