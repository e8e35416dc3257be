#pragma once

#include <optional>
#include <span>

#include "graphreal/core.hpp"

namespace graphreal {

struct EgReport {
  bool graphical = true;
  bool parity_ok = true;
  /// Smallest k (1-based) whose Erdos-Gallai inequality fails.
  std::optional<int> first_violated_k;
  /// Largest k actually checked.
  int s_bound = 0;
};

enum class EgCutoff {
  /// Check k = 1..s with d_s >= s > d_{s+1} - 1 (Tripathi-Vijay).
  TripathiVijay,
  /// Check every k = 1..n-1.
  Full,
};

EgReport erdos_gallai_test(const DegreeSequence& d, EgCutoff cutoff = EgCutoff::TripathiVijay);

/// Graphicality of an arbitrary (unsorted, possibly zero-padded) list of
/// nonnegative degrees. Negative entries or entries >= n are not graphical.
bool is_graphical(std::span<const int> degrees);

/// Removes d_1 and decrements the next d_1 entries, then re-sorts.
/// Throws NotGraphical when a decrement would go below zero.
DegreeSequence havel_hakimi_reduce(const DegreeSequence& d);

enum class NodeSelectionPolicy { MaxResidual, MinResidual, FixedLabelOrder };

const char* to_string(NodeSelectionPolicy policy);

/// Greedy construction: the policy picks the focal node, whose stubs go to
/// the nodes of largest residual degree (smallest label on ties).
/// Throws NotGraphical when some focal node runs out of partners.
LabeledGraph havel_hakimi_construct(const DegreeSequence& d,
                                    NodeSelectionPolicy policy = NodeSelectionPolicy::MaxResidual);

}  // namespace graphreal
