#pragma once

// Exhaustive construction of every labeled realization of a degree
// sequence. Each level of the search fixes the complete neighbourhood of the
// node with the largest residual degree, choosing among all neighbourhoods
// that keep the remainder graphical.

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "graphreal/core.hpp"
#include "graphreal/numeric.hpp"

namespace graphreal {

struct FamilyStats {
  std::uint64_t cg_calls = 0;
  std::uint64_t dominance_skips = 0;
};

/// Number of most recently accepted sets scanned before falling back to a
/// constrained-graphicality call.
inline constexpr std::size_t kDominanceWindow = 8;

/// Neighbourhood choices for one focal node.
struct FocalFamily {
  NodeLabel focal = 0;
  /// Graphicality-preserving adjacency sets, in decreasing colex order of
  /// degree rank (largest residual first, smallest label on ties).
  std::vector<AdjacencySet> sets;
};

/// Family of the node with the largest residual degree (smallest label on
/// ties). Empty when the residual is not graphical; focal is 0 when every
/// residual is zero.
FocalFamily focal_family(std::span<const int> residual, FamilyStats* stats = nullptr);

/// A_R(1): the colex-largest graphicality-preserving adjacency set of node 1,
/// built greedily from the right. Throws NotGraphical.
AdjacencySet rightmost_adjacency_set(const DegreeSequence& d, FamilyStats* stats = nullptr);

/// All graphicality-preserving adjacency sets of node 1, decreasing colex
/// order. The first element equals rightmost_adjacency_set(d).
/// Throws NotGraphical.
std::vector<AdjacencySet> all_adjacency_sets(const DegreeSequence& d, FamilyStats* stats = nullptr);

/// Lazy depth-first walk over the realization tree. Emits each labeled
/// realization once; stopping early costs nothing for unvisited subtrees.
class RealizationEnumerator {
 public:
  explicit RealizationEnumerator(const DegreeSequence& d);
  /// Restricts the walk to top-level branches [first, last).
  RealizationEnumerator(const DegreeSequence& d, std::size_t first, std::size_t last);

  std::optional<LabeledGraph> next();

  /// |family| at every level on the path to the last emitted graph.
  const std::vector<std::size_t>& branch_sizes() const noexcept { return branch_sizes_; }

  /// Size of the top-level family, known after the first next() (0 when not
  /// graphical or no edges).
  std::size_t root_branches() const noexcept { return root_branches_; }

  const FamilyStats& stats() const noexcept { return stats_; }

 private:
  struct Frame {
    std::vector<int> residual;  // before applying the current set
    FocalFamily family;
    std::size_t index = 0;
    std::size_t end = 0;
    std::size_t edge_mark = 0;
  };

  void apply_current(Frame& frame);
  bool descend();
  LabeledGraph leaf() const;

  std::size_t n_ = 0;
  std::vector<Frame> stack_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> branch_sizes_;
  std::size_t root_branches_ = 0;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> pending_root_;
  std::size_t first_ = 0;
  std::size_t last_ = 0;
  FamilyStats stats_;
};

/// Calls visit(graph, branch_sizes) for every realization until it returns
/// false. Returns the number of graphs visited.
std::uint64_t enumerate_all(
    const DegreeSequence& d,
    const std::function<bool(const LabeledGraph&, std::span<const std::size_t>)>& visit);

std::vector<LabeledGraph> enumerate_all(const DegreeSequence& d);

struct ParallelOptions {
  unsigned threads = 1;
  /// Emit in single-threaded order.
  bool ordered = true;
};

/// Splits the walk at the top-level family; each worker owns whole
/// subtrees. visit is only ever called from the calling thread.
std::uint64_t enumerate_parallel(const DegreeSequence& d, const ParallelOptions& options,
                                 const std::function<bool(const LabeledGraph&)>& visit);

/// Count cache keyed on the sorted multiset of positive residual degrees.
/// Safe for concurrent use; concurrent inserts of one key keep the first.
class CountMemo {
 public:
  std::optional<BigInt> find(const std::vector<int>& key);
  void insert(const std::vector<int>& key, const BigInt& value);

  std::size_t entries() const;
  std::uint64_t hits() const noexcept { return hits_.load(); }

 private:
  mutable std::mutex mutex_;
  std::map<std::vector<int>, BigInt> table_;
  std::atomic<std::uint64_t> hits_{0};
};

struct CountResult {
  BigInt count = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t memo_entries = 0;
};

/// |G(d)| via the sum over the top-level family. Zero when not graphical.
CountResult count_realizations(const DegreeSequence& d, bool memoize = true, unsigned threads = 1);

/// Same recursion on an arbitrary residual view (labels kept in place).
BigInt count_residual(std::span<const int> residual, CountMemo* memo);

}  // namespace graphreal
