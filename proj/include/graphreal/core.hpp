#pragma once

// Shared domain types: degree sequences, adjacency/forbidden sets and
// labeled simple graphs. Node labels are 1-based throughout the public API;
// containers indexed by label store label k at offset k - 1.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graphreal {

enum class ErrorKind {
  InvalidDegree,
  DegreeTooLarge,
  InvalidSet,
  Incomparable,
  TooManyForbidden,
  NotGraphical,
  RestartBudgetExceeded,
  OracleTooLarge,
  InvalidGraph,
  ParseError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

using NodeLabel = int;

/// Nonincreasing sequence of nonnegative degrees, d_1 >= ... >= d_n. Zeros
/// are allowed (residual views). Entries above n - 1 are representable so
/// that tests can report them as not graphical; user input goes through
/// validate_input_sequence, which strips zeros and rejects such entries.
class DegreeSequence {
 public:
  DegreeSequence() = default;
  explicit DegreeSequence(std::vector<int> degrees);

  std::size_t size() const noexcept { return degrees_.size(); }
  bool empty() const noexcept { return degrees_.empty(); }

  /// Degree of 1-based label k.
  int operator[](NodeLabel k) const { return degrees_[static_cast<std::size_t>(k - 1)]; }

  std::span<const int> degrees() const noexcept { return degrees_; }
  const std::vector<int>& vector() const noexcept { return degrees_; }

  long long sum() const noexcept;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> degrees_;
};

/// Result of canonicalizing raw user input.
struct ValidatedSequence {
  DegreeSequence sequence;
  /// original_label[k - 1] is the 1-based input position of sorted label k.
  std::vector<NodeLabel> original_label;
  /// Length of the raw input, zeros included.
  std::size_t input_size = 0;
};

ValidatedSequence validate_input_sequence(std::span<const long long> raw);
ValidatedSequence validate_input_sequence(std::span<const int> raw);

/// Increasingly ordered set of distinct labels attached to a focal node.
class AdjacencySet {
 public:
  AdjacencySet() = default;
  /// Throws InvalidSet unless members are strictly increasing, positive and
  /// exclude the focal node.
  AdjacencySet(NodeLabel focal, std::vector<NodeLabel> members);

  NodeLabel focal() const noexcept { return focal_; }
  const std::vector<NodeLabel>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(NodeLabel v) const;

  friend bool operator==(const AdjacencySet&, const AdjacencySet&) = default;

 private:
  NodeLabel focal_ = 0;
  std::vector<NodeLabel> members_;
};

/// X(i): labels the focal node must not connect to. Stored sorted.
class ForbiddenSet {
 public:
  ForbiddenSet() = default;
  ForbiddenSet(NodeLabel focal, std::vector<NodeLabel> members);

  NodeLabel focal() const noexcept { return focal_; }
  const std::vector<NodeLabel>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(NodeLabel v) const;

 private:
  NodeLabel focal_ = 0;
  std::vector<NodeLabel> members_;
};

using Edge = std::pair<NodeLabel, NodeLabel>;

/// Simple undirected graph on labels 1..n. Edges are kept as (min, max)
/// pairs sorted lexicographically, so equality is labeled equality.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(std::size_t n) : n_(n) {}
  /// Canonicalizes the edge list. Throws InvalidGraph on self-loops,
  /// duplicate pairs or labels outside 1..n.
  LabeledGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool has_edge(NodeLabel u, NodeLabel v) const;

  /// Per-label degrees, index k - 1 holds the degree of label k.
  std::vector<int> degrees() const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;
  friend auto operator<=>(const LabeledGraph& a, const LabeledGraph& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.edges_ <=> b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

struct GraphDegrees {
  std::vector<int> per_label;
  DegreeSequence sorted;
};

GraphDegrees graph_degree_sequence(const LabeledGraph& g);

}  // namespace graphreal
