#include "graphreal/core.hpp"

#include <algorithm>
#include <numeric>

namespace graphreal {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidDegree: return "InvalidDegree";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::InvalidSet: return "InvalidSet";
    case ErrorKind::Incomparable: return "Incomparable";
    case ErrorKind::TooManyForbidden: return "TooManyForbidden";
    case ErrorKind::NotGraphical: return "NotGraphical";
    case ErrorKind::RestartBudgetExceeded: return "RestartBudgetExceeded";
    case ErrorKind::OracleTooLarge: return "OracleTooLarge";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  for (std::size_t k = 0; k < degrees_.size(); ++k) {
    if (degrees_[k] < 0)
      throw Error(ErrorKind::InvalidDegree, "negative degree at position " + std::to_string(k + 1));
    if (k > 0 && degrees_[k] > degrees_[k - 1])
      throw Error(ErrorKind::InvalidDegree, "degree sequence is not nonincreasing");
  }
}

long long DegreeSequence::sum() const noexcept {
  return std::accumulate(degrees_.begin(), degrees_.end(), 0LL);
}

namespace {

template <typename T>
ValidatedSequence validate_impl(std::span<const T> raw) {
  if (raw.empty()) throw Error(ErrorKind::InvalidDegree, "empty degree sequence");

  std::vector<std::pair<long long, NodeLabel>> kept;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    const auto d = static_cast<long long>(raw[k]);
    if (d < 0) throw Error(ErrorKind::InvalidDegree, "negative degree " + std::to_string(d));
    if (d > 0) kept.emplace_back(d, static_cast<NodeLabel>(k + 1));
  }
  const auto n = static_cast<long long>(kept.size());
  for (const auto& [d, pos] : kept) {
    if (d > n - 1)
      throw Error(ErrorKind::DegreeTooLarge, "degree " + std::to_string(d) + " at position " +
                                                 std::to_string(pos) + " exceeds n - 1 = " +
                                                 std::to_string(n - 1));
  }
  // Ties keep input order.
  std::stable_sort(kept.begin(), kept.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });

  ValidatedSequence out;
  out.input_size = raw.size();
  std::vector<int> degrees;
  degrees.reserve(kept.size());
  for (const auto& [d, pos] : kept) {
    degrees.push_back(static_cast<int>(d));
    out.original_label.push_back(pos);
  }
  out.sequence = DegreeSequence(std::move(degrees));
  return out;
}

}  // namespace

ValidatedSequence validate_input_sequence(std::span<const long long> raw) {
  return validate_impl(raw);
}

ValidatedSequence validate_input_sequence(std::span<const int> raw) {
  return validate_impl(raw);
}

AdjacencySet::AdjacencySet(NodeLabel focal, std::vector<NodeLabel> members)
    : focal_(focal), members_(std::move(members)) {
  if (focal_ < 1) throw Error(ErrorKind::InvalidSet, "focal label must be positive");
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (members_[k] < 1) throw Error(ErrorKind::InvalidSet, "member labels must be positive");
    if (members_[k] == focal_) throw Error(ErrorKind::InvalidSet, "adjacency set contains its focal node");
    if (k > 0 && members_[k] <= members_[k - 1])
      throw Error(ErrorKind::InvalidSet, "adjacency set members must be strictly increasing");
  }
}

bool AdjacencySet::contains(NodeLabel v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

ForbiddenSet::ForbiddenSet(NodeLabel focal, std::vector<NodeLabel> members)
    : focal_(focal), members_(std::move(members)) {
  if (focal_ < 1) throw Error(ErrorKind::InvalidSet, "focal label must be positive");
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw Error(ErrorKind::InvalidSet, "forbidden set has duplicate members");
  for (auto v : members_) {
    if (v < 1) throw Error(ErrorKind::InvalidSet, "member labels must be positive");
    if (v == focal_) throw Error(ErrorKind::InvalidSet, "forbidden set contains its focal node");
  }
}

bool ForbiddenSet::contains(NodeLabel v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

LabeledGraph::LabeledGraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  const auto limit = static_cast<NodeLabel>(n_);
  for (auto& [u, v] : edges_) {
    if (u == v) throw Error(ErrorKind::InvalidGraph, "self-loop at node " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 1 || v > limit)
      throw Error(ErrorKind::InvalidGraph, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                               ") outside 1.." + std::to_string(n_));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw Error(ErrorKind::InvalidGraph, "duplicate edge");
}

bool LabeledGraph::has_edge(NodeLabel u, NodeLabel v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<int> LabeledGraph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const auto& [u, v] : edges_) {
    ++deg[static_cast<std::size_t>(u - 1)];
    ++deg[static_cast<std::size_t>(v - 1)];
  }
  return deg;
}

GraphDegrees graph_degree_sequence(const LabeledGraph& g) {
  GraphDegrees out;
  out.per_label = g.degrees();
  auto sorted = out.per_label;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  out.sorted = DegreeSequence(std::move(sorted));
  return out;
}

}  // namespace graphreal
