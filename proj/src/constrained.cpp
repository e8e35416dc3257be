#include "graphreal/constrained.hpp"

#include <algorithm>

#include "graphreal/graphicality.hpp"

namespace graphreal {

namespace {

void check_label(NodeLabel v, std::size_t n, const char* what) {
  if (v < 1 || static_cast<std::size_t>(v) > n)
    throw Error(ErrorKind::InvalidSet, std::string(what) + " " + std::to_string(v) + " outside 1.." +
                                           std::to_string(n));
}

void check_comparable(const AdjacencySet& a, const AdjacencySet& b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::Incomparable, "adjacency sets differ in cardinality");
}

}  // namespace

bool ReducedSequence::has_negative() const {
  return std::any_of(residual.begin(), residual.end(), [](int v) { return v < 0; });
}

bool ReducedSequence::graphical() const { return !has_negative() && is_graphical(residual); }

ReducedSequence reduce_by_set(std::span<const int> residual, const AdjacencySet& a) {
  const auto n = residual.size();
  check_label(a.focal(), n, "focal");
  ReducedSequence out{std::vector<int>(residual.begin(), residual.end()), a.focal()};
  for (auto v : a.members()) {
    check_label(v, n, "member");
    --out.residual[static_cast<std::size_t>(v - 1)];
  }
  out.residual[static_cast<std::size_t>(a.focal() - 1)] = 0;
  return out;
}

ReducedSequence reduce_by_set(const DegreeSequence& d, const AdjacencySet& a) {
  return reduce_by_set(d.degrees(), a);
}

bool set_leq(const AdjacencySet& b, const AdjacencySet& a) {
  check_comparable(a, b);
  if (a.focal() != b.focal()) throw Error(ErrorKind::Incomparable, "adjacency sets of different focal nodes");
  const auto& bm = b.members();
  const auto& am = a.members();
  for (std::size_t k = 0; k < am.size(); ++k) {
    if (bm[k] > am[k]) return false;
  }
  return true;
}

bool colex_less(const AdjacencySet& a, const AdjacencySet& b) {
  check_comparable(a, b);
  const auto& am = a.members();
  const auto& bm = b.members();
  for (std::size_t k = am.size(); k-- > 0;) {
    if (am[k] != bm[k]) return am[k] < bm[k];
  }
  return false;
}

AdjacencySet leftmost_restricted(std::span<const int> residual, NodeLabel i, const ForbiddenSet& x) {
  const auto n = residual.size();
  check_label(i, n, "focal");
  if (x.focal() != i) throw Error(ErrorKind::InvalidSet, "forbidden set belongs to another focal node");
  for (auto v : x.members()) check_label(v, n, "forbidden member");
  const int di = residual[static_cast<std::size_t>(i - 1)];
  if (di < 0) throw Error(ErrorKind::InvalidDegree, "focal node has negative residual degree");
  if (static_cast<long long>(x.size()) > static_cast<long long>(n) - 1 - di)
    throw Error(ErrorKind::TooManyForbidden, "|X| = " + std::to_string(x.size()) + " exceeds n - 1 - d_i = " +
                                                 std::to_string(static_cast<long long>(n) - 1 - di));

  std::vector<NodeLabel> allowed;
  allowed.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto label = static_cast<NodeLabel>(k + 1);
    if (label != i && !x.contains(label)) allowed.push_back(label);
  }
  std::stable_sort(allowed.begin(), allowed.end(), [&](NodeLabel a, NodeLabel b) {
    return residual[static_cast<std::size_t>(a - 1)] > residual[static_cast<std::size_t>(b - 1)];
  });
  allowed.resize(static_cast<std::size_t>(di));
  std::sort(allowed.begin(), allowed.end());
  return AdjacencySet(i, std::move(allowed));
}

AdjacencySet leftmost_restricted(const DegreeSequence& d, NodeLabel i, const ForbiddenSet& x) {
  return leftmost_restricted(d.degrees(), i, x);
}

bool cg_test(std::span<const int> residual, NodeLabel i, const ForbiddenSet& x) {
  return reduce_by_set(residual, leftmost_restricted(residual, i, x)).graphical();
}

bool cg_test(const DegreeSequence& d, NodeLabel i, const ForbiddenSet& x) {
  return cg_test(d.degrees(), i, x);
}

}  // namespace graphreal
