#include "graphreal/graphicality.hpp"

#include <algorithm>
#include <functional>

namespace graphreal {

namespace {

// Erdos-Gallai over a nonincreasing, nonnegative sequence stored 0-based.
EgReport erdos_gallai_sorted(std::span<const int> d, EgCutoff cutoff) {
  EgReport report;
  const int n = static_cast<int>(d.size());

  long long total = 0;
  std::vector<long long> prefix(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k < n; ++k) {
    prefix[static_cast<std::size_t>(k) + 1] = prefix[static_cast<std::size_t>(k)] + d[static_cast<std::size_t>(k)];
  }
  total = prefix[static_cast<std::size_t>(n)];
  report.parity_ok = total % 2 == 0;

  // k = n only matters when some d_k exceeds n - 1.
  int last_k = n;
  if (cutoff == EgCutoff::TripathiVijay) {
    int s = 0;
    while (s < n && d[static_cast<std::size_t>(s)] >= s + 1) ++s;
    last_k = s;
  }
  report.s_bound = last_k;

  // count_ge = #{i : d_i >= k}; shrinks as k grows.
  int count_ge = n;
  for (int k = 1; k <= last_k; ++k) {
    while (count_ge > 0 && d[static_cast<std::size_t>(count_ge - 1)] < k) --count_ge;
    const int split = std::max(k, count_ge);
    const long long rhs = static_cast<long long>(k) * (k - 1) +
                          static_cast<long long>(k) * (split - k) +
                          (total - prefix[static_cast<std::size_t>(split)]);
    if (prefix[static_cast<std::size_t>(k)] > rhs) {
      report.first_violated_k = k;
      break;
    }
  }
  report.graphical = report.parity_ok && !report.first_violated_k;
  return report;
}

std::vector<int> order_by_residual(const std::vector<int>& residual, NodeLabel exclude, int max_degree) {
  // Stable counting sort: largest residual first, smallest label on ties.
  std::vector<std::vector<int>> buckets(static_cast<std::size_t>(max_degree) + 1);
  for (std::size_t k = 0; k < residual.size(); ++k) {
    const auto label = static_cast<NodeLabel>(k + 1);
    if (label == exclude || residual[k] <= 0) continue;
    buckets[static_cast<std::size_t>(residual[k])].push_back(label);
  }
  std::vector<int> order;
  for (auto b = buckets.rbegin(); b != buckets.rend(); ++b) order.insert(order.end(), b->begin(), b->end());
  return order;
}

}  // namespace

EgReport erdos_gallai_test(const DegreeSequence& d, EgCutoff cutoff) {
  return erdos_gallai_sorted(d.degrees(), cutoff);
}

bool is_graphical(std::span<const int> degrees) {
  std::vector<int> sorted(degrees.begin(), degrees.end());
  const auto n = static_cast<int>(sorted.size());
  for (int v : sorted) {
    if (v < 0 || v > n - 1) return false;
  }
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return erdos_gallai_sorted(sorted, EgCutoff::TripathiVijay).graphical;
}

DegreeSequence havel_hakimi_reduce(const DegreeSequence& d) {
  if (d.empty() || d[1] < 1)
    throw Error(ErrorKind::InvalidDegree, "reduction needs a nonempty sequence with d_1 >= 1");
  const auto n = d.size();
  const auto d1 = static_cast<std::size_t>(d[1]);
  if (d1 > n - 1) throw Error(ErrorKind::DegreeTooLarge, "d_1 exceeds n - 1");

  std::vector<int> rest(d.degrees().begin() + 1, d.degrees().end());
  for (std::size_t k = 0; k < d1; ++k) {
    if (--rest[k] < 0) throw Error(ErrorKind::NotGraphical, "reduction produces a negative degree");
  }
  std::sort(rest.begin(), rest.end(), std::greater<>());
  return DegreeSequence(std::move(rest));
}

const char* to_string(NodeSelectionPolicy policy) {
  switch (policy) {
    case NodeSelectionPolicy::MaxResidual: return "max";
    case NodeSelectionPolicy::MinResidual: return "min";
    case NodeSelectionPolicy::FixedLabelOrder: return "fixed";
  }
  return "unknown";
}

LabeledGraph havel_hakimi_construct(const DegreeSequence& d, NodeSelectionPolicy policy) {
  std::vector<int> residual = d.vector();
  const int max_degree = d.empty() ? 0 : d[1];
  std::vector<Edge> edges;

  for (;;) {
    NodeLabel focal = 0;
    for (std::size_t k = 0; k < residual.size(); ++k) {
      if (residual[k] <= 0) continue;
      const auto label = static_cast<NodeLabel>(k + 1);
      if (focal == 0) {
        focal = label;
        if (policy == NodeSelectionPolicy::FixedLabelOrder) break;
        continue;
      }
      const int best = residual[static_cast<std::size_t>(focal - 1)];
      if ((policy == NodeSelectionPolicy::MaxResidual && residual[k] > best) ||
          (policy == NodeSelectionPolicy::MinResidual && residual[k] < best))
        focal = label;
    }
    if (focal == 0) break;

    auto& stubs = residual[static_cast<std::size_t>(focal - 1)];
    const auto order = order_by_residual(residual, focal, max_degree);
    if (order.size() < static_cast<std::size_t>(stubs))
      throw Error(ErrorKind::NotGraphical, "node " + std::to_string(focal) + " has no valid attachment");
    for (int k = 0; k < stubs; ++k) {
      const NodeLabel target = order[static_cast<std::size_t>(k)];
      --residual[static_cast<std::size_t>(target - 1)];
      edges.emplace_back(focal, target);
    }
    stubs = 0;
  }
  return LabeledGraph(d.size(), std::move(edges));
}

}  // namespace graphreal
