#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "graphreal/core.hpp"
#include "graphreal/numeric.hpp"
#include "graphreal/rng.hpp"

namespace graphreal {

/// A realization drawn by walking the realization tree uniformly at every
/// level, together with its exact probability.
struct RealizationSample {
  LabeledGraph graph;
  Rational probability;
  /// Family size at each level; probability is the inverse of their product.
  std::vector<std::size_t> branch_sizes;
};

/// Throws NotGraphical.
RealizationSample sample_weighted(const DegreeSequence& d, SplitMix64& rng);
RealizationSample sample_weighted(const DegreeSequence& d, std::uint64_t seed, std::uint64_t stream = 0);

struct CountEstimate {
  /// Exact mean of 1/P(G) over the draws.
  Rational mean;
  double estimate = 0.0;
  double standard_error = 0.0;
  std::uint64_t samples = 0;
};

/// Importance-sampling estimate of |G(d)|. Draw k uses stream k of seed, so
/// the result does not depend on threads.
CountEstimate estimate_count(const DegreeSequence& d, std::uint64_t samples, std::uint64_t seed,
                             unsigned threads = 1);

struct MrRunStats {
  std::uint64_t restarts = 0;
  std::uint64_t self_loops = 0;
  std::uint64_t multi_edges = 0;
  std::uint64_t cg_rejects = 0;
  /// Every stub pairing drawn, including ones in abandoned attempts.
  std::uint64_t stub_connections = 0;

  MrRunStats& operator+=(const MrRunStats& other);
};

struct MrOptions {
  bool early_reject = false;
  /// Maximum stub pairings per returned sample.
  std::uint64_t budget = 10'000'000;
};

struct MrSample {
  LabeledGraph graph;
  MrRunStats stats;
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const MrRunStats& stats)
      : Error(ErrorKind::RestartBudgetExceeded, "stub-matching restart budget exceeded"), stats_(stats) {}
  const MrRunStats& stats() const noexcept { return stats_; }

 private:
  MrRunStats stats_;
};

/// Uniform stub pairing with restart on self-loops and multi-edges
/// (Molloy-Reed). With early_reject, each new edge i-j is followed by the
/// constrained test at i and then at j, with their current neighbours
/// forbidden; a failure abandons the attempt. Throws NotGraphical or
/// BudgetExceeded.
MrSample molloy_reed_sample(const DegreeSequence& d, SplitMix64& rng, const MrOptions& options = {});
MrSample molloy_reed_sample(const DegreeSequence& d, std::uint64_t seed, const MrOptions& options = {},
                            std::uint64_t stream = 0);

/// The early-rejection check after connecting first -> second: true when
/// the residual degrees cannot be completed without a second edge at either
/// endpoint. neighbours[k - 1] lists the current neighbours of label k.
bool cg_rejects_connection(std::span<const int> residual,
                           const std::vector<std::vector<NodeLabel>>& neighbours, NodeLabel first,
                           NodeLabel second);

}  // namespace graphreal
