#include "graphreal/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "graphreal/constrained.hpp"
#include "graphreal/enumeration.hpp"
#include "graphreal/graphicality.hpp"

namespace graphreal {

namespace {

void require_graphical(const DegreeSequence& d) {
  if (!erdos_gallai_test(d).graphical) throw Error(ErrorKind::NotGraphical, "degree sequence is not graphical");
}

}  // namespace

RealizationSample sample_weighted(const DegreeSequence& d, SplitMix64& rng) {
  require_graphical(d);
  RealizationSample out;
  std::vector<int> residual = d.vector();
  std::vector<Edge> edges;
  BigInt denominator = 1;

  for (;;) {
    auto family = focal_family(residual);
    if (family.focal == 0) break;
    const auto size = family.sets.size();
    const auto& chosen = family.sets[static_cast<std::size_t>(rng.below(size))];
    for (auto v : chosen.members()) {
      edges.emplace_back(family.focal, v);
      --residual[static_cast<std::size_t>(v - 1)];
    }
    residual[static_cast<std::size_t>(family.focal - 1)] = 0;
    out.branch_sizes.push_back(size);
    denominator *= size;
  }
  out.graph = LabeledGraph(d.size(), std::move(edges));
  out.probability = Rational(BigInt(1), denominator);
  return out;
}

RealizationSample sample_weighted(const DegreeSequence& d, std::uint64_t seed, std::uint64_t stream) {
  auto rng = SplitMix64::stream(seed, stream);
  return sample_weighted(d, rng);
}

CountEstimate estimate_count(const DegreeSequence& d, std::uint64_t samples, std::uint64_t seed,
                             unsigned threads) {
  if (samples == 0) throw Error(ErrorKind::InvalidDegree, "estimate needs at least one sample");
  require_graphical(d);

  struct Sums {
    BigInt total = 0;
    BigInt squares = 0;
  };
  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    Sums s;
    for (std::uint64_t k = begin; k < end; ++k) {
      const auto draw = sample_weighted(d, seed, k);
      BigInt weight = 1;
      for (auto b : draw.branch_sizes) weight *= b;
      s.total += weight;
      s.squares += weight * weight;
    }
    return s;
  };

  Sums sums;
  const unsigned workers = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, samples));
  if (workers == 1) {
    sums = run(0, samples);
  } else {
    std::vector<Sums> partial(workers);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      const auto begin = samples * t / workers;
      const auto end = samples * (t + 1) / workers;
      pool.emplace_back([&, t, begin, end] { partial[t] = run(begin, end); });
    }
    for (auto& th : pool) th.join();
    for (const auto& p : partial) {
      sums.total += p.total;
      sums.squares += p.squares;
    }
  }

  CountEstimate out;
  out.samples = samples;
  out.mean = Rational(sums.total, BigInt(samples));
  out.estimate = out.mean.convert_to<double>();
  if (samples > 1) {
    const BigInt n = samples;
    // Unbiased sample variance from exact sums.
    const Rational variance(sums.squares * n - sums.total * sums.total, n * (n - 1));
    out.standard_error = std::sqrt(variance.convert_to<double>() / static_cast<double>(samples));
  }
  return out;
}

MrRunStats& MrRunStats::operator+=(const MrRunStats& other) {
  restarts += other.restarts;
  self_loops += other.self_loops;
  multi_edges += other.multi_edges;
  cg_rejects += other.cg_rejects;
  stub_connections += other.stub_connections;
  return *this;
}

bool cg_rejects_connection(std::span<const int> residual,
                           const std::vector<std::vector<NodeLabel>>& neighbours, NodeLabel first,
                           NodeLabel second) {
  for (NodeLabel focal : {first, second}) {
    if (!cg_test(residual, focal, ForbiddenSet(focal, neighbours[static_cast<std::size_t>(focal - 1)])))
      return true;
  }
  return false;
}

MrSample molloy_reed_sample(const DegreeSequence& d, SplitMix64& rng, const MrOptions& options) {
  require_graphical(d);
  const auto n = d.size();
  MrSample out;
  auto& stats = out.stats;

  std::vector<NodeLabel> stubs;
  std::vector<int> residual;
  std::vector<std::vector<NodeLabel>> neighbours;
  std::vector<char> adjacent;
  std::vector<Edge> edges;

  for (;;) {
    stubs.clear();
    for (std::size_t k = 0; k < n; ++k) stubs.insert(stubs.end(), static_cast<std::size_t>(d.degrees()[k]),
                                                      static_cast<NodeLabel>(k + 1));
    residual = d.vector();
    neighbours.assign(n, {});
    adjacent.assign(n * n, 0);
    edges.clear();

    bool failed = false;
    while (!stubs.empty()) {
      if (stats.stub_connections >= options.budget) throw BudgetExceeded(stats);
      ++stats.stub_connections;

      auto draw = [&] {
        const auto at = static_cast<std::size_t>(rng.below(stubs.size()));
        const NodeLabel label = stubs[at];
        stubs[at] = stubs.back();
        stubs.pop_back();
        return label;
      };
      const NodeLabel i = draw();
      const NodeLabel j = draw();
      const auto iu = static_cast<std::size_t>(i - 1);
      const auto ju = static_cast<std::size_t>(j - 1);

      if (i == j) {
        ++stats.self_loops;
        failed = true;
        break;
      }
      if (adjacent[iu * n + ju]) {
        ++stats.multi_edges;
        failed = true;
        break;
      }
      adjacent[iu * n + ju] = adjacent[ju * n + iu] = 1;
      neighbours[iu].push_back(j);
      neighbours[ju].push_back(i);
      --residual[iu];
      --residual[ju];
      edges.emplace_back(i, j);

      if (options.early_reject && cg_rejects_connection(residual, neighbours, i, j)) {
        ++stats.cg_rejects;
        failed = true;
        break;
      }
    }
    if (!failed) break;
    ++stats.restarts;
  }
  out.graph = LabeledGraph(n, std::move(edges));
  return out;
}

MrSample molloy_reed_sample(const DegreeSequence& d, std::uint64_t seed, const MrOptions& options,
                            std::uint64_t stream) {
  auto rng = SplitMix64::stream(seed, stream);
  return molloy_reed_sample(d, rng, options);
}

}  // namespace graphreal
