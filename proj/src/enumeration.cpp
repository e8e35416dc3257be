#include "graphreal/enumeration.hpp"

#include <algorithm>
#include <condition_variable>
#include <deque>
#include <limits>
#include <thread>

#include "graphreal/constrained.hpp"
#include "graphreal/graphicality.hpp"

namespace graphreal {

namespace {

// Labels of positive-residual nodes, largest residual first, smallest label
// on ties. Rank 0 is the focal node.
std::vector<NodeLabel> degree_rank(std::span<const int> residual) {
  std::vector<NodeLabel> rank;
  for (std::size_t k = 0; k < residual.size(); ++k) {
    if (residual[k] > 0) rank.push_back(static_cast<NodeLabel>(k + 1));
  }
  std::stable_sort(rank.begin(), rank.end(), [&](NodeLabel a, NodeLabel b) {
    return residual[static_cast<std::size_t>(a - 1)] > residual[static_cast<std::size_t>(b - 1)];
  });
  return rank;
}

bool dominated(const std::vector<int>& candidate, const std::vector<std::vector<int>>& accepted) {
  const std::size_t window = std::min(accepted.size(), kDominanceWindow);
  for (std::size_t w = 0; w < window; ++w) {
    const auto& a = accepted[accepted.size() - 1 - w];
    bool leq = true;
    for (std::size_t k = 0; k < a.size() && leq; ++k) leq = candidate[k] <= a[k];
    if (leq) return true;
  }
  return false;
}

// Depth-first prefix extension over degree ranks. Members are chosen from the
// largest rank downwards, so completed sets come out in decreasing colex
// order. A prefix survives only if some completion from smaller ranks keeps
// the residual graphical: the chosen members and every skipped rank are
// forbidden for the focal node and the constrained test decides. Leftmost
// completions dominated by an accepted set are graphical without a test.
class FamilyBuilder {
 public:
  FamilyBuilder(std::span<const int> residual, FamilyStats* stats)
      : work_(residual.begin(), residual.end()), rank_(degree_rank(residual)), stats_(stats) {}

  FocalFamily run() {
    FocalFamily out;
    if (rank_.empty()) return out;
    out.focal = rank_.front();
    if (std::any_of(work_.begin(), work_.end(), [](int v) { return v < 0; })) return out;
    degree_ = work_[index(out.focal)];
    const int m = static_cast<int>(rank_.size());
    if (degree_ > m - 1) return out;

    extend(0, m);
    for (const auto& ranks : accepted_) {
      std::vector<NodeLabel> labels;
      labels.reserve(ranks.size());
      for (int p : ranks) labels.push_back(rank_[static_cast<std::size_t>(p)]);
      std::sort(labels.begin(), labels.end());
      out.sets.emplace_back(out.focal, std::move(labels));
    }
    return out;
  }

 private:
  static std::size_t index(NodeLabel v) { return static_cast<std::size_t>(v - 1); }

  void extend(int chosen_count, int bound) {
    const NodeLabel focal = rank_.front();
    const int need_after = degree_ - chosen_count - 1;
    for (int k = bound - 1; k >= need_after + 1 && k >= 1; --k) {
      const NodeLabel label = rank_[static_cast<std::size_t>(k)];
      --work_[index(focal)];
      --work_[index(label)];
      chosen_.push_back(k);

      std::vector<int> leftmost;
      leftmost.reserve(static_cast<std::size_t>(degree_));
      for (int p = 1; p <= need_after; ++p) leftmost.push_back(p);
      leftmost.insert(leftmost.end(), chosen_.rbegin(), chosen_.rend());

      bool viable;
      if (dominated(leftmost, accepted_)) {
        viable = true;
        if (stats_) ++stats_->dominance_skips;
      } else {
        std::vector<NodeLabel> forbidden;
        for (std::size_t p = static_cast<std::size_t>(k); p < rank_.size(); ++p) forbidden.push_back(rank_[p]);
        viable = cg_test(work_, focal, ForbiddenSet(focal, std::move(forbidden)));
        if (stats_) ++stats_->cg_calls;
      }

      if (viable) {
        if (need_after == 0) {
          accepted_.push_back(std::move(leftmost));
        } else {
          extend(chosen_count + 1, k);
        }
      }

      chosen_.pop_back();
      ++work_[index(label)];
      ++work_[index(focal)];
    }
  }

  std::vector<int> work_;
  std::vector<NodeLabel> rank_;
  FamilyStats* stats_;
  int degree_ = 0;
  std::vector<int> chosen_;  // ranks, descending
  std::vector<std::vector<int>> accepted_;
};

void require_graphical_head(const DegreeSequence& d) {
  if (d.empty() || d[1] < 1)
    throw Error(ErrorKind::InvalidDegree, "node 1 needs at least one stub");
  if (!erdos_gallai_test(d).graphical) throw Error(ErrorKind::NotGraphical, "degree sequence is not graphical");
}

std::vector<int> apply_set(std::vector<int> residual, const AdjacencySet& a) {
  for (auto v : a.members()) --residual[static_cast<std::size_t>(v - 1)];
  residual[static_cast<std::size_t>(a.focal() - 1)] = 0;
  return residual;
}

}  // namespace

FocalFamily focal_family(std::span<const int> residual, FamilyStats* stats) {
  return FamilyBuilder(residual, stats).run();
}

AdjacencySet rightmost_adjacency_set(const DegreeSequence& d, FamilyStats* stats) {
  require_graphical_head(d);
  const auto d1 = static_cast<std::size_t>(d[1]);
  NodeLabel last = static_cast<NodeLabel>(d.size());
  while (last > 1 && d[last] == 0) --last;

  // Start at the last node and walk left; keep a connection iff the
  // constrained test still passes with the kept nodes forbidden.
  std::vector<int> work = d.vector();
  std::vector<NodeLabel> kept;
  for (NodeLabel k = last; k >= 2 && kept.size() < d1; --k) {
    --work[0];
    --work[static_cast<std::size_t>(k - 1)];
    auto forbidden = kept;
    forbidden.push_back(k);
    if (stats) ++stats->cg_calls;
    if (cg_test(work, 1, ForbiddenSet(1, std::move(forbidden)))) {
      kept.push_back(k);
    } else {
      ++work[0];
      ++work[static_cast<std::size_t>(k - 1)];
    }
  }
  if (kept.size() < d1)
    throw Error(ErrorKind::NotGraphical, "rightmost adjacency set scan exhausted all candidates");
  std::reverse(kept.begin(), kept.end());
  return AdjacencySet(1, std::move(kept));
}

std::vector<AdjacencySet> all_adjacency_sets(const DegreeSequence& d, FamilyStats* stats) {
  require_graphical_head(d);
  return focal_family(d.degrees(), stats).sets;
}

RealizationEnumerator::RealizationEnumerator(const DegreeSequence& d)
    : RealizationEnumerator(d, 0, std::numeric_limits<std::size_t>::max()) {}

RealizationEnumerator::RealizationEnumerator(const DegreeSequence& d, std::size_t first, std::size_t last)
    : n_(d.size()), pending_root_(d.vector()), first_(first), last_(last) {
  done_ = !erdos_gallai_test(d).graphical;
}

void RealizationEnumerator::apply_current(Frame& frame) {
  const auto& set = frame.family.sets[frame.index];
  edges_.resize(frame.edge_mark);
  for (auto v : set.members()) edges_.emplace_back(frame.family.focal, v);
  pending_root_ = apply_set(frame.residual, set);
}

bool RealizationEnumerator::descend() {
  for (;;) {
    auto family = focal_family(pending_root_, &stats_);
    if (family.focal == 0) return true;
    if (family.sets.empty()) return false;

    Frame frame{pending_root_, std::move(family), 0, 0, edges_.size()};
    frame.end = frame.family.sets.size();
    if (stack_.empty()) {
      root_branches_ = frame.end;
      frame.index = first_;
      frame.end = std::min(last_, frame.end);
      if (frame.index >= frame.end) return false;
    }
    branch_sizes_.push_back(frame.family.sets.size());
    stack_.push_back(std::move(frame));
    apply_current(stack_.back());
  }
}

LabeledGraph RealizationEnumerator::leaf() const { return LabeledGraph(n_, edges_); }

std::optional<LabeledGraph> RealizationEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (!descend()) {
      done_ = true;
      return std::nullopt;
    }
    return leaf();
  }
  while (!stack_.empty()) {
    auto& top = stack_.back();
    if (++top.index < top.end) {
      apply_current(top);
      if (descend()) return leaf();
      // Every family member keeps the residual graphical, so descend()
      // cannot fail below the root.
      break;
    }
    edges_.resize(top.edge_mark);
    stack_.pop_back();
    branch_sizes_.pop_back();
  }
  done_ = true;
  return std::nullopt;
}

std::uint64_t enumerate_all(
    const DegreeSequence& d,
    const std::function<bool(const LabeledGraph&, std::span<const std::size_t>)>& visit) {
  RealizationEnumerator walker(d);
  std::uint64_t emitted = 0;
  while (auto g = walker.next()) {
    ++emitted;
    if (!visit(*g, walker.branch_sizes())) break;
  }
  return emitted;
}

std::vector<LabeledGraph> enumerate_all(const DegreeSequence& d) {
  std::vector<LabeledGraph> out;
  enumerate_all(d, [&](const LabeledGraph& g, std::span<const std::size_t>) {
    out.push_back(g);
    return true;
  });
  return out;
}

std::uint64_t enumerate_parallel(const DegreeSequence& d, const ParallelOptions& options,
                                 const std::function<bool(const LabeledGraph&)>& visit) {
  const auto branches = erdos_gallai_test(d).graphical ? focal_family(d.degrees()).sets.size() : 0;
  if (options.threads <= 1 || branches <= 1) {
    return enumerate_all(d, [&](const LabeledGraph& g, std::span<const std::size_t>) { return visit(g); });
  }

  std::mutex mutex;
  std::condition_variable ready_cv;
  std::vector<std::optional<std::vector<LabeledGraph>>> results(branches);
  std::deque<std::size_t> completed;
  std::atomic<std::size_t> next_branch{0};
  std::atomic<bool> stop{false};

  auto worker = [&] {
    for (;;) {
      const std::size_t b = next_branch.fetch_add(1);
      if (b >= branches || stop.load()) return;
      std::vector<LabeledGraph> buffer;
      RealizationEnumerator walker(d, b, b + 1);
      while (!stop.load()) {
        auto g = walker.next();
        if (!g) break;
        buffer.push_back(std::move(*g));
      }
      {
        std::lock_guard lock(mutex);
        results[b] = std::move(buffer);
        completed.push_back(b);
      }
      ready_cv.notify_all();
    }
  };

  const unsigned count = std::min<std::size_t>(options.threads, branches);
  std::vector<std::thread> pool;
  pool.reserve(count);
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);

  std::uint64_t emitted = 0;
  for (std::size_t taken = 0; taken < branches && !stop.load(); ++taken) {
    std::vector<LabeledGraph> batch;
    {
      std::unique_lock lock(mutex);
      if (options.ordered) {
        ready_cv.wait(lock, [&] { return results[taken].has_value(); });
        batch = std::move(*results[taken]);
      } else {
        ready_cv.wait(lock, [&] { return !completed.empty(); });
        const auto b = completed.front();
        completed.pop_front();
        batch = std::move(*results[b]);
      }
    }
    for (const auto& g : batch) {
      ++emitted;
      if (!visit(g)) {
        stop.store(true);
        break;
      }
    }
  }
  stop.store(true);
  for (auto& t : pool) t.join();
  return emitted;
}

std::optional<BigInt> CountMemo::find(const std::vector<int>& key) {
  std::lock_guard lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  hits_.fetch_add(1);
  return it->second;
}

void CountMemo::insert(const std::vector<int>& key, const BigInt& value) {
  std::lock_guard lock(mutex_);
  table_.try_emplace(key, value);
}

std::size_t CountMemo::entries() const {
  std::lock_guard lock(mutex_);
  return table_.size();
}

BigInt count_residual(std::span<const int> residual, CountMemo* memo) {
  if (std::any_of(residual.begin(), residual.end(), [](int v) { return v < 0; })) return 0;

  // The number of labeled realizations depends only on the multiset of
  // positive residual degrees: zero-degree nodes are isolated in every
  // realization, and a relabeling carrying one view onto another is a
  // bijection between their realization sets.
  std::vector<int> key;
  for (int v : residual) {
    if (v > 0) key.push_back(v);
  }
  if (key.empty()) return 1;
  std::sort(key.begin(), key.end(), std::greater<>());

  if (memo) {
    if (auto hit = memo->find(key)) return *hit;
  }
  const std::vector<int> base(residual.begin(), residual.end());
  BigInt total = 0;
  for (const auto& set : focal_family(residual).sets) total += count_residual(apply_set(base, set), memo);
  if (memo) memo->insert(key, total);
  return total;
}

CountResult count_realizations(const DegreeSequence& d, bool memoize, unsigned threads) {
  CountResult result;
  if (!erdos_gallai_test(d).graphical) return result;

  CountMemo memo;
  CountMemo* shared = memoize ? &memo : nullptr;
  const auto family = focal_family(d.degrees());
  if (threads <= 1 || family.sets.size() <= 1) {
    result.count = count_residual(d.degrees(), shared);
  } else {
    std::vector<BigInt> partial(family.sets.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t b; (b = next.fetch_add(1)) < family.sets.size();)
        partial[b] = count_residual(apply_set(d.vector(), family.sets[b]), shared);
    };
    std::vector<std::thread> pool;
    const unsigned count = std::min<std::size_t>(threads, family.sets.size());
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (const auto& p : partial) result.count += p;
  }
  if (memoize) {
    result.memo_hits = memo.hits();
    result.memo_entries = memo.entries();
  }
  return result;
}

}  // namespace graphreal
