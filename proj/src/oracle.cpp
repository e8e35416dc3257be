#include "graphreal/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace graphreal {

namespace {

class Backtracker {
 public:
  using Visit = std::function<bool(const std::vector<Edge>&)>;

  explicit Backtracker(const OracleQuery& q) : n_(q.degrees.size()) {
    if (n_ > kOracleMaxNodes)
      throw Error(ErrorKind::OracleTooLarge, "oracle is limited to " + std::to_string(kOracleMaxNodes) + " nodes");

    residual_ = q.degrees;
    if (q.fixed_partial) {
      if (q.fixed_partial->node_count() != n_)
        throw Error(ErrorKind::InvalidGraph, "partial graph has a different node count");
      fixed_ = q.fixed_partial->edges();
      for (const auto& [u, v] : fixed_) {
        --residual_[static_cast<std::size_t>(u - 1)];
        --residual_[static_cast<std::size_t>(v - 1)];
      }
    }

    auto blocked = [&](NodeLabel u, NodeLabel v) {
      if (q.fixed_partial && q.fixed_partial->has_edge(u, v)) return true;
      if (q.forbidden_star) {
        const auto& x = *q.forbidden_star;
        if ((u == x.focal() && x.contains(v)) || (v == x.focal() && x.contains(u))) return true;
      }
      return false;
    };
    remaining_.assign(n_, 0);
    for (NodeLabel u = 1; u <= static_cast<NodeLabel>(n_); ++u) {
      for (NodeLabel v = u + 1; v <= static_cast<NodeLabel>(n_); ++v) {
        if (blocked(u, v)) continue;
        pairs_.emplace_back(u, v);
        ++remaining_[static_cast<std::size_t>(u - 1)];
        ++remaining_[static_cast<std::size_t>(v - 1)];
      }
    }
  }

  void run(const Visit& visit) {
    long long demand = 0;
    for (std::size_t k = 0; k < n_; ++k) {
      if (residual_[k] < 0 || residual_[k] > remaining_[k]) return;
      demand += residual_[k];
    }
    if (demand % 2 != 0) return;
    demand_ = demand;
    visit_ = &visit;
    stopped_ = false;
    search(0);
  }

 private:
  int& res(NodeLabel v) { return residual_[static_cast<std::size_t>(v - 1)]; }
  int& rem(NodeLabel v) { return remaining_[static_cast<std::size_t>(v - 1)]; }

  void search(std::size_t p) {
    if (stopped_) return;
    if (demand_ == 0) {
      auto edges = fixed_;
      edges.insert(edges.end(), chosen_.begin(), chosen_.end());
      if (!(*visit_)(edges)) stopped_ = true;
      return;
    }
    if (p == pairs_.size()) return;
    const auto [u, v] = pairs_[p];

    --rem(u);
    --rem(v);
    if (res(u) > 0 && res(v) > 0) {
      --res(u);
      --res(v);
      demand_ -= 2;
      chosen_.emplace_back(u, v);
      if (res(u) <= rem(u) && res(v) <= rem(v)) search(p + 1);
      chosen_.pop_back();
      demand_ += 2;
      ++res(u);
      ++res(v);
    }
    if (res(u) <= rem(u) && res(v) <= rem(v)) search(p + 1);
    ++rem(u);
    ++rem(v);
  }

  std::size_t n_;
  std::vector<int> residual_;
  std::vector<int> remaining_;
  std::vector<Edge> pairs_;
  std::vector<Edge> fixed_;
  std::vector<Edge> chosen_;
  long long demand_ = 0;
  const Visit* visit_ = nullptr;
  bool stopped_ = false;
};

}  // namespace

std::vector<LabeledGraph> oracle_enumerate(const OracleQuery& q) {
  std::vector<LabeledGraph> out;
  const auto n = q.degrees.size();
  Backtracker(q).run([&](const std::vector<Edge>& edges) {
    out.emplace_back(n, edges);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool oracle_exists(const OracleQuery& q) {
  bool found = false;
  Backtracker(q).run([&](const std::vector<Edge>&) {
    found = true;
    return false;
  });
  return found;
}

std::uint64_t oracle_count(const OracleQuery& q) {
  std::uint64_t count = 0;
  Backtracker(q).run([&](const std::vector<Edge>&) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace graphreal
