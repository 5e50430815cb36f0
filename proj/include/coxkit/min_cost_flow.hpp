#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace coxkit {

/// Successive shortest paths with Bellman-Ford, so arc costs may be
/// negative as long as the network has no negative cycle.
class MinCostFlow {
 public:
  using Value = std::int64_t;
  static constexpr Value kUnbounded = std::numeric_limits<Value>::max() / 4;

  explicit MinCostFlow(int nodes);

  /// Returns an arc handle for `flow()`.
  int add_arc(int from, int to, Value capacity, Value cost);

  struct Result {
    Value flow = 0;
    Value cost = 0;
  };

  /// Augments along cheapest s-t paths until `max_flow` is reached, no
  /// path is left, or (with `only_negative`) the cheapest path costs >= 0.
  Result solve(int s, int t, Value max_flow = kUnbounded, bool only_negative = false);

  Value flow(int arc) const { return arcs_[arc].flow; }

  /// Shortest distances from `s` in the residual network; kUnbounded for
  /// unreachable nodes. Throws std::logic_error on a negative cycle.
  std::vector<Value> residual_distances(int s) const;

  int node_count() const { return static_cast<int>(out_.size()); }

 private:
  struct Arc {
    int to;
    Value capacity;
    Value cost;
    Value flow;
  };
  std::vector<Arc> arcs_;  // arc i and its reverse i ^ 1
  std::vector<std::vector<int>> out_;
};

}  // namespace coxkit
