#include "coxkit/min_cost_flow.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace coxkit {

MinCostFlow::MinCostFlow(int nodes) : out_(nodes) {}

int MinCostFlow::add_arc(int from, int to, Value capacity, Value cost) {
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity, cost, 0});
  arcs_.push_back({from, 0, -cost, 0});
  out_[from].push_back(id);
  out_[to].push_back(id + 1);
  return id;
}

std::vector<MinCostFlow::Value> MinCostFlow::residual_distances(int s) const {
  const int n = node_count();
  std::vector<Value> dist(n, kUnbounded);
  std::vector<int> relaxations(n, 0);
  std::vector<bool> queued(n, false);
  std::deque<int> queue{s};
  dist[s] = 0;
  queued[s] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    queued[u] = false;
    for (int id : out_[u]) {
      const Arc& a = arcs_[id];
      if (a.capacity - a.flow <= 0 || dist[u] + a.cost >= dist[a.to]) continue;
      dist[a.to] = dist[u] + a.cost;
      if (++relaxations[a.to] > n) throw std::logic_error("negative cycle in residual network");
      if (!queued[a.to]) {
        queued[a.to] = true;
        queue.push_back(a.to);
      }
    }
  }
  return dist;
}

MinCostFlow::Result MinCostFlow::solve(int s, int t, Value max_flow, bool only_negative) {
  Result result;
  const int n = node_count();
  while (result.flow < max_flow) {
    // Bellman-Ford with parent arcs.
    std::vector<Value> dist(n, kUnbounded);
    std::vector<int> parent(n, -1);
    std::vector<bool> queued(n, false);
    std::deque<int> queue{s};
    dist[s] = 0;
    queued[s] = true;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      queued[u] = false;
      for (int id : out_[u]) {
        const Arc& a = arcs_[id];
        if (a.capacity - a.flow <= 0 || dist[u] + a.cost >= dist[a.to]) continue;
        dist[a.to] = dist[u] + a.cost;
        parent[a.to] = id;
        if (!queued[a.to]) {
          queued[a.to] = true;
          queue.push_back(a.to);
        }
      }
    }
    if (dist[t] == kUnbounded || (only_negative && dist[t] >= 0)) break;
    Value push = max_flow - result.flow;
    for (int v = t; v != s; v = arcs_[parent[v] ^ 1].to)
      push = std::min(push, arcs_[parent[v]].capacity - arcs_[parent[v]].flow);
    for (int v = t; v != s; v = arcs_[parent[v] ^ 1].to) {
      arcs_[parent[v]].flow += push;
      arcs_[parent[v] ^ 1].flow -= push;
    }
    result.flow += push;
    result.cost += push * dist[t];
  }
  return result;
}

}  // namespace coxkit
