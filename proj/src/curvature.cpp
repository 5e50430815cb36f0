#include "coxkit/curvature.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "coxkit/errors.hpp"
#include "coxkit/min_cost_flow.hpp"

namespace coxkit {

namespace {

// Distances from `source`, cut off beyond `limit`.
std::vector<int> bfs(const UndirectedGraph& g, int source, int limit) {
  std::vector<int> dist(g.size(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (dist[u] == limit) continue;
    for (int v : g.adjacency[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

}  // namespace

bool UndirectedGraph::adjacent(int u, int v) const {
  return std::binary_search(adjacency[u].begin(), adjacency[u].end(), v);
}

std::vector<std::pair<int, int>> UndirectedGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < static_cast<int>(size()); ++u)
    for (int v : adjacency[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

UndirectedGraph graph_from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  UndirectedGraph g;
  g.adjacency.resize(n);
  g.complete.assign(n, true);
  for (const auto& [u, v] : edges) {
    if (u == v || u < 0 || v < 0 || u >= static_cast<int>(n) || v >= static_cast<int>(n))
      throw ValidationError("bad edge");
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (auto& a : g.adjacency) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return g;
}

UndirectedGraph undirected_omega(const OmegaGraph& omega) {
  const GroupBall& ball = *omega.ball;
  std::vector<std::pair<int, int>> edges;
  for (const auto& arc : omega.arcs) edges.emplace_back(arc.from, arc.to);
  UndirectedGraph g = graph_from_edges(ball.size(), edges);
  for (ElementId w = 0; w < static_cast<ElementId>(ball.size()); ++w) {
    g.labels.push_back(ball.label(w));
    for (ElementId t : omega.X)
      if (!ball.try_multiply(t, w)) g.complete[w] = false;
  }
  return g;
}

std::vector<std::pair<int, int>> safe_edges(const UndirectedGraph& graph) {
  auto safe = [&](int v) {
    if (!graph.complete[v]) return false;
    for (int u : graph.adjacency[v])
      if (!graph.complete[u]) return false;
    return true;
  };
  std::vector<std::pair<int, int>> out;
  for (const auto& [u, v] : graph.edges())
    if (safe(u) && safe(v)) out.emplace_back(u, v);
  return out;
}

CurvatureRecord ollivier_ricci_edge(const UndirectedGraph& graph, int x, int y) {
  const int n = static_cast<int>(graph.size());
  if (x < 0 || y < 0 || x >= n || y >= n || !graph.adjacent(x, y))
    throw DomainError("curvature needs an edge {x, y}");
  for (int v : {x, y}) {
    if (!graph.complete[v]) throw OutOfBallError("neighbourhood of an endpoint leaves the ball");
    for (int u : graph.adjacency[v])
      if (!graph.complete[u]) throw OutOfBallError("a neighbour of an endpoint lies on the ball boundary");
  }
  const auto& nx = graph.adjacency[x];
  const auto& ny = graph.adjacency[y];
  const std::int64_t dx = static_cast<std::int64_t>(nx.size());
  const std::int64_t dy = static_cast<std::int64_t>(ny.size());
  const std::int64_t scale = std::lcm(dx, dy);

  // Supports are within distance 3 of each other; nodes: source, sink,
  // the neighbours of x, then the neighbours of y.
  const int p = static_cast<int>(nx.size()), q = static_cast<int>(ny.size());
  const int source = p + q, sink = p + q + 1;
  MinCostFlow net(p + q + 2);
  std::vector<std::vector<int>> arc(p, std::vector<int>(q));
  for (int i = 0; i < p; ++i) {
    net.add_arc(source, i, scale / dx, 0);
    const auto dist = bfs(graph, nx[i], 3);
    for (int j = 0; j < q; ++j) {
      const int d = dist[ny[j]] < 0 ? 3 : dist[ny[j]];
      arc[i][j] = net.add_arc(i, p + j, MinCostFlow::kUnbounded, d);
    }
  }
  for (int j = 0; j < q; ++j) net.add_arc(p + j, sink, scale / dy, 0);
  const auto result = net.solve(source, sink);
  if (result.flow != scale) throw std::logic_error("transport problem left mass unmoved");

  CurvatureRecord rec;
  rec.x = x;
  rec.y = y;
  rec.w1 = Rational(result.cost, scale);
  rec.kappa = Rational(1) - rec.w1;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j)
      if (const auto f = net.flow(arc[i][j]); f > 0) rec.plan.push_back({nx[i], ny[j], Rational(f, scale)});
  return rec;
}

CurvatureSpectrum curvature_spectrum(const UndirectedGraph& graph, const std::vector<std::pair<int, int>>& edges) {
  CurvatureSpectrum out;
  for (const auto& [x, y] : edges) {
    CurvatureRecord rec = ollivier_ricci_edge(graph, x, y);
    out.min = out.min ? std::min(*out.min, rec.kappa) : rec.kappa;
    out.max = out.max ? std::max(*out.max, rec.kappa) : rec.kappa;
    ++out.histogram[rec.kappa];
    out.records.push_back(std::move(rec));
  }
  return out;
}

std::string curvature_convention() {
  return "Ollivier-Ricci: undirected graph, mu_v uniform on neighbours of v, idleness 0, "
         "shortest-path cost, kappa = 1 - W1";
}

std::string to_string(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace coxkit
