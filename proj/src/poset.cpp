#include "coxkit/poset.hpp"

#include <algorithm>
#include <numeric>

#include "coxkit/errors.hpp"

namespace coxkit {

Poset Poset::from_arcs(std::size_t n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::vector<int>> out(n);
  std::vector<int> indegree(n, 0);
  for (const auto& [u, v] : arcs) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      throw ValidationError("arc endpoint out of range");
    if (u == v) continue;
    out[u].push_back(v);
    ++indegree[v];
  }
  std::vector<int> order;
  order.reserve(n);
  for (std::size_t u = 0; u < n; ++u)
    if (indegree[u] == 0) order.push_back(static_cast<int>(u));
  for (std::size_t head = 0; head < order.size(); ++head)
    for (int v : out[order[head]])
      if (--indegree[v] == 0) order.push_back(v);
  if (order.size() != n) throw ValidationError("arcs contain a directed cycle");

  Poset p;
  p.above_.assign(n, Bitset(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int u = *it;
    p.above_[u].set(u);
    for (int v : out[u]) p.above_[u] |= p.above_[v];
  }
  p.finish();
  return p;
}

Poset Poset::from_relation(std::vector<Bitset> leq) {
  const std::size_t n = leq.size();
  for (std::size_t u = 0; u < n; ++u) {
    if (leq[u].size() != n) throw ValidationError("relation matrix is not square");
    leq[u].set(u);
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && leq[u][v] && leq[v][u])
        throw ValidationError("relation is not antisymmetric at (" + std::to_string(u) + ", " +
                              std::to_string(v) + ")");
  // Warshall closure on bitset rows.
  std::vector<Bitset> closed = leq;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t u = 0; u < n; ++u)
      if (closed[u][k]) closed[u] |= closed[k];
  Poset p;
  p.was_transitive = closed == leq;
  p.above_ = std::move(closed);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (p.above_[u][v] && p.above_[v][u])
        throw ValidationError("transitive closure of the relation has a cycle");
  p.finish();
  return p;
}

Poset Poset::from_predicate(std::size_t n, const std::function<bool(int, int)>& leq) {
  std::vector<Bitset> rel(n, Bitset(n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u == v || leq(static_cast<int>(u), static_cast<int>(v))) rel[u].set(v);
  return from_relation(std::move(rel));
}

void Poset::finish() {
  const std::size_t n = above_.size();
  below_.assign(n, Bitset(n));
  for (std::size_t u = 0; u < n; ++u)
    for (auto v = above_[u].find_first(); v != Bitset::npos; v = above_[u].find_next(v))
      below_[v].set(u);
  up_covers_.assign(n, {});
  down_covers_.assign(n, {});
  for (std::size_t u = 0; u < n; ++u) {
    Bitset strict = above_[u];
    strict.reset(u);
    Bitset implied(n);
    for (auto w = strict.find_first(); w != Bitset::npos; w = strict.find_next(w)) {
      Bitset beyond = above_[w];
      beyond.reset(w);
      implied |= beyond;
    }
    strict -= implied;
    for (auto v = strict.find_first(); v != Bitset::npos; v = strict.find_next(v)) {
      up_covers_[u].push_back(static_cast<int>(v));
      down_covers_[v].push_back(static_cast<int>(u));
    }
  }
  origin.resize(n);
  std::iota(origin.begin(), origin.end(), 0);
}

bool Poset::covers(int u, int v) const {
  const auto& c = up_covers_[u];
  return std::binary_search(c.begin(), c.end(), v);
}

std::vector<std::pair<int, int>> Poset::cover_edges() const {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t u = 0; u < size(); ++u)
    for (int v : up_covers_[u]) edges.emplace_back(static_cast<int>(u), v);
  return edges;
}

std::size_t Poset::cover_count() const {
  std::size_t c = 0;
  for (const auto& row : up_covers_) c += row.size();
  return c;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (std::size_t u = 0; u < size(); ++u)
    if (down_covers_[u].empty()) out.push_back(static_cast<int>(u));
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (std::size_t u = 0; u < size(); ++u)
    if (up_covers_[u].empty()) out.push_back(static_cast<int>(u));
  return out;
}

std::optional<int> Poset::bottom() const {
  const auto m = minimal_elements();
  if (m.size() == 1) return m.front();
  return std::nullopt;
}

std::optional<int> Poset::top() const {
  const auto m = maximal_elements();
  if (m.size() == 1) return m.front();
  return std::nullopt;
}

std::size_t Poset::relation_size() const {
  std::size_t c = 0;
  for (const auto& row : above_) c += row.count() - 1;
  return c;
}

std::vector<int> Poset::linear_extension() const {
  std::vector<int> order(size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return below_[a].count() < below_[b].count(); });
  return order;
}

int Poset::height() const {
  if (size() == 0) return 0;
  std::vector<int> h(size(), 1);
  int best = 1;
  for (int u : linear_extension()) {
    for (int w : down_covers_[u]) h[u] = std::max(h[u], h[w] + 1);
    best = std::max(best, h[u]);
  }
  return best;
}

Poset Poset::induced(const std::vector<int>& nodes) const {
  const std::size_t n = nodes.size();
  std::vector<Bitset> rel(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (above_[nodes[i]][nodes[j]]) rel[i].set(j);
  Poset p = from_relation(std::move(rel));
  p.origin = nodes;
  p.descriptor = descriptor;
  if (!labels.empty()) {
    p.labels.reserve(n);
    for (int u : nodes) p.labels.push_back(label(u));
  }
  if (rank) {
    std::vector<int> r;
    r.reserve(n);
    for (int u : nodes) r.push_back((*rank)[u]);
    p.rank = std::move(r);
  }
  return p;
}

Poset Poset::interval(int u, int v) const {
  if (!leq(u, v))
    throw DomainError("interval endpoints are not comparable: " + label(u) + " and " + label(v));
  Bitset members = above_[u] & below_[v];
  std::vector<int> nodes;
  for (auto x = members.find_first(); x != Bitset::npos; x = members.find_next(x))
    nodes.push_back(static_cast<int>(x));
  Poset p = induced(nodes);
  p.descriptor = descriptor + " [" + label(u) + ", " + label(v) + "]";
  return p;
}

std::vector<std::vector<int>> Poset::components() const {
  std::vector<int> parent(size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [u, v] : cover_edges()) parent[find(u)] = find(v);
  std::vector<std::vector<int>> groups;
  std::vector<int> slot(size(), -1);
  for (std::size_t u = 0; u < size(); ++u) {
    const int r = find(static_cast<int>(u));
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[slot[r]].push_back(static_cast<int>(u));
  }
  return groups;
}

bool Poset::contains_relation(const Poset& other) const {
  if (other.size() != size()) return false;
  for (std::size_t u = 0; u < size(); ++u)
    if (!other.above_[u].is_subset_of(above_[u])) return false;
  return true;
}

bool Poset::same_relation(const Poset& other) const {
  return other.size() == size() && other.above_ == above_;
}

GradedReport check_graded(const Poset& poset, const std::vector<int>& rank) {
  if (rank.size() != poset.size()) throw ValidationError("rank function has the wrong size");
  GradedReport report;
  for (const auto& [u, v] : poset.cover_edges())
    if (rank[v] != rank[u] + 1) {
      report.graded = false;
      report.violations.emplace_back(u, v);
    }
  return report;
}

IntervalGradedReport is_graded(const Poset& poset) {
  IntervalGradedReport report;
  const std::vector<int> order = poset.linear_extension();
  const std::size_t n = poset.size();
  std::vector<int> lo(n), hi(n);
  for (std::size_t s = 0; s < n; ++s) {
    const Bitset& up = poset.up_set(static_cast<int>(s));
    for (int v : order) {
      if (!up[v]) continue;
      if (v == static_cast<int>(s)) {
        lo[v] = hi[v] = 0;
        continue;
      }
      int a = INT32_MAX, b = -1;
      for (int w : poset.lower_covers(v))
        if (up[w]) {
          a = std::min(a, lo[w] + 1);
          b = std::max(b, hi[w] + 1);
        }
      lo[v] = a;
      hi[v] = b;
      if (a != b && report.graded) {
        report.graded = false;
        report.witness = {static_cast<int>(s), v};
        report.shortest = a;
        report.longest = b;
      }
    }
    if (!report.graded) break;
  }
  return report;
}

std::vector<std::size_t> rank_sizes(const Poset& poset) {
  if (!poset.rank) throw DomainError("poset has no rank function attached");
  std::vector<std::size_t> sizes;
  for (int r : *poset.rank) {
    if (r < 0) throw DomainError("negative rank value");
    if (static_cast<std::size_t>(r) >= sizes.size()) sizes.resize(r + 1, 0);
    ++sizes[r];
  }
  return sizes;
}

}  // namespace coxkit
