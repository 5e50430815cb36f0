#include "coxkit/posetlab.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "coxkit/errors.hpp"
#include "coxkit/min_cost_flow.hpp"

namespace coxkit {

namespace {

// Longest chain (number of elements) inside a node subset.
int chain_height(const Poset& poset, const std::vector<int>& nodes) {
  std::vector<bool> inside(poset.size(), false);
  for (int u : nodes) inside[u] = true;
  std::vector<int> best(poset.size(), 0);
  int out = 0;
  for (int u : poset.linear_extension()) {
    if (!inside[u]) continue;
    int b = 0;
    for (int v = poset.down_set(u).find_first(); v != static_cast<int>(Bitset::npos);
         v = poset.down_set(u).find_next(v))
      if (v != u && inside[v]) b = std::max(b, best[v]);
    best[u] = b + 1;
    out = std::max(out, best[u]);
  }
  return out;
}

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const {
    std::vector<Bitset::block_type> blocks;
    boost::to_block_range(b, std::back_inserter(blocks));
    std::size_t h = b.size();
    for (auto x : blocks) h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<std::size_t>(x);
    return h;
  }
};

std::vector<Bitset> facet_bits(const OrderComplex& complex) {
  std::map<int, int> pos;
  for (const auto& f : complex.facets)
    for (int v : f) pos.emplace(v, 0);
  int next = 0;
  for (auto& [v, p] : pos) p = next++;
  std::vector<Bitset> out;
  for (const auto& f : complex.facets) {
    Bitset b(next);
    for (int v : f) b.set(pos[v]);
    out.push_back(b);
  }
  return out;
}

// F may follow the facets in `placed`: every F ∩ G lies in a ridge
// F \ {v} that is contained in some placed facet.
bool extends(const Bitset& F, const std::vector<const Bitset*>& placed) {
  Bitset free_vertices(F.size());
  for (const Bitset* G : placed) {
    const Bitset diff = F - *G;
    if (diff.count() == 1) free_vertices |= diff;
  }
  for (const Bitset* G : placed)
    if (!((F - *G) & free_vertices).any()) return false;
  return true;
}

}  // namespace

HFamily max_h_family(const Poset& poset, int h) {
  if (h < 1) throw ValidationError("h must be at least 1");
  const int n = static_cast<int>(poset.size());
  const int s = 2 * n, t = 2 * n + 1;
  const auto inf = MinCostFlow::kUnbounded;
  MinCostFlow net(2 * n + 2);
  for (int x = 0; x < n; ++x) {
    net.add_arc(s, 2 * x, inf, h);
    net.add_arc(2 * x, 2 * x + 1, 1, -1);
    net.add_arc(2 * x, 2 * x + 1, inf, 0);
    net.add_arc(2 * x + 1, t, inf, 0);
  }
  for (const auto& [x, y] : poset.cover_edges()) net.add_arc(2 * x + 1, 2 * y, inf, 0);
  const auto result = net.solve(s, t, inf, true);

  HFamily out;
  out.h = h;
  out.size = static_cast<std::size_t>(n + result.cost);
  // Close the flow into a circulation: t -> s carries result.flow.
  net.add_arc(t, s, inf, 0);
  if (result.flow > 0) net.add_arc(s, t, result.flow, 0);
  const auto dist = net.residual_distances(s);
  for (int x = 0; x < n; ++x)
    if (dist[2 * x + 1] <= dist[2 * x] - 1) out.family.push_back(x);
  if (out.family.size() != out.size || chain_height(poset, out.family) > h)
    throw std::logic_error("Greene-Kleitman witness does not certify the flow value");
  return out;
}

SpernerReport strong_sperner_check(const Poset& poset) {
  if (!poset.rank) throw DomainError("strong Sperner check needs a rank function");
  if (!check_graded(poset, *poset.rank).graded) throw DomainError("poset is not graded by its rank function");
  std::vector<std::size_t> sizes = rank_sizes(poset);
  sizes.erase(std::remove(sizes.begin(), sizes.end(), 0U), sizes.end());
  std::sort(sizes.rbegin(), sizes.rend());
  SpernerReport report;
  std::size_t top = 0;
  for (std::size_t h = 1; h <= sizes.size(); ++h) {
    top += sizes[h - 1];
    SpernerRow row;
    row.h = static_cast<int>(h);
    row.flow_value = max_h_family(poset, row.h).size;
    row.top_rank_sum = top;
    row.pass = row.flow_value == top;
    report.strongly_sperner = report.strongly_sperner && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

OrderComplex order_complex(const Poset& interval, std::size_t cap) {
  const auto bottom = interval.bottom();
  const auto top = interval.top();
  if (!bottom || !top) throw DomainError("order complex needs a bounded poset");
  OrderComplex out;
  for (int u = 0; u < static_cast<int>(interval.size()); ++u)
    if (u != *bottom && u != *top) out.vertices.push_back(u);
  if (*bottom == *top || interval.covers(*bottom, *top)) return out;

  std::vector<int> path;
  std::function<void(int)> walk = [&](int u) {
    if (u == *top) {
      std::vector<int> facet(path.begin(), path.end());
      std::sort(facet.begin(), facet.end());
      out.facets.push_back(std::move(facet));
      if (out.facets.size() > cap)
        throw ResourceError("interval has more than " + std::to_string(cap) + " maximal chains");
      return;
    }
    for (int v : interval.upper_covers(u)) {
      if (v != *top) path.push_back(v);
      walk(v);
      if (v != *top) path.pop_back();
    }
  };
  walk(*bottom);
  return out;
}

std::string to_string(ShellVerdict v) {
  switch (v) {
    case ShellVerdict::kShellable:
      return "shellable";
    case ShellVerdict::kNotShellable:
      return "not shellable";
    case ShellVerdict::kInconclusive:
      break;
  }
  return "inconclusive";
}

bool is_shelling_order(const OrderComplex& complex, const std::vector<int>& order) {
  const auto bits = facet_bits(complex);
  std::vector<const Bitset*> placed;
  for (int i : order) {
    if (!extends(bits[i], placed)) return false;
    placed.push_back(&bits[i]);
  }
  return true;
}

ShellabilityResult shellability(const OrderComplex& complex, std::size_t facet_cap, std::size_t state_budget) {
  const std::size_t m = complex.facets.size();
  if (m > facet_cap)
    throw ResourceError("complex has " + std::to_string(m) + " facets, cap is " + std::to_string(facet_cap));
  const auto bits = facet_bits(complex);
  ShellabilityResult result;

  std::vector<const Bitset*> placed;
  Bitset used(m);
  std::unordered_set<Bitset, BitsetHash> dead;
  bool out_of_budget = false;

  std::function<bool()> search = [&]() -> bool {
    if (placed.size() == m) return true;
    if (dead.count(used)) return false;
    if (++result.states > state_budget) {
      out_of_budget = true;
      return false;
    }
    std::size_t dim = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (!used[i]) dim = std::max(dim, complex.facets[i].size());
    for (std::size_t i = 0; i < m; ++i) {
      if (used[i] || complex.facets[i].size() != dim || !extends(bits[i], placed)) continue;
      used.set(i);
      placed.push_back(&bits[i]);
      result.order.push_back(static_cast<int>(i));
      if (search()) return true;
      if (out_of_budget) return false;
      result.order.pop_back();
      placed.pop_back();
      used.reset(i);
    }
    dead.insert(used);
    return false;
  };

  if (search())
    result.verdict = ShellVerdict::kShellable;
  else {
    result.verdict = out_of_budget ? ShellVerdict::kInconclusive : ShellVerdict::kNotShellable;
    result.order.clear();
  }
  return result;
}

IsomorphismResult poset_isomorphic(const Poset& p, const Poset& q, std::size_t cap) {
  if (p.size() > cap || q.size() > cap) throw ResourceError("isomorphism test exceeds the size cap");
  IsomorphismResult result;
  if (p.size() != q.size() || p.cover_count() != q.cover_count() || p.relation_size() != q.relation_size())
    return result;
  const int n = static_cast<int>(p.size());

  auto invariants = [](const Poset& x) {
    const int size = static_cast<int>(x.size());
    std::vector<int> depth(size, 0), above(size, 0);
    const auto order = x.linear_extension();
    for (int u : order)
      for (int v : x.upper_covers(u)) depth[v] = std::max(depth[v], depth[u] + 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
      for (int v : x.upper_covers(*it)) above[*it] = std::max(above[*it], above[v] + 1);
    std::vector<std::array<std::size_t, 6>> inv(size);
    for (int u = 0; u < size; ++u)
      inv[u] = {static_cast<std::size_t>(depth[u]),        static_cast<std::size_t>(above[u]),
                x.upper_covers(u).size(),                  x.lower_covers(u).size(),
                x.up_set(u).count(),                       x.down_set(u).count()};
    return inv;
  };
  const auto ip = invariants(p);
  const auto iq = invariants(q);
  {
    auto sp = ip, sq = iq;
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    if (sp != sq) return result;
  }

  const auto order = p.linear_extension();
  std::vector<int> image(n, -1);
  std::vector<bool> taken(n, false);
  std::function<bool(int)> extend = [&](int i) -> bool {
    if (i == n) return true;
    const int u = order[i];
    for (int v = 0; v < n; ++v) {
      if (taken[v] || ip[u] != iq[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        const int a = order[j];
        ok = p.leq(a, u) == q.leq(image[a], v) && p.leq(u, a) == q.leq(v, image[a]);
      }
      if (!ok) continue;
      image[u] = v;
      taken[v] = true;
      if (extend(i + 1)) return true;
      taken[v] = false;
      image[u] = -1;
    }
    return false;
  };
  if (extend(0)) {
    result.isomorphic = true;
    result.bijection = std::move(image);
  }
  return result;
}

Poset chain_poset(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i + 1 < n; ++i) arcs.emplace_back(i, i + 1);
  Poset p = Poset::from_arcs(n, arcs);
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[i] = i;
  p.rank = rank;
  p.descriptor = "chain of " + std::to_string(n);
  return p;
}

Poset antichain_poset(int n) {
  Poset p = Poset::from_arcs(n, {});
  p.rank = std::vector<int>(n, 0);
  p.descriptor = "antichain of " + std::to_string(n);
  return p;
}

Poset boolean_lattice(int n) {
  if (n < 0 || n > 16) throw ValidationError("boolean lattice rank out of range");
  const int size = 1 << n;
  std::vector<std::pair<int, int>> arcs;
  std::vector<int> rank(size);
  for (int mask = 0; mask < size; ++mask) {
    rank[mask] = __builtin_popcount(mask);
    for (int b = 0; b < n; ++b)
      if (!(mask >> b & 1)) arcs.emplace_back(mask, mask | 1 << b);
  }
  Poset p = Poset::from_arcs(size, arcs);
  p.rank = rank;
  p.descriptor = "boolean lattice B" + std::to_string(n);
  return p;
}

NCLattice nc_lattice(int n) {
  if (n < 1 || n > 10) throw ValidationError("nc_lattice needs 1 <= n <= 10");
  NCLattice out;
  out.n = n;
  std::vector<int> rgs(n, 0);
  std::function<void(int, int)> grow = [&](int i, int top) {
    if (i == n) {
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          for (int c = b + 1; c < n; ++c)
            for (int d = c + 1; d < n; ++d)
              if (rgs[a] == rgs[c] && rgs[b] == rgs[d] && rgs[a] != rgs[b]) return;
      out.blocks.push_back(rgs);
      return;
    }
    for (int b = 0; b <= top + 1; ++b) {
      rgs[i] = b;
      grow(i + 1, std::max(top, b));
    }
  };
  rgs[0] = 0;
  grow(1, 0);

  const std::size_t m = out.blocks.size();
  out.poset = Poset::from_predicate(m, [&](int u, int v) {
    const auto& x = out.blocks[u];
    const auto& y = out.blocks[v];
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (x[i] == x[j] && y[i] != y[j]) return false;
    return true;
  });
  std::vector<int> rank;
  for (const auto& x : out.blocks) {
    const int count = *std::max_element(x.begin(), x.end()) + 1;
    rank.push_back(n - count);
    std::string label;
    for (int b = 0; b < count; ++b) {
      if (b) label += '|';
      bool first = true;
      for (int i = 0; i < n; ++i)
        if (x[i] == b) {
          label += (first ? "" : ",") + std::to_string(i + 1);
          first = false;
        }
    }
    out.poset.labels.push_back(label);
  }
  out.poset.rank = rank;
  out.poset.descriptor = "NC_" + std::to_string(n);
  return out;
}

bool is_lattice(const Poset& poset) {
  const int n = static_cast<int>(poset.size());
  auto has_least = [&](const Bitset& set, bool upward) {
    for (int w = set.find_first(); w != static_cast<int>(Bitset::npos); w = set.find_next(w))
      if (set.is_subset_of(upward ? poset.up_set(w) : poset.down_set(w))) return true;
    return false;
  };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (!has_least(poset.up_set(u) & poset.up_set(v), true)) return false;
      if (!has_least(poset.down_set(u) & poset.down_set(v), false)) return false;
    }
  return true;
}

}  // namespace coxkit
