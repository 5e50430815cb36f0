#include "coxkit/orders.hpp"

#include <algorithm>

#include "coxkit/errors.hpp"

namespace coxkit {

namespace {

void annotate(Poset& p, const GroupBall& ball, std::string descriptor) {
  p.labels.clear();
  std::vector<int> rank;
  for (ElementId w = 0; w < static_cast<ElementId>(ball.size()); ++w) {
    p.labels.push_back(ball.label(w));
    rank.push_back(ball.length(w));
  }
  p.rank = std::move(rank);
  p.descriptor = std::move(descriptor);
}

std::string x_name(const GroupBall& ball, const std::vector<ElementId>& X) {
  std::string out = "{";
  for (std::size_t i = 0; i < X.size(); ++i) out += (i ? "," : "") + ball.label(X[i]);
  return out + "}";
}

}  // namespace

OmegaGraph omega_graph(const GroupBall& ball, const std::vector<ElementId>& X) {
  OmegaGraph g;
  g.ball = &ball;
  g.X = X;
  std::sort(g.X.begin(), g.X.end());
  g.X.erase(std::unique(g.X.begin(), g.X.end()), g.X.end());
  for (ElementId a = 0; a < static_cast<ElementId>(ball.size()); ++a)
    for (ElementId t : g.X) {
      const auto b = ball.try_multiply(t, a);
      if (!b) {
        ++g.boundary_arcs;
        continue;
      }
      if (ball.length(*b) > ball.length(a)) g.arcs.push_back({a, *b, t});
    }
  return g;
}

Poset intermediate_poset(const GroupBall& ball, const std::vector<ElementId>& X) {
  const OmegaGraph g = omega_graph(ball, X);
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(g.arcs.size());
  for (const auto& arc : g.arcs) arcs.emplace_back(arc.from, arc.to);
  Poset p = Poset::from_arcs(ball.size(), arcs);
  annotate(p, ball, "<=_{L^X} on " + ball.matrix().name() + ", X = " + x_name(ball, g.X));
  return p;
}

Poset k_intermediate_poset(const ReflectionTable& table, int k) {
  Poset p = intermediate_poset(*table.ball, t_k_set(table, k));
  p.descriptor = "<=_{L^" + std::to_string(k) + "} on " + table.ball->matrix().name();
  return p;
}

Poset bruhat_poset(const GroupBall& ball) {
  Poset p = Poset::from_predicate(ball.size(), [&](int u, int v) {
    return ball.length(u) <= ball.length(v) && ball.bruhat_leq(u, v);
  });
  annotate(p, ball, "Bruhat order on " + ball.matrix().name());
  return p;
}

Poset left_weak_poset(const GroupBall& ball) {
  Poset p = Poset::from_predicate(ball.size(), [&](int u, int v) {
    if (ball.length(u) >= ball.length(v)) return false;
    const auto x = ball.try_multiply(v, ball.inverse(u));
    return x && ball.length(*x) + ball.length(u) == ball.length(v);
  });
  annotate(p, ball, "left weak order on " + ball.matrix().name());
  return p;
}

std::vector<ElementId> AbsoluteLengthTable::witness(ElementId w) const {
  std::vector<ElementId> out;
  for (ElementId x = w; x != ball->identity(); x = parent[x]) out.push_back(via[x]);
  std::reverse(out.begin(), out.end());
  return out;
}

AbsoluteLengthTable k_absolute_length_all(const ReflectionTable& table, int k) {
  const GroupBall& ball = *table.ball;
  const std::vector<ElementId> tk = t_k_set(table, k);
  AbsoluteLengthTable out;
  out.ball = &ball;
  out.k = k;
  out.complete = ball.is_complete_group();
  out.lk.assign(ball.size(), -1);
  out.parent.assign(ball.size(), kOutside);
  out.via.assign(ball.size(), kOutside);
  out.lk[ball.identity()] = 0;
  std::vector<ElementId> layer{ball.identity()};
  for (int d = 0; !layer.empty(); ++d) {
    std::vector<ElementId> next;
    for (ElementId u : layer)
      for (ElementId t : tk) {
        const auto v = ball.try_multiply(t, u);
        if (!v || ball.length(*v) <= ball.length(u) || out.lk[*v] >= 0) continue;
        out.lk[*v] = d + 1;
        out.parent[*v] = u;
        out.via[*v] = t;
        next.push_back(*v);
      }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }
  for (int v : out.lk)
    if (v < 0) throw std::logic_error("k-absolute length left an element unreached");
  return out;
}

AbsolutePoset k_absolute_poset(const AbsoluteLengthTable& table) {
  const GroupBall& ball = *table.ball;
  const std::size_t n = ball.size();
  AbsolutePoset out;
  int longest = 0;
  std::vector<Bitset> rel(n, Bitset(n));
  for (std::size_t u = 0; u < n; ++u) {
    rel[u].set(u);
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v || table.lk[v] <= table.lk[u]) continue;
      const int lu = ball.length(static_cast<ElementId>(u));
      const int lv = ball.length(static_cast<ElementId>(v));
      if (!table.complete && lu + lv > ball.radius()) {
        ++out.flagged_pairs;
        longest = std::max(longest, std::max(lu, lv));
        continue;
      }
      const ElementId x = ball.multiply(static_cast<ElementId>(v), ball.inverse(static_cast<ElementId>(u)));
      if (table.lk[v] == table.lk[u] + table.lk[x]) rel[u].set(v);
    }
  }
  out.poset = Poset::from_relation(std::move(rel));
  for (ElementId w = 0; w < static_cast<ElementId>(n); ++w) out.poset.labels.push_back(ball.label(w));
  out.poset.rank = table.lk;
  out.poset.descriptor = "k-absolute order (k = " + std::to_string(table.k) + ") on " + ball.matrix().name();
  out.suggested_radius = out.flagged_pairs ? 2 * longest : ball.radius();
  return out;
}

RefinementReport refinement_chain_check(const ReflectionTable& table, int k_max) {
  const GroupBall& ball = *table.ball;
  RefinementReport report;
  std::vector<Poset> orders;
  for (int k = 0; k <= k_max; ++k) orders.push_back(k_intermediate_poset(table, k));
  const Poset bruhat = bruhat_poset(ball);
  for (int a = 0; a <= k_max; ++a) {
    report.relation_sizes.push_back(orders[a].relation_size());
    report.equals_bruhat.push_back(orders[a].same_relation(bruhat));
    for (int b = a + 1; b <= k_max; ++b)
      if (!orders[b].contains_relation(orders[a])) {
        report.ok = false;
        report.failures.push_back("<=_{L^" + std::to_string(a) + "} not contained in <=_{L^" +
                                  std::to_string(b) + "}");
      }
    if (!bruhat.contains_relation(orders[a])) {
      report.ok = false;
      report.failures.push_back("<=_{L^" + std::to_string(a) + "} not contained in Bruhat order");
    }
  }
  return report;
}

std::vector<ElementId> coxeter_elements(const GroupBall& ball) {
  std::vector<Generator> order(ball.rank());
  for (Generator s = 0; s < ball.rank(); ++s) order[s] = s;
  std::vector<ElementId> out;
  do {
    const ElementId c = ball.locate(order);
    if (c == kOutside) throw OutOfBallError("Coxeter element lies outside the ball");
    out.push_back(c);
  } while (std::next_permutation(order.begin(), order.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace coxkit
