#include "coxkit/projections.hpp"

#include <map>
#include <unordered_set>

#include "coxkit/errors.hpp"

namespace coxkit {

namespace {

struct MapHash {
  std::size_t operator()(const std::vector<ElementId>& v) const {
    std::size_t h = v.size();
    for (ElementId x : v) h = h * 1'000'003U ^ static_cast<std::size_t>(x);
    return h;
  }
};

}  // namespace

std::string format_generator_set(GeneratorSet J, int rank) {
  std::string out = "{";
  bool first = true;
  for (Generator s = 0; s < rank; ++s)
    if (contains(J, s)) {
      out += (first ? "s" : ",s") + std::to_string(s);
      first = false;
    }
  return out + "}";
}

ParabolicDecomposition parabolic_decompose_ordered(const GroupBall& ball, ElementId w, GeneratorSet J,
                                                   Side side, const std::vector<Generator>& priority) {
  ElementId x = w;
  for (bool stripped = true; stripped;) {
    stripped = false;
    const GeneratorSet d = side == Side::kRight ? ball.right_descents(x) : ball.left_descents(x);
    for (Generator s : priority)
      if (contains(J, s) && contains(d, s)) {
        x = side == Side::kRight ? ball.right_mul(x, s) : ball.left_mul(s, x);
        stripped = true;
        break;
      }
  }
  ParabolicDecomposition out;
  out.w = w;
  out.J = J;
  out.side = side;
  out.coset_rep = x;
  out.parabolic = side == Side::kRight ? ball.multiply(ball.inverse(x), w)
                                       : ball.multiply(w, ball.inverse(x));
  return out;
}

ParabolicDecomposition parabolic_decompose(const GroupBall& ball, ElementId w, GeneratorSet J, Side side) {
  std::vector<Generator> order(ball.rank());
  for (Generator s = 0; s < ball.rank(); ++s) order[s] = s;
  return parabolic_decompose_ordered(ball, w, J, side, order);
}

ElementId project_PJ(const GroupBall& ball, ElementId w, GeneratorSet J) {
  return parabolic_decompose(ball, w, J, Side::kRight).coset_rep;
}

ElementId project_QJ(const GroupBall& ball, ElementId w, GeneratorSet J) {
  return parabolic_decompose(ball, w, J, Side::kLeft).coset_rep;
}

SelfMapTable identity_map(const GroupBall& ball) {
  SelfMapTable f;
  f.descriptor = "id";
  for (ElementId w = 0; w < static_cast<ElementId>(ball.size()); ++w) f.images.push_back(w);
  return f;
}

SelfMapTable PJ_map(const GroupBall& ball, GeneratorSet J) {
  SelfMapTable f;
  f.descriptor = "P^" + format_generator_set(J, ball.rank());
  for (ElementId w = 0; w < static_cast<ElementId>(ball.size()); ++w) f.images.push_back(project_PJ(ball, w, J));
  return f;
}

SelfMapTable QJ_map(const GroupBall& ball, GeneratorSet J) {
  SelfMapTable f;
  f.descriptor = "Q^" + format_generator_set(J, ball.rank());
  for (ElementId w = 0; w < static_cast<ElementId>(ball.size()); ++w) f.images.push_back(project_QJ(ball, w, J));
  return f;
}

SelfMapTable compose(const SelfMapTable& f, const SelfMapTable& g) {
  if (f.images.size() != g.images.size()) throw ValidationError("maps have different domains");
  SelfMapTable h;
  h.descriptor = f.descriptor + " ∘ " + g.descriptor;
  h.images.reserve(g.images.size());
  for (ElementId x : g.images) h.images.push_back(f.images[x]);
  return h;
}

bool is_idempotent(const SelfMapTable& f) { return compose(f, f) == f; }

OrderPreservationReport is_order_preserving(const SelfMapTable& f, const Poset& poset) {
  if (f.images.size() != poset.size()) throw ValidationError("map is not total on the poset");
  OrderPreservationReport report;
  for (const auto& [u, v] : poset.cover_edges())
    if (!poset.leq(f.images[u], f.images[v])) {
      report.preserving = false;
      report.violations.emplace_back(u, v);
    }
  return report;
}

Poset phi_k_image_poset(const Poset& order, const GroupBall& ball) {
  if (!ball.is_complete_group()) throw DomainError("Im(φ_k) needs a complete finite group");
  if (order.size() != ball.size()) throw ValidationError("order is not on the ball");
  const int n = ball.rank();
  std::vector<SelfMapTable> projections;
  for (Generator s = 0; s < n; ++s) projections.push_back(PJ_map(ball, all_generators(n) & ~singleton(s)));
  std::map<std::vector<ElementId>, ElementId> fibres;  // tuple -> smallest element
  for (ElementId w = 0; w < static_cast<ElementId>(ball.size()); ++w) {
    std::vector<ElementId> tuple;
    for (const auto& p : projections) tuple.push_back(p(w));
    fibres.emplace(tuple, w);
  }
  std::vector<std::pair<ElementId, std::vector<ElementId>>> image;
  for (const auto& [tuple, w] : fibres) image.emplace_back(w, tuple);
  std::sort(image.begin(), image.end());
  const std::size_t m = image.size();
  std::vector<Bitset> rel(m, Bitset(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      bool le = true;
      for (int i = 0; i < n && le; ++i) le = order.leq(image[a].second[i], image[b].second[i]);
      if (le) rel[a].set(b);
    }
  Poset p = Poset::from_relation(std::move(rel));
  for (std::size_t a = 0; a < m; ++a) {
    p.origin[a] = image[a].first;
    p.labels.push_back(ball.label(image[a].first));
  }
  p.descriptor = "Im(φ) over " + order.descriptor;
  return p;
}

MonoidReport projection_monoid(const GroupBall& ball, const std::vector<SelfMapTable>& generators,
                               const Poset* poset, std::size_t cap) {
  if (!ball.is_complete_group()) throw DomainError("projection monoid needs a complete finite group");
  MonoidReport report;
  for (const auto& g : generators) {
    if (g.images.size() != ball.size()) throw ValidationError("generator map is not total");
    report.generators_idempotent = report.generators_idempotent && is_idempotent(g);
  }
  std::unordered_set<std::vector<ElementId>, MapHash> seen;
  std::vector<SelfMapTable> queue{identity_map(ball)};
  seen.insert(queue.front().images);
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto& g : generators) {
      SelfMapTable h = compose(g, queue[head]);
      if (seen.insert(h.images).second) {
        if (seen.size() > cap)
          throw ResourceError("projection monoid exceeds " + std::to_string(cap) + " maps");
        queue.push_back(std::move(h));
      }
    }
  report.size = queue.size();

  const int n = ball.rank();
  std::vector<SelfMapTable> single;
  for (Generator s = 0; s < n; ++s) single.push_back(PJ_map(ball, singleton(s)));
  for (Generator s = 0; s < n; ++s)
    for (Generator t = s + 1; t < n; ++t) {
      const int m = ball.matrix()(s, t);
      if (m == kInfinity) continue;
      SelfMapTable a = identity_map(ball), b = identity_map(ball);
      for (int i = 0; i < m; ++i) {
        a = compose(single[i % 2 == 0 ? s : t], a);
        b = compose(single[i % 2 == 0 ? t : s], b);
      }
      report.braid_ok = report.braid_ok && a == b;
    }
  if (poset)
    for (const auto& f : queue)
      report.order_preserving = report.order_preserving && is_order_preserving(f, *poset).preserving;
  report.elements = std::move(queue);
  return report;
}

}  // namespace coxkit
