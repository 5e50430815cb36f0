#include "coxkit/reflections.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <cmath>
#include <numbers>
#include <deque>
#include <functional>
#include <unordered_map>

#include "coxkit/errors.hpp"

namespace coxkit {

namespace {

std::optional<ElementId> conjugate(const GroupBall& ball, ElementId x, ElementId by) {
  const auto yx = ball.try_multiply(by, x);
  if (!yx) return std::nullopt;
  return ball.try_multiply(*yx, by);
}

struct Closure {
  std::vector<ElementId> members;
  bool closed = true;
};

// Members of <a, b> inside the ball reachable from e by left
// multiplications that stay inside the ball.
Closure generate(const GroupBall& ball, ElementId a, ElementId b,
                 std::unordered_map<ElementId, int>* depth = nullptr) {
  Closure out;
  std::unordered_map<ElementId, int> seen{{ball.identity(), 0}};
  std::deque<ElementId> queue{ball.identity()};
  while (!queue.empty()) {
    const ElementId x = queue.front();
    queue.pop_front();
    for (ElementId g : {a, b}) {
      const auto y = ball.try_multiply(g, x);
      if (!y) {
        out.closed = false;
        continue;
      }
      if (seen.emplace(*y, seen[x] + 1).second) queue.push_back(*y);
    }
  }
  for (const auto& [id, d] : seen) out.members.push_back(id);
  std::sort(out.members.begin(), out.members.end());
  if (depth) *depth = std::move(seen);
  return out;
}

// Lengths along e, a, ba, aba, ... strictly increase until the sequence
// leaves the ball.
bool alternating_increases(const GroupBall& ball, ElementId a, ElementId b) {
  ElementId x = ball.identity();
  for (int step = 0;; ++step) {
    const auto y = ball.try_multiply(step % 2 == 0 ? a : b, x);
    if (!y) return true;
    if (ball.length(*y) <= ball.length(x)) return false;
    x = *y;
  }
}

}  // namespace

bool ReflectionTable::is_reflection(ElementId w) const {
  return std::binary_search(reflections.begin(), reflections.end(), w);
}

std::size_t ReflectionTable::index_of(ElementId t) const {
  const auto it = std::lower_bound(reflections.begin(), reflections.end(), t);
  if (it == reflections.end() || *it != t)
    throw DomainError("element " + ball->label(t) + " is not a reflection");
  return static_cast<std::size_t>(it - reflections.begin());
}

int ReflectionTable::max_length() const {
  return reflections.empty() ? 0 : ball->length(reflections.back());
}

int ReflectionTable::max_certified_k() const {
  if (ball->is_complete_group()) return INT_MAX;
  return ball->radius() >= 1 ? (ball->radius() - 1) / 2 : -1;
}

ReflectionTable reflections_in_ball(const GroupBall& ball) {
  // found[t] holds 1 + (w, s) packed so that t = w s w^-1.
  std::vector<std::int64_t> found(ball.size(), 0);
  const int n = ball.rank();
  for (ElementId w = 0; w < static_cast<ElementId>(ball.size()); ++w)
    for (Generator s = 0; s < n; ++s) {
      const ElementId ws = ball.right_mul(w, s);
      if (ws == kOutside) continue;
      if (const auto t = ball.try_multiply(ws, ball.inverse(w)); t && !found[*t])
        found[*t] = 1 + static_cast<std::int64_t>(w) * n + s;
    }
  std::vector<std::vector<double>> form(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int m = ball.matrix()(i, j);
      form[i][j] = m == kInfinity ? -1.0 : -std::cos(std::numbers::pi / m);
    }
  ReflectionTable table;
  table.ball = &ball;
  for (ElementId t = 0; t < static_cast<ElementId>(ball.size()); ++t) {
    if (!found[t]) continue;
    table.reflections.push_back(t);
    const ElementId w = static_cast<ElementId>((found[t] - 1) / n);
    const Generator s = static_cast<Generator>((found[t] - 1) % n);
    // alpha_t = w(alpha_s): apply the letters of w right to left.
    std::vector<double> v(n, 0.0);
    v[s] = 1.0;
    const Word& nf = ball.normal_form(w);
    for (auto it = nf.rbegin(); it != nf.rend(); ++it) {
      double pairing = 0.0;
      for (int j = 0; j < n; ++j) pairing += form[*it][j] * v[j];
      v[*it] -= 2.0 * pairing;
    }
    double sum = 0.0;
    for (double x : v) sum += x;
    if (sum < 0)
      for (double& x : v) x = -x;
    table.roots.push_back(std::move(v));
  }
  return table;
}

std::vector<ElementId> t_k_set(const ReflectionTable& table, int k) {
  if (k < 0) throw ValidationError("k must be non-negative");
  if (k > table.max_certified_k())
    throw OutOfBallError("T_" + std::to_string(k) + " needs radius >= " +
                         std::to_string(2 * k + 1) + ", ball radius is " +
                         std::to_string(table.ball->radius()));
  std::vector<ElementId> out;
  for (ElementId t : table.reflections)
    if (table.ball->length(t) <= 2 * k + 1) out.push_back(t);
  return out;
}

int ReflectionSubgroup::internal_length_of(ElementId w) const {
  const auto it = std::lower_bound(member_ids.begin(), member_ids.end(), w);
  if (it == member_ids.end() || *it != w) throw DomainError("element is not in the subgroup");
  return internal_length[it - member_ids.begin()];
}

bool ReflectionSubgroup::contains(ElementId w) const {
  return std::binary_search(member_ids.begin(), member_ids.end(), w);
}

ReflectionSubgroup dihedral_subgroup(const GroupBall& ball, ElementId t, ElementId t2) {
  if (t == t2) throw ValidationError("dihedral subgroup needs two distinct reflections");
  for (ElementId r : {t, t2})
    if (ball.multiply(r, r) != ball.identity() || ball.length(r) % 2 == 0)
      throw ValidationError(ball.label(r) + " is not a reflection");

  // Shorten the pair by mutual conjugation.
  ElementId a = t, b = t2;
  for (bool changed = true; changed;) {
    changed = false;
    if (const auto c = conjugate(ball, a, b); c && ball.length(*c) < ball.length(a)) {
      a = *c;
      changed = true;
    }
    if (const auto c = conjugate(ball, b, a); c && ball.length(*c) < ball.length(b)) {
      b = *c;
      changed = true;
    }
  }

  const Closure closure = generate(ball, a, b);
  int min_even = INT_MAX;
  for (ElementId x : closure.members)
    if (x != ball.identity() && ball.length(x) % 2 == 0)
      min_even = std::min(min_even, ball.length(x));
  std::vector<ElementId> canonical;
  for (ElementId x : closure.members)
    if (ball.length(x) % 2 == 1 && ball.length(x) < min_even) canonical.push_back(x);

  const std::string pair = "<" + ball.label(t) + ", " + ball.label(t2) + ">";
  if (!closure.closed) {
    const bool certified = min_even != INT_MAX && canonical == std::vector<ElementId>{std::min(a, b), std::max(a, b)} &&
                           alternating_increases(ball, a, b) && alternating_increases(ball, b, a);
    if (!certified)
      throw OutOfBallError("canonical generators of " + pair + " are not certified within radius " +
                           std::to_string(ball.radius()));
  }
  if (canonical.size() != 2)
    throw std::logic_error("dihedral subgroup " + pair + " has " +
                           std::to_string(canonical.size()) + " canonical generators");

  std::unordered_map<ElementId, int> depth;
  const Closure final_closure = generate(ball, canonical[0], canonical[1], &depth);
  ReflectionSubgroup out;
  out.member_ids = final_closure.members;
  out.canonical_generators = canonical;
  out.closed = final_closure.closed;
  for (ElementId x : out.member_ids) out.internal_length.push_back(depth.at(x));
  if (!out.contains(t) || !out.contains(t2))
    throw std::logic_error("dihedral subgroup " + pair + " lost a generator");
  return out;
}

std::vector<ElementId> dihedral_reflections(const ReflectionTable& table, ElementId t,
                                            ElementId t2) {
  using Vec = std::vector<double>;
  auto dot = [](const Vec& a, const Vec& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] * b[i];
    return d;
  };
  // Orthonormal basis of span(alpha_t, alpha_t2) in coefficient space.
  std::vector<Vec> basis;
  for (ElementId r : {t, t2}) {
    Vec v = table.roots[table.index_of(r)];
    for (const Vec& b : basis) {
      const double c = dot(v, b);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * b[i];
    }
    const double norm = std::sqrt(dot(v, v));
    if (norm < 1e-9) throw ValidationError("reflections must be distinct");
    for (double& x : v) x /= norm;
    basis.push_back(std::move(v));
  }
  std::vector<ElementId> out;
  for (std::size_t k = 0; k < table.reflections.size(); ++k) {
    Vec v = table.roots[k];
    const double scale = std::sqrt(dot(v, v));
    for (const Vec& b : basis) {
      const double c = dot(v, b);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * b[i];
    }
    if (std::sqrt(dot(v, v)) <= 1e-9 * scale) out.push_back(table.reflections[k]);
  }
  return out;
}

bool t_order_generating(const ReflectionTable& table, ElementId t, ElementId t2) {
  if (t == t2) return true;
  const GroupBall& ball = *table.ball;
  const int top = ball.length(t2);
  if (ball.length(t) >= top) return false;
  if (!ball.is_complete_group() && ball.radius() < 2 * top)
    throw OutOfBallError("comparing " + ball.label(t) + " with " + ball.label(t2) +
                         " needs radius >= " + std::to_string(2 * top));
  const std::vector<ElementId> plane = dihedral_reflections(table, t, t2);
  std::vector<char> seen(ball.size(), 0);
  std::deque<ElementId> queue{t};
  seen[t] = 1;
  while (!queue.empty()) {
    const ElementId u = queue.front();
    queue.pop_front();
    for (ElementId r : plane) {
      const auto v = ball.try_multiply(r, u);
      if (!v || ball.length(*v) <= ball.length(u) || ball.length(*v) > top || seen[*v]) continue;
      if (*v == t2) return true;
      seen[*v] = 1;
      queue.push_back(*v);
    }
  }
  return false;
}

Poset t_order_poset(const ReflectionTable& table, std::optional<int> max_length) {
  const GroupBall& ball = *table.ball;
  std::vector<ElementId> nodes;
  for (ElementId t : table.reflections)
    if (!max_length || ball.length(t) <= *max_length) nodes.push_back(t);
  const std::size_t n = nodes.size();
  std::vector<Bitset> rel(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i == j || t_order_generating(table, nodes[i], nodes[j])) rel[i].set(j);
  Poset p = Poset::from_relation(std::move(rel));
  p.origin = nodes;
  for (ElementId t : nodes) p.labels.push_back(ball.label(t));
  p.descriptor = "(T, ⊑) of " + ball.matrix().name();
  return p;
}

bool is_order_ideal(const Poset& poset, const std::vector<int>& members) {
  Bitset in(poset.size());
  for (int u : members) {
    if (u < 0 || static_cast<std::size_t>(u) >= poset.size())
      throw ValidationError("ideal member out of range");
    in.set(u);
  }
  for (int u : members)
    if (!poset.down_set(u).is_subset_of(in)) return false;
  return true;
}

std::vector<std::vector<int>> order_ideals(const Poset& poset, std::size_t cap) {
  const std::vector<int> order = poset.linear_extension();
  std::vector<std::vector<int>> out;
  Bitset in(poset.size());
  std::vector<int> current;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == order.size()) {
      if (out.size() >= cap)
        throw ResourceError("more than " + std::to_string(cap) + " order ideals");
      std::vector<int> ideal = current;
      std::sort(ideal.begin(), ideal.end());
      out.push_back(std::move(ideal));
      return;
    }
    const int u = order[pos];
    rec(pos + 1);
    bool allowed = true;
    for (int w : poset.lower_covers(u)) allowed = allowed && in[w];
    if (!allowed) return;
    in.set(u);
    current.push_back(u);
    rec(pos + 1);
    current.pop_back();
    in.reset(u);
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

}  // namespace coxkit
