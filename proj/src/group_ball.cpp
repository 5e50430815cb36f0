#include "coxkit/group_ball.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "coxkit/errors.hpp"

namespace coxkit {

GroupBall build_descent_ball(const CoxeterMatrix& m, int radius, const BallOptions& options);
GroupBall build_tits_ball(const CoxeterMatrix& m, int radius, const BallOptions& options);
GroupBall build_model_ball(const CoxeterMatrix& m, int radius, const BallOptions& options);

namespace {

std::string key_of(const Word& w) {
  std::string k(w.size(), '\0');
  for (std::size_t i = 0; i < w.size(); ++i) k[i] = static_cast<char>(w[i]);
  return k;
}

}  // namespace

GroupBall GroupBall::enumerate(const CoxeterMatrix& matrix, int radius,
                               const BallOptions& options) {
  if (radius < 0) throw ValidationError("ball radius must be >= 0");
  switch (options.backend) {
    case BallBackend::kDescent:
      return build_descent_ball(matrix, radius, options);
    case BallBackend::kTits:
      return build_tits_ball(matrix, radius, options);
    case BallBackend::kModel:
      return build_model_ball(matrix, radius, options);
  }
  throw std::logic_error("unknown ball backend");
}

GroupBall GroupBall::finalize(const CoxeterMatrix& matrix, int radius, Tables tables,
                              std::size_t braid_budget, bool closed_early) {
  const int r = matrix.rank();
  const std::size_t n = tables.lengths.size();
  if (n == 0 || tables.lengths[0] != 0 || !tables.normal_forms[0].empty())
    throw std::logic_error("ball tables must start with the identity");

  // Canonical ids: (length, ShortLex normal form).
  std::vector<ElementId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    if (tables.lengths[a] != tables.lengths[b]) return tables.lengths[a] < tables.lengths[b];
    return tables.normal_forms[a] < tables.normal_forms[b];
  });
  std::vector<ElementId> new_id(n);
  for (std::size_t i = 0; i < n; ++i) new_id[order[i]] = static_cast<ElementId>(i);
  auto remap = [&](const std::vector<ElementId>& table) {
    std::vector<ElementId> out(table.size());
    for (std::size_t old = 0; old < n; ++old)
      for (int s = 0; s < r; ++s) {
        const ElementId v = table[old * r + s];
        out[static_cast<std::size_t>(new_id[old]) * r + s] = v == kOutside ? kOutside : new_id[v];
      }
    return out;
  };

  GroupBall ball;
  ball.matrix_ = matrix;
  ball.radius_ = radius;
  ball.braid_budget_ = braid_budget;
  ball.lengths_.resize(n);
  ball.normal_forms_.resize(n);
  for (std::size_t old = 0; old < n; ++old) {
    ball.lengths_[new_id[old]] = tables.lengths[old];
    ball.normal_forms_[new_id[old]] = std::move(tables.normal_forms[old]);
  }
  ball.left_ = remap(tables.left);
  std::vector<ElementId> given_right;
  if (!tables.right.empty()) given_right = remap(tables.right);

  ball.left_descents_.assign(n, 0);
  for (std::size_t w = 0; w < n; ++w)
    for (int s = 0; s < r; ++s) {
      const ElementId v = ball.left_[w * r + s];
      if (v != kOutside && ball.lengths_[v] < ball.lengths_[w])
        ball.left_descents_[w] |= singleton(s);
    }

  // The reversed normal form is a reduced word of the inverse; every step
  // of the walk goes up, so it never leaves the ball.
  ball.inverse_.assign(n, kOutside);
  for (std::size_t w = 0; w < n; ++w) {
    ElementId x = 0;
    for (Generator a : ball.normal_forms_[w]) x = ball.left_[static_cast<std::size_t>(x) * r + a];
    ball.inverse_[w] = x;
  }
  ball.right_.assign(n * r, kOutside);
  ball.right_descents_.assign(n, 0);
  for (std::size_t w = 0; w < n; ++w)
    for (int s = 0; s < r; ++s) {
      const ElementId v = ball.left_[static_cast<std::size_t>(ball.inverse_[w]) * r + s];
      ball.right_[w * r + s] = v == kOutside ? kOutside : ball.inverse_[v];
    }
  if (!given_right.empty() && given_right != ball.right_)
    throw std::logic_error("right Cayley table disagrees with the inverse-derived table");
  for (std::size_t w = 0; w < n; ++w) ball.right_descents_[w] = ball.left_descents_[ball.inverse_[w]];

  const int top = ball.lengths_.back();
  ball.level_ids_.resize(n);
  std::iota(ball.level_ids_.begin(), ball.level_ids_.end(), 0);
  ball.level_offsets_.assign(static_cast<std::size_t>(top) + 2, 0);
  for (int len : ball.lengths_) ++ball.level_offsets_[static_cast<std::size_t>(len) + 1];
  std::partial_sum(ball.level_offsets_.begin(), ball.level_offsets_.end(),
                   ball.level_offsets_.begin());

  const GeneratorSet full = all_generators(r);
  bool top_saturated = top == radius;
  for (ElementId w : ball.level(radius))
    if (ball.left_descents_[w] != full) top_saturated = false;
  ball.complete_ = closed_early || top_saturated;

  ball.by_normal_form_.reserve(n);
  for (std::size_t w = 0; w < n; ++w)
    ball.by_normal_form_.emplace(key_of(ball.normal_forms_[w]), static_cast<ElementId>(w));
  return ball;
}

std::span<const ElementId> GroupBall::level(int len) const {
  if (len < 0 || static_cast<std::size_t>(len) + 1 >= level_offsets_.size()) return {};
  const std::size_t b = level_offsets_[len];
  const std::size_t e = level_offsets_[static_cast<std::size_t>(len) + 1];
  return std::span<const ElementId>(level_ids_).subspan(b, e - b);
}

std::vector<std::size_t> GroupBall::rank_sizes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < level_offsets_.size(); ++i)
    out.push_back(level_offsets_[i + 1] - level_offsets_[i]);
  return out;
}

std::optional<ElementId> GroupBall::find_normal_form(const Word& nf) const {
  auto it = by_normal_form_.find(key_of(nf));
  if (it == by_normal_form_.end()) return std::nullopt;
  return it->second;
}

std::optional<ElementId> GroupBall::walk_right(ElementId u, const Word& letters) const {
  ElementId x = u;
  for (Generator a : letters) {
    x = right_mul(x, a);
    if (x == kOutside) return std::nullopt;
  }
  return x;
}

std::optional<ElementId> GroupBall::walk_left(const Word& letters, ElementId v) const {
  ElementId x = v;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    x = left_mul(*it, x);
    if (x == kOutside) return std::nullopt;
  }
  return x;
}

std::optional<ElementId> GroupBall::try_multiply(ElementId u, ElementId v) const {
  if (auto x = walk_right(u, normal_forms_[v])) return x;
  if (complete_) return std::nullopt;
  if (auto x = walk_left(normal_forms_[u], v)) return x;
  // Both walks passed through elements beyond the radius; settle the
  // product exactly with the braid-closure solver.
  Word word = normal_forms_[u];
  word.insert(word.end(), normal_forms_[v].begin(), normal_forms_[v].end());
  const Word nf = TitsSolver(matrix_, braid_budget_).normal_form(word);
  if (static_cast<int>(nf.size()) > radius_) return std::nullopt;
  return find_normal_form(nf);
}

ElementId GroupBall::multiply(ElementId u, ElementId v) const {
  if (auto x = try_multiply(u, v)) return *x;
  throw OutOfBallError("product " + label(u) + " * " + label(v) +
                       " has length greater than the radius " + std::to_string(radius_));
}

ElementId GroupBall::locate(const Word& word) const {
  for (Generator a : word)
    if (a < 0 || a >= rank())
      throw ValidationError("letter " + std::to_string(a) + " is outside rank " +
                            std::to_string(rank()));
  if (auto x = walk_left(word, identity())) return *x;
  const Word nf = TitsSolver(matrix_, braid_budget_).normal_form(word);
  if (static_cast<int>(nf.size()) <= radius_)
    if (auto x = find_normal_form(nf)) return *x;
  throw OutOfBallError("word " + format_word(word) + " has length " +
                       std::to_string(nf.size()) + " > radius " + std::to_string(radius_));
}

bool GroupBall::bruhat_leq(ElementId u, ElementId v) const {
  if (lengths_[u] > lengths_[v]) return false;
  // Greedy subword test: scanning a reduced word a1...an of v, u <= v iff
  // peeling every left descent a_i of the running element reaches e.
  ElementId x = u;
  for (Generator a : normal_forms_[v]) {
    if (contains(left_descents_[x], a)) x = left_mul(a, x);
  }
  return x == identity();
}

GroupBall full_group(const CoxeterMatrix& matrix, const BallOptions& options) {
  if (auto top = matrix.longest_element_length()) {
    GroupBall ball = GroupBall::enumerate(matrix, *top, options);
    if (!ball.is_complete_group())
      throw std::logic_error("named type " + matrix.name() + " did not close at length " +
                             std::to_string(*top));
    return ball;
  }
  if (!matrix.is_finite())
    throw DomainError(matrix.name() + " is not a finite Coxeter group");
  // Unnamed finite input: grow until the level construction closes.
  constexpr int kSearchRadius = 10'000;
  GroupBall ball = GroupBall::enumerate(matrix, kSearchRadius, options);
  if (!ball.is_complete_group())
    throw std::logic_error(matrix.name() + " did not close within radius " +
                           std::to_string(kSearchRadius));
  return ball;
}

BallComparison compare_balls(const GroupBall& a, const GroupBall& b) {
  auto fail = [](std::string why) { return BallComparison{false, std::move(why)}; };
  if (!(a.matrix() == b.matrix())) return fail("matrices differ");
  if (a.radius() != b.radius()) return fail("radii differ");
  if (a.size() != b.size())
    return fail("sizes differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  if (a.is_complete_group() != b.is_complete_group()) return fail("completeness flags differ");
  for (ElementId w = 0; w < static_cast<ElementId>(a.size()); ++w) {
    const std::string at = " at id " + std::to_string(w) + " (" + a.label(w) + ")";
    if (a.normal_form(w) != b.normal_form(w)) return fail("normal forms differ" + at);
    if (a.length(w) != b.length(w)) return fail("lengths differ" + at);
    if (a.left_descents(w) != b.left_descents(w)) return fail("left descents differ" + at);
    if (a.right_descents(w) != b.right_descents(w)) return fail("right descents differ" + at);
    if (a.inverse(w) != b.inverse(w)) return fail("inverses differ" + at);
    for (Generator s = 0; s < a.rank(); ++s) {
      if (a.left_mul(s, w) != b.left_mul(s, w)) return fail("left Cayley edges differ" + at);
      if (a.right_mul(w, s) != b.right_mul(w, s)) return fail("right Cayley edges differ" + at);
    }
  }
  return {true, {}};
}

// Level-by-level construction. An element x of length n+1 is keyed by its
// ShortLex first letter f = min D_L(x) and the element f*x of length n. For
// a candidate x = t*y, the left descents are t together with every u whose
// dihedral longest element w0(t,u) is a left prefix of x, i.e. y starts with
// the alternating word u t u ... of length m(t,u) - 1.
GroupBall build_descent_ball(const CoxeterMatrix& m, int radius, const BallOptions& options) {
  const int r = m.rank();
  std::vector<int> lengths{0};
  std::vector<GeneratorSet> descents{0};
  std::vector<ElementId> left(static_cast<std::size_t>(r), kOutside);
  std::vector<Generator> first{-1};
  std::vector<ElementId> tail{kOutside};
  std::vector<ElementId> current{0};
  bool closed = false;

  auto at = [&](ElementId w, Generator s) -> ElementId& {
    return left[static_cast<std::size_t>(w) * r + s];
  };

  for (int n = 0; n < radius; ++n) {
    std::unordered_map<std::uint64_t, ElementId> created;
    std::vector<ElementId> next;
    for (ElementId y : current) {
      for (Generator t = 0; t < r; ++t) {
        if (contains(descents[y], t)) continue;
        GeneratorSet desc = singleton(t);
        for (Generator u = 0; u < r; ++u) {
          if (u == t || m.is_infinite(t, u)) continue;
          const int need = m(t, u) - 1;
          ElementId cur = y;
          int depth = 0;
          Generator a = u;
          Generator b = t;
          while (depth < need && contains(descents[cur], a)) {
            cur = at(cur, a);
            ++depth;
            std::swap(a, b);
          }
          if (depth >= need) desc |= singleton(u);
        }
        const Generator lead = std::countr_zero(desc);
        ElementId tail_id = y;
        if (lead != t) {
          // y = (lead t lead ...)_{k} z with k = m(t,lead) - 1, and
          // lead*x = (t lead t ...)_{k} z.
          const int k = m(t, lead) - 1;
          ElementId z = y;
          Generator a = lead;
          Generator b = t;
          for (int i = 0; i < k; ++i) {
            z = at(z, a);
            std::swap(a, b);
          }
          for (int i = k; i >= 1; --i) z = at(z, i % 2 == 1 ? t : lead);
          tail_id = z;
        }
        const std::uint64_t key =
            (static_cast<std::uint64_t>(lead) << 32) | static_cast<std::uint32_t>(tail_id);
        auto [it, inserted] = created.try_emplace(key, static_cast<ElementId>(lengths.size()));
        if (inserted) {
          if (lengths.size() >= options.element_cap)
            throw ResourceError("ball enumeration exceeded the element cap of " +
                                std::to_string(options.element_cap) + " at length " +
                                std::to_string(n + 1) + " (partial size " +
                                std::to_string(lengths.size()) + ")");
          lengths.push_back(n + 1);
          descents.push_back(desc);
          first.push_back(lead);
          tail.push_back(tail_id);
          left.resize(left.size() + static_cast<std::size_t>(r), kOutside);
          next.push_back(it->second);
        }
        const ElementId x = it->second;
        at(y, t) = x;
        at(x, t) = y;
      }
    }
    if (next.empty()) {
      closed = true;
      break;
    }
    current = std::move(next);
  }

  GroupBall::Tables tables;
  tables.lengths = std::move(lengths);
  tables.normal_forms.resize(tables.lengths.size());
  for (std::size_t w = 1; w < tables.lengths.size(); ++w) {
    Word nf{first[w]};
    const Word& rest = tables.normal_forms[tail[w]];
    nf.insert(nf.end(), rest.begin(), rest.end());
    tables.normal_forms[w] = std::move(nf);
  }
  tables.left = std::move(left);
  return GroupBall::finalize(m, radius, std::move(tables), options.braid_budget, closed);
}

}  // namespace coxkit
