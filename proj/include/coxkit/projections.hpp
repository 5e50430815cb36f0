#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coxkit/group_ball.hpp"
#include "coxkit/poset.hpp"

namespace coxkit {

enum class Side { kRight, kLeft };

/// Right: w = w^J * w_J. Left: w = w'_J * ^J w. `coset_rep` is w^J resp.
/// ^J w, `parabolic` is w_J resp. w'_J.
struct ParabolicDecomposition {
  ElementId w = 0;
  GeneratorSet J = 0;
  ElementId coset_rep = 0;
  ElementId parabolic = 0;
  Side side = Side::kRight;
};

/// Strips descents in J on the chosen side, smallest generator first.
ParabolicDecomposition parabolic_decompose(const GroupBall& ball, ElementId w, GeneratorSet J,
                                           Side side = Side::kRight);

/// Same factorisation with a caller-chosen stripping order (used to check
/// that the order does not matter).
ParabolicDecomposition parabolic_decompose_ordered(const GroupBall& ball, ElementId w, GeneratorSet J,
                                                   Side side, const std::vector<Generator>& priority);

ElementId project_PJ(const GroupBall& ball, ElementId w, GeneratorSet J);
ElementId project_QJ(const GroupBall& ball, ElementId w, GeneratorSet J);

/// A map from ball elements to ball elements.
struct SelfMapTable {
  std::vector<ElementId> images;
  std::string descriptor;

  ElementId operator()(ElementId w) const { return images[w]; }
  bool operator==(const SelfMapTable& o) const { return images == o.images; }
};

SelfMapTable identity_map(const GroupBall& ball);
SelfMapTable PJ_map(const GroupBall& ball, GeneratorSet J);
SelfMapTable QJ_map(const GroupBall& ball, GeneratorSet J);
/// (f ∘ g)(w) = f(g(w)).
SelfMapTable compose(const SelfMapTable& f, const SelfMapTable& g);
bool is_idempotent(const SelfMapTable& f);

struct OrderPreservationReport {
  bool preserving = true;
  /// Covers u ⋖ v with f(u) not <= f(v).
  std::vector<std::pair<int, int>> violations;
};

/// Checks f(u) <= f(v) on every cover of the poset, whose node ids must be
/// element ids of the map's ball.
OrderPreservationReport is_order_preserving(const SelfMapTable& f, const Poset& poset);

/// Im(φ_k) with the componentwise order from (W, <=_{L^k}); node labels
/// are the smallest element of each fibre. Needs a complete group.
Poset phi_k_image_poset(const Poset& order, const GroupBall& ball);

struct MonoidReport {
  std::size_t size = 0;
  bool generators_idempotent = true;
  /// Alternating compositions of P^{s}, P^{t} of length m(s,t) agree, for
  /// single-generator projections among the generators.
  bool braid_ok = true;
  /// Every element order-preserving on the supplied poset (if any).
  bool order_preserving = true;
  std::vector<SelfMapTable> elements;
};

/// Closure of the generator maps (plus the identity) under composition.
/// Throws ResourceError once more than `cap` distinct maps appear.
MonoidReport projection_monoid(const GroupBall& ball, const std::vector<SelfMapTable>& generators,
                               const Poset* poset = nullptr, std::size_t cap = 1'000'000);

/// J as a readable list "{s0,s2}".
std::string format_generator_set(GeneratorSet J, int rank);

}  // namespace coxkit
