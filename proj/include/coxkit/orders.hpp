#pragma once

#include <string>
#include <vector>

#include "coxkit/group_ball.hpp"
#include "coxkit/poset.hpp"
#include "coxkit/reflections.hpp"

namespace coxkit {

struct OmegaArc {
  ElementId from;
  ElementId to;
  ElementId label;  // the reflection t with to = t * from
};

/// Directed graph on the ball with an arc a -> ta for every t in X and
/// l(ta) > l(a). Arcs whose head leaves the ball are dropped and counted.
struct OmegaGraph {
  const GroupBall* ball = nullptr;
  std::vector<ElementId> X;
  std::vector<OmegaArc> arcs;
  std::size_t boundary_arcs = 0;
};

OmegaGraph omega_graph(const GroupBall& ball, const std::vector<ElementId>& X);

/// The order <=_{L^X}: reachability in omega_graph(ball, X). Node ids are
/// element ids; the rank function is l.
Poset intermediate_poset(const GroupBall& ball, const std::vector<ElementId>& X);

/// <=_{L^k}, i.e. X = T_k.
Poset k_intermediate_poset(const ReflectionTable& table, int k);

/// Bruhat order on the ball by the subword property.
Poset bruhat_poset(const GroupBall& ball);

/// Left weak order: u <= v iff l(v) = l(u) + l(v u^-1).
Poset left_weak_poset(const GroupBall& ball);

/// l_k: directed distance from e in Omega^k.
struct AbsoluteLengthTable {
  const GroupBall* ball = nullptr;
  int k = 0;
  std::vector<int> lk;
  /// Smallest-id predecessor on a shortest path, and the reflection used.
  std::vector<ElementId> parent;
  std::vector<ElementId> via;
  /// True when the ball is a complete finite group.
  bool complete = false;

  /// Reflections t_1, ..., t_r with w = t_r ... t_1 and r = l_k(w).
  std::vector<ElementId> witness(ElementId w) const;
};

AbsoluteLengthTable k_absolute_length_all(const ReflectionTable& table, int k);

struct AbsolutePoset {
  Poset poset;
  /// Pairs (u, v) left untested because v u^-1 may leave the ball.
  std::size_t flagged_pairs = 0;
  int suggested_radius = 0;
};

/// u <=_k v iff l_k(v) = l_k(u) + l_k(v u^-1); rank function l_k.
AbsolutePoset k_absolute_poset(const AbsoluteLengthTable& table);

/// Relation containments <=_{L^a} ⊆ <=_{L^b} (a <= b <= k_max) and
/// <=_{L^k_max} ⊆ Bruhat.
struct RefinementReport {
  bool ok = true;
  std::vector<std::string> failures;
  /// equals_bruhat[k]: <=_{L^k} coincides with Bruhat order.
  std::vector<bool> equals_bruhat;
  /// relation_sizes[k]: number of strictly related pairs in <=_{L^k}.
  std::vector<std::size_t> relation_sizes;
};

RefinementReport refinement_chain_check(const ReflectionTable& table, int k_max);

/// Distinct products of all generators, each once, over every ordering.
std::vector<ElementId> coxeter_elements(const GroupBall& ball);

}  // namespace coxkit
