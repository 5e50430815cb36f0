#pragma once

#include <set>
#include <string>
#include <vector>

#include "coxkit/group_ball.hpp"
#include "coxkit/poset.hpp"

namespace coxkit {

/// Reflections of a ball, sorted by element id (hence by length).
///
/// Holds a pointer to the ball; the ball must outlive the table.
struct ReflectionTable {
  const GroupBall* ball = nullptr;
  std::vector<ElementId> reflections;
  /// Positive root of each reflection in the geometric representation,
  /// coordinates over the simple roots (parallel to `reflections`).
  std::vector<std::vector<double>> roots;

  bool is_reflection(ElementId w) const;
  std::size_t index_of(ElementId t) const;  // position in `reflections`
  /// Longest reflection length seen.
  int max_length() const;
  /// Largest k for which T_k certainly lies inside the ball: INT_MAX for a
  /// complete group, -1 when even T_0 is cut off (radius 0).
  int max_certified_k() const;
};

ReflectionTable reflections_in_ball(const GroupBall& ball);

/// T_k = {t : l(t) <= 2k+1}; throws OutOfBallError when 2k+1 exceeds the
/// radius of an incomplete ball.
std::vector<ElementId> t_k_set(const ReflectionTable& table, int k);

/// Reflection subgroup generated by two distinct reflections.
struct ReflectionSubgroup {
  std::vector<ElementId> member_ids;        // W' inside the ball, sorted
  std::vector<ElementId> canonical_generators;  // sorted pair
  bool is_dihedral = true;
  bool closed = false;                      // every member lies in the ball
  /// Length of each member w.r.t. the canonical generators, parallel to
  /// member_ids.
  std::vector<int> internal_length;

  int internal_length_of(ElementId w) const;
  bool contains(ElementId w) const;
};

ReflectionSubgroup dihedral_subgroup(const GroupBall& ball, ElementId t, ElementId t2);

/// Reflections r of the ball whose root lies in the plane spanned by the
/// roots of t and t2: the reflections of the maximal dihedral reflection
/// subgroup containing both.
std::vector<ElementId> dihedral_reflections(const ReflectionTable& table, ElementId t, ElementId t2);

/// The poset (T, ⊑) on the reflections of the ball, or on those of length
/// at most `max_length` when given (pairs need radius >= 2 * max_length
/// to be certified in infinite groups). Node i is the i-th kept
/// reflection; origin holds element ids, labels normal forms.
Poset t_order_poset(const ReflectionTable& table, std::optional<int> max_length = std::nullopt);

/// Generating relation before transitive closure: t ⊑' t2, i.e. a
/// length-increasing path from t to t2 inside the maximal dihedral
/// reflection subgroup containing both. Throws OutOfBallError when the
/// radius is below 2 l(t2) in an incomplete ball.
bool t_order_generating(const ReflectionTable& table, ElementId t, ElementId t2);

/// `members` are node indices of the poset.
bool is_order_ideal(const Poset& poset, const std::vector<int>& members);

/// All order ideals (down-sets) of a poset as sorted node lists, in a
/// deterministic order; throws ResourceError past `cap`.
std::vector<std::vector<int>> order_ideals(const Poset& poset, std::size_t cap = 100'000);

}  // namespace coxkit
