#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace coxkit {

using Bitset = boost::dynamic_bitset<>;

/// Finite poset on nodes 0..n-1, held as its full order relation
/// (one bitset row per node) plus the cover relation.
///
/// `origin` maps each node to an external handle, for example the group
/// element it stands for or the node of a parent poset it was cut from.
class Poset {
 public:
  Poset() = default;

  /// Reflexive-transitive closure of the arcs, which must form a DAG.
  static Poset from_arcs(std::size_t n, const std::vector<std::pair<int, int>>& arcs);

  /// From a full relation matrix: leq[u][v] iff u <= v. The relation is
  /// closed transitively; `was_transitive` records whether that changed it.
  static Poset from_relation(std::vector<Bitset> leq);

  static Poset from_predicate(std::size_t n, const std::function<bool(int, int)>& leq);

  std::size_t size() const { return above_.size(); }
  bool leq(int u, int v) const { return above_[u][v]; }
  bool less(int u, int v) const { return u != v && above_[u][v]; }
  bool comparable(int u, int v) const { return leq(u, v) || leq(v, u); }

  /// {v : u <= v}, including u.
  const Bitset& up_set(int u) const { return above_[u]; }
  /// {v : v <= u}, including u.
  const Bitset& down_set(int u) const { return below_[u]; }

  const std::vector<int>& upper_covers(int u) const { return up_covers_[u]; }
  const std::vector<int>& lower_covers(int u) const { return down_covers_[u]; }
  bool covers(int u, int v) const;  // u is covered by v
  std::vector<std::pair<int, int>> cover_edges() const;
  std::size_t cover_count() const;

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  std::optional<int> bottom() const;
  std::optional<int> top() const;

  /// Number of related pairs u < v.
  std::size_t relation_size() const;

  /// Nodes in a linear extension (stable by index among incomparables).
  std::vector<int> linear_extension() const;

  /// Length (number of elements) of the longest chain.
  int height() const;

  /// Subposet induced on `nodes`; origin of the result points at the
  /// nodes of this poset.
  Poset induced(const std::vector<int>& nodes) const;

  /// Closed interval [u, v]; throws DomainError unless u <= v.
  Poset interval(int u, int v) const;

  /// Connected components of the comparability graph.
  std::vector<std::vector<int>> components() const;

  /// True iff every related pair of `other` is related here (same size).
  bool contains_relation(const Poset& other) const;
  bool same_relation(const Poset& other) const;

  // Annotations.
  std::vector<int> origin;
  std::vector<std::string> labels;
  std::optional<std::vector<int>> rank;
  std::string descriptor;
  bool was_transitive = true;

  std::string label(int u) const {
    return u < static_cast<int>(labels.size()) ? labels[u] : std::to_string(u);
  }

 private:
  void finish();

  std::vector<Bitset> above_;
  std::vector<Bitset> below_;
  std::vector<std::vector<int>> up_covers_;
  std::vector<std::vector<int>> down_covers_;
};

/// Result of testing a rank function.
struct GradedReport {
  bool graded = true;
  /// Cover edges (u, v) with rank(v) != rank(u) + 1.
  std::vector<std::pair<int, int>> violations;
};

/// Every cover raises `rank` by exactly one (so every maximal chain of
/// every interval [u, v] has rank(v) - rank(u) steps).
GradedReport check_graded(const Poset& poset, const std::vector<int>& rank);

/// Rank-free test: in every interval all maximal chains have the same
/// length. Reports the first offending pair.
struct IntervalGradedReport {
  bool graded = true;
  std::optional<std::pair<int, int>> witness;
  int shortest = 0;
  int longest = 0;
};
IntervalGradedReport is_graded(const Poset& poset);

/// Number of nodes at each rank value.
std::vector<std::size_t> rank_sizes(const Poset& poset);

}  // namespace coxkit
