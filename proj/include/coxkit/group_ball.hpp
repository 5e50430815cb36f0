#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxkit/coxeter_matrix.hpp"
#include "coxkit/tits.hpp"

namespace coxkit {

/// Ball-local handle of a group element. Ids are assigned in (length,
/// ShortLex normal form) order, so id 0 is always the identity.
using ElementId = std::int32_t;

/// Marks a Cayley neighbour that lies outside the ball.
inline constexpr ElementId kOutside = -1;

inline constexpr std::size_t kDefaultElementCap = 2'000'000;

enum class BallBackend {
  /// Level-by-level construction from descent sets and dihedral prefixes.
  kDescent,
  /// Breadth-first search with braid-closure normal forms.
  kTits,
  /// Permutation / signed-permutation / dihedral model (finite named types
  /// A, B, D and any I2(m) including m = inf).
  kModel,
};

struct BallOptions {
  std::size_t element_cap = kDefaultElementCap;
  std::size_t braid_budget = kDefaultBraidBudget;
  BallBackend backend = BallBackend::kDescent;
};

/// Read-only view of one element.
struct Element {
  ElementId id;
  const Word& normal_form;
  int length;
};

/// All elements of length at most `radius`, with left and right Cayley
/// edges, descent sets and ShortLex normal forms. Immutable once built.
class GroupBall {
 public:
  static GroupBall enumerate(const CoxeterMatrix& matrix, int radius,
                             const BallOptions& options = {});

  const CoxeterMatrix& matrix() const { return matrix_; }
  int rank() const { return matrix_.rank(); }
  int radius() const { return radius_; }
  std::size_t size() const { return lengths_.size(); }
  bool is_complete_group() const { return complete_; }
  std::size_t braid_budget() const { return braid_budget_; }

  ElementId identity() const { return 0; }
  Element element(ElementId id) const { return {id, normal_forms_[id], lengths_[id]}; }
  int length(ElementId id) const { return lengths_[id]; }
  const Word& normal_form(ElementId id) const { return normal_forms_[id]; }
  GeneratorSet left_descents(ElementId id) const { return left_descents_[id]; }
  GeneratorSet right_descents(ElementId id) const { return right_descents_[id]; }

  /// s * w, or kOutside when l(sw) > radius.
  ElementId left_mul(Generator s, ElementId w) const { return left_[index(w, s)]; }
  /// w * s, or kOutside when l(ws) > radius.
  ElementId right_mul(ElementId w, Generator s) const { return right_[index(w, s)]; }

  ElementId inverse(ElementId w) const { return inverse_[w]; }
  ElementId generator(Generator s) const { return left_mul(s, identity()); }

  /// u * v; throws OutOfBallError when l(uv) > radius.
  ElementId multiply(ElementId u, ElementId v) const;
  std::optional<ElementId> try_multiply(ElementId u, ElementId v) const;

  /// Element represented by an arbitrary (not necessarily reduced) word;
  /// throws OutOfBallError when it is longer than the radius.
  ElementId locate(const Word& word) const;
  std::optional<ElementId> find_normal_form(const Word& nf) const;

  /// Bruhat order by the subword criterion along the normal form of v.
  bool bruhat_leq(ElementId u, ElementId v) const;

  /// Number of elements of each length 0..radius (or up to the top length).
  std::vector<std::size_t> rank_sizes() const;
  /// Ids of length exactly `len`.
  std::span<const ElementId> level(int len) const;

  std::string label(ElementId id) const { return format_word(normal_forms_[id]); }

  /// Raw tables, shared by the construction backends.
  struct Tables {
    std::vector<int> lengths;
    std::vector<Word> normal_forms;
    std::vector<ElementId> left;  // size * rank, row-major by element
    std::vector<ElementId> right; // optional: validated against left when given
  };

 private:
  GroupBall() = default;
  static GroupBall finalize(const CoxeterMatrix& matrix, int radius, Tables tables,
                            std::size_t braid_budget, bool closed_early);

  std::size_t index(ElementId w, Generator s) const {
    return static_cast<std::size_t>(w) * static_cast<std::size_t>(rank()) +
           static_cast<std::size_t>(s);
  }
  std::optional<ElementId> walk_right(ElementId u, const Word& letters) const;
  std::optional<ElementId> walk_left(const Word& letters, ElementId v) const;

  CoxeterMatrix matrix_;
  int radius_ = 0;
  bool complete_ = false;
  std::size_t braid_budget_ = kDefaultBraidBudget;
  std::vector<int> lengths_;
  std::vector<Word> normal_forms_;
  std::vector<GeneratorSet> left_descents_;
  std::vector<GeneratorSet> right_descents_;
  std::vector<ElementId> left_;
  std::vector<ElementId> right_;
  std::vector<ElementId> inverse_;
  std::vector<ElementId> level_ids_;
  std::vector<std::size_t> level_offsets_;
  std::unordered_map<std::string, ElementId> by_normal_form_;

  friend GroupBall build_descent_ball(const CoxeterMatrix&, int, const BallOptions&);
  friend GroupBall build_tits_ball(const CoxeterMatrix&, int, const BallOptions&);
  friend GroupBall build_model_ball(const CoxeterMatrix&, int, const BallOptions&);
};

/// Ball of the finite group (radius = longest element length) for named
/// finite types; throws DomainError for other inputs.
GroupBall full_group(const CoxeterMatrix& matrix, const BallOptions& options = {});

/// Result of comparing two balls element by element.
struct BallComparison {
  bool equal = false;
  std::string first_difference;
};

/// Compares element count, normal forms, lengths, descent sets and Cayley
/// edges of two balls over the same matrix and radius.
BallComparison compare_balls(const GroupBall& a, const GroupBall& b);

}  // namespace coxkit
