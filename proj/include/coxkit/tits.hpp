#pragma once

#include <cstddef>
#include <vector>

#include "coxkit/coxeter_matrix.hpp"

namespace coxkit {

inline constexpr std::size_t kDefaultBraidBudget = 100'000;

/// Word problem for arbitrary Coxeter matrices by Tits' theorem: a word is
/// reduced iff no word reachable from it by braid moves has two equal
/// adjacent letters, and two reduced words represent the same element iff
/// they are connected by braid moves.
///
/// All functions throw ResourceError once a braid closure exceeds `budget`
/// words, and ValidationError for letters outside the matrix rank.
class TitsSolver {
 public:
  explicit TitsSolver(CoxeterMatrix matrix, std::size_t budget = kDefaultBraidBudget);

  const CoxeterMatrix& matrix() const { return matrix_; }
  std::size_t budget() const { return budget_; }

  /// Every word reachable from `w` by braid moves, sorted ShortLex.
  std::vector<Word> braid_closure(const Word& w) const;

  bool is_reduced(const Word& w) const;

  /// A reduced word for the same element.
  Word reduce(const Word& w) const;

  /// ShortLex-least reduced word of the element.
  Word normal_form(const Word& w) const;

  /// Generators s with l(sw) < l(w) (left) resp. l(ws) < l(w) (right).
  GeneratorSet left_descents(const Word& w) const;
  GeneratorSet right_descents(const Word& w) const;

 private:
  void validate(const Word& w) const;

  CoxeterMatrix matrix_;
  std::size_t budget_;
};

/// Free-function forms bound to the default budget.
Word reduce_word(const CoxeterMatrix& m, const Word& w,
                 std::size_t budget = kDefaultBraidBudget);
Word normal_form(const CoxeterMatrix& m, const Word& w,
                 std::size_t budget = kDefaultBraidBudget);

}  // namespace coxkit
