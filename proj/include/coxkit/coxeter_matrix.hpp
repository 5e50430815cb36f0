#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coxkit {

using Generator = int;
using Word = std::vector<Generator>;

/// Subset of the generators, bit i set iff generator i belongs to it.
using GeneratorSet = std::uint32_t;

inline constexpr int kMaxRank = 32;

/// Encodes m(s,t) = infinity.
inline constexpr int kInfinity = 0;

inline bool contains(GeneratorSet set, Generator s) { return (set >> s) & 1U; }
inline GeneratorSet singleton(Generator s) { return GeneratorSet{1} << s; }
inline GeneratorSet all_generators(int rank) {
  return rank >= 32 ? ~GeneratorSet{0} : (GeneratorSet{1} << rank) - 1;
}

/// Symmetric Coxeter matrix over generators 0..rank-1.
///
/// Entries are stored as integers with kInfinity (0) standing for an
/// absent relation. The generator index order is also the ShortLex order
/// used for normal forms.
class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;

  /// Validates and stores `entries`; throws ValidationError naming the
  /// first offending entry.
  explicit CoxeterMatrix(std::vector<std::vector<int>> entries,
                         std::string name = {});

  /// Accepts a named type ("A3", "B4", "D5", "E6", "F4", "G2", "H3", "H4",
  /// "I2(5)", "I2(inf)", affine "~A2" / "A2~") or an explicit matrix with
  /// rows separated by ';' and "inf" for infinity, e.g. "1 3; 3 1".
  static CoxeterMatrix parse(std::string_view spec);

  int rank() const { return static_cast<int>(entries_.size()); }
  int operator()(Generator s, Generator t) const { return entries_[s][t]; }
  bool is_infinite(Generator s, Generator t) const {
    return entries_[s][t] == kInfinity;
  }
  const std::vector<std::vector<int>>& entries() const { return entries_; }

  /// Type name for named inputs, otherwise the matrix text.
  const std::string& name() const { return name_; }

  /// Length of the longest element when this is a named finite type.
  std::optional<int> longest_element_length() const { return longest_; }

  /// True iff the group is finite, i.e. the cosine form
  /// B(s,t) = -cos(pi / m(s,t)) is positive definite.
  bool is_finite() const;

  /// Matrix in the "1 3; 3 1" text format.
  std::string to_text() const;

  friend bool operator==(const CoxeterMatrix& a, const CoxeterMatrix& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<std::vector<int>> entries_;
  std::string name_;
  std::optional<int> longest_;
};

/// Formats a word as "s0s1s0"; the empty word prints as "e".
std::string format_word(const Word& w);

/// Parses "s0s1s0", "0 1 0", "010" (rank <= 10) or "e"/"" into a word.
Word parse_word(std::string_view text);

}  // namespace coxkit
