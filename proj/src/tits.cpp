#include "coxkit/tits.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "coxkit/errors.hpp"

namespace coxkit {

namespace {

using Packed = std::string;

Packed pack(const Word& w) {
  Packed p(w.size(), '\0');
  for (std::size_t i = 0; i < w.size(); ++i) p[i] = static_cast<char>(w[i]);
  return p;
}

Word unpack(const Packed& p) {
  Word w(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) w[i] = static_cast<unsigned char>(p[i]);
  return w;
}

bool shortlex_less(const Packed& a, const Packed& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](char x, char y) {
                                        return static_cast<unsigned char>(x) <
                                               static_cast<unsigned char>(y);
                                      });
}

// All words reachable by replacing an alternating factor s t s ... of length
// m(s,t) with t s t ....
std::vector<Packed> closure_of(const CoxeterMatrix& m, const Packed& start,
                               std::size_t budget) {
  std::unordered_set<Packed> seen{start};
  std::deque<Packed> queue{start};
  std::vector<Packed> out;
  while (!queue.empty()) {
    Packed cur = std::move(queue.front());
    queue.pop_front();
    const std::size_t n = cur.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const int s = static_cast<unsigned char>(cur[i]);
      const int t = static_cast<unsigned char>(cur[i + 1]);
      if (s == t) continue;
      const int order = m(s, t);
      if (order == kInfinity || i + order > n) continue;
      bool alternating = true;
      for (int j = 2; j < order && alternating; ++j)
        alternating = static_cast<unsigned char>(cur[i + j]) == (j % 2 == 0 ? s : t);
      if (!alternating) continue;
      Packed next = cur;
      for (int j = 0; j < order; ++j) next[i + j] = static_cast<char>(j % 2 == 0 ? t : s);
      if (seen.insert(next).second) {
        if (seen.size() > budget)
          throw ResourceError("braid closure of a length-" + std::to_string(n) +
                              " word exceeded the budget of " + std::to_string(budget) +
                              " words");
        queue.push_back(std::move(next));
      }
    }
    out.push_back(std::move(cur));
  }
  return out;
}

bool has_square(const Packed& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] == p[i + 1]) return true;
  return false;
}

}  // namespace

TitsSolver::TitsSolver(CoxeterMatrix matrix, std::size_t budget)
    : matrix_(std::move(matrix)), budget_(budget) {}

void TitsSolver::validate(const Word& w) const {
  for (Generator s : w)
    if (s < 0 || s >= matrix_.rank())
      throw ValidationError("letter " + std::to_string(s) + " is outside rank " +
                            std::to_string(matrix_.rank()));
}

std::vector<Word> TitsSolver::braid_closure(const Word& w) const {
  validate(w);
  std::vector<Packed> words = closure_of(matrix_, pack(w), budget_);
  std::sort(words.begin(), words.end(), shortlex_less);
  std::vector<Word> out;
  out.reserve(words.size());
  for (const Packed& p : words) out.push_back(unpack(p));
  return out;
}

bool TitsSolver::is_reduced(const Word& w) const {
  validate(w);
  for (const Packed& p : closure_of(matrix_, pack(w), budget_))
    if (has_square(p)) return false;
  return true;
}

Word TitsSolver::reduce(const Word& w) const {
  validate(w);
  // Invariant: `cur` is reduced, so its closure is exactly its set of
  // reduced words; appending a drops length iff one of them ends in a.
  Packed cur;
  for (Generator a : w) {
    const char c = static_cast<char>(a);
    bool cancelled = false;
    if (!cur.empty()) {
      for (Packed& p : closure_of(matrix_, cur, budget_)) {
        if (p.back() == c) {
          p.pop_back();
          cur = std::move(p);
          cancelled = true;
          break;
        }
      }
    }
    if (!cancelled) cur.push_back(c);
  }
  return unpack(cur);
}

Word TitsSolver::normal_form(const Word& w) const {
  const Packed reduced = pack(reduce(w));
  std::vector<Packed> words = closure_of(matrix_, reduced, budget_);
  return unpack(*std::min_element(words.begin(), words.end(), shortlex_less));
}

GeneratorSet TitsSolver::left_descents(const Word& w) const {
  GeneratorSet d = 0;
  const Packed reduced = pack(reduce(w));
  if (reduced.empty()) return d;
  for (const Packed& p : closure_of(matrix_, reduced, budget_))
    d |= singleton(static_cast<unsigned char>(p.front()));
  return d;
}

GeneratorSet TitsSolver::right_descents(const Word& w) const {
  GeneratorSet d = 0;
  const Packed reduced = pack(reduce(w));
  if (reduced.empty()) return d;
  for (const Packed& p : closure_of(matrix_, reduced, budget_))
    d |= singleton(static_cast<unsigned char>(p.back()));
  return d;
}

Word reduce_word(const CoxeterMatrix& m, const Word& w, std::size_t budget) {
  return TitsSolver(m, budget).reduce(w);
}

Word normal_form(const CoxeterMatrix& m, const Word& w, std::size_t budget) {
  return TitsSolver(m, budget).normal_form(w);
}

}  // namespace coxkit
