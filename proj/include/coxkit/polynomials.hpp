#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxkit/orders.hpp"

namespace coxkit {

/// Coefficients by exponent; canonical form has a nonzero last entry.
using CoeffVector = std::vector<std::int64_t>;

CoeffVector trim(CoeffVector v);
std::string format_poly(const CoeffVector& v);

struct GenPoly {
  CoeffVector coeffs;
  /// Computed on an incomplete ball: only a lower truncation, never used
  /// for conjecture verdicts.
  bool ball_truncated = false;
};

/// Σ_w x^{ℓ_k(w)} over the ball.
GenPoly gen_poly(const AbsoluteLengthTable& table);

struct LogConcavity {
  bool log_concave = false;
  bool internal_zeros = false;
  /// First interior index with c_i^2 < c_{i-1} c_{i+1}.
  std::optional<int> failing_index;
};

LogConcavity is_log_concave(const CoeffVector& v);
bool is_unimodal(const CoeffVector& v);

/// Closed form for I2(m) evaluated term by term, exponents that coincide
/// being added.
struct DihedralFormula {
  int m = 0;
  int k = 0;
  int floor_term = 0;  // ⌊(m-1)/(2k+1)⌋
  int pi = 0;          // π_{2k+1}(m)
  std::int64_t a = 0;
  std::int64_t b = 0;
  CoeffVector coeffs;
};

/// Needs 2 <= m and 2k+1 <= m (DomainError otherwise).
DihedralFormula dihedral_formula_poly(int m, int k);

/// π_h(n) = n - h⌊n/h⌋.
int pi_h(int h, int n);

/// C(n,2) - C(n-k-1,2), with C(j,2) = 0 for j < 2.
std::int64_t count_t_k_type_A(int n, int k);

}  // namespace coxkit
