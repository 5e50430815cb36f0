#include "coxkit/polynomials.hpp"

#include "coxkit/errors.hpp"

namespace coxkit {

CoeffVector trim(CoeffVector v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

std::string format_poly(const CoeffVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || v[i] != 1) out += std::to_string(v[i]);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

GenPoly gen_poly(const AbsoluteLengthTable& table) {
  GenPoly p;
  p.ball_truncated = !table.complete;
  for (int v : table.lk) {
    if (static_cast<std::size_t>(v) >= p.coeffs.size()) p.coeffs.resize(v + 1, 0);
    ++p.coeffs[v];
  }
  p.coeffs = trim(std::move(p.coeffs));
  return p;
}

LogConcavity is_log_concave(const CoeffVector& raw) {
  const CoeffVector v = trim(raw);
  LogConcavity out;
  std::size_t first = 0;
  while (first < v.size() && v[first] == 0) ++first;
  for (std::size_t i = first; i < v.size(); ++i) out.internal_zeros = out.internal_zeros || v[i] == 0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i)
    if (v[i] * v[i] < v[i - 1] * v[i + 1]) {
      out.failing_index = static_cast<int>(i);
      break;
    }
  out.log_concave = !out.internal_zeros && !out.failing_index;
  return out;
}

bool is_unimodal(const CoeffVector& v) {
  std::size_t i = 0;
  while (i + 1 < v.size() && v[i] <= v[i + 1]) ++i;
  while (i + 1 < v.size() && v[i] >= v[i + 1]) ++i;
  return i + 1 >= v.size();
}

int pi_h(int h, int n) { return n - h * (n / h); }

DihedralFormula dihedral_formula_poly(int m, int k) {
  if (m < 2 || k < 0 || 2 * k + 1 > m) throw DomainError("dihedral formula needs m >= 2 and 1 <= 2k+1 <= m");
  DihedralFormula f;
  f.m = m;
  f.k = k;
  f.floor_term = (m - 1) / (2 * k + 1);
  f.pi = pi_h(2 * k + 1, m);
  f.a = 2 * k + f.pi + (f.pi == 0 ? 2 * k + 1 : 0);
  f.b = f.pi == 0 ? 2 * k : f.pi - 1;
  CoeffVector c(f.floor_term + 3, 0);
  c[0] += 1;
  c[1] += 2 * (k + 1);
  for (int i = 2; i <= f.floor_term; ++i) c[i] += 2 * (2 * k + 1);
  c[f.floor_term + 1] += f.a;
  c[f.floor_term + 2] += f.b;
  f.coeffs = trim(std::move(c));
  return f;
}

std::int64_t count_t_k_type_A(int n, int k) {
  if (n < 2 || k < 0) throw DomainError("count_t_k_type_A needs n >= 2 and k >= 0");
  auto choose2 = [](std::int64_t j) { return j < 2 ? 0 : j * (j - 1) / 2; };
  return choose2(n) - choose2(n - k - 1);
}

}  // namespace coxkit
