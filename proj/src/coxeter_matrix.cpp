#include "coxkit/coxeter_matrix.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <regex>
#include <sstream>

#include "coxkit/errors.hpp"

namespace coxkit {

namespace {

using Entries = std::vector<std::vector<int>>;

Entries identity_entries(int rank) {
  Entries e(rank, std::vector<int>(rank, 2));
  for (int i = 0; i < rank; ++i) e[i][i] = 1;
  return e;
}

void bond(Entries& e, int a, int b, int m) {
  e[a][b] = m;
  e[b][a] = m;
}

Entries chain(int rank, int m = 3) {
  Entries e = identity_entries(rank);
  for (int i = 0; i + 1 < rank; ++i) bond(e, i, i + 1, m);
  return e;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

int parse_entry(const std::string& tok, int row, int col) {
  if (tok == "inf" || tok == "oo" || tok == "∞") return kInfinity;
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    if (v < 0) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ValidationError("matrix entry (" + std::to_string(row) + "," +
                          std::to_string(col) + ") is not an integer or 'inf': '" +
                          tok + "'");
  }
}

CoxeterMatrix parse_explicit(std::string_view spec) {
  std::string text = trim(spec);
  // Tolerate an optional surrounding pair of brackets.
  if (!text.empty() && text.front() == '[' && text.back() == ']')
    text = text.substr(1, text.size() - 2);
  // Nested JSON-style rows "[a, b], [c, d]" become "a, b; c, d".
  text = std::regex_replace(text, std::regex(R"(\]\s*,\s*\[)"), ";");
  Entries rows;
  std::stringstream rs(text);
  std::string row_text;
  int r = 0;
  while (std::getline(rs, row_text, ';')) {
    for (char& c : row_text)
      if (c == ',' || c == '[' || c == ']') c = ' ';
    std::stringstream cs(row_text);
    std::string tok;
    std::vector<int> row;
    int c = 0;
    while (cs >> tok) row.push_back(parse_entry(tok, r, c++));
    if (row.empty()) throw ValidationError("matrix row " + std::to_string(r) + " is empty");
    rows.push_back(std::move(row));
    ++r;
  }
  if (rows.empty()) throw ValidationError("empty Coxeter matrix");
  return CoxeterMatrix(std::move(rows), trim(spec));
}

struct Named {
  Entries entries;
  std::optional<int> longest;
};

Named named_finite(char family, int n) {
  switch (family) {
    case 'A':
      if (n < 1) break;
      return {chain(n), n * (n + 1) / 2};
    case 'B':
    case 'C':
      if (n < 2) break;
      {
        Entries e = chain(n);
        bond(e, 0, 1, 4);
        return {e, n * n};
      }
    case 'D':
      if (n < 3) break;
      {
        // Fork at the start: generators 0 and 1 both bond with 2.
        Entries e = identity_entries(n);
        bond(e, 0, 2, 3);
        for (int i = 1; i + 1 < n; ++i) bond(e, i, i + 1, 3);
        return {e, n * (n - 1)};
      }
    case 'E':
      if (n < 6 || n > 8) break;
      {
        Entries e = identity_entries(n);
        bond(e, 0, 2, 3);
        bond(e, 1, 3, 3);
        for (int i = 2; i + 1 < n; ++i) bond(e, i, i + 1, 3);
        static constexpr int kLongest[] = {36, 63, 120};
        return {e, kLongest[n - 6]};
      }
    case 'F':
      if (n != 4) break;
      {
        Entries e = chain(4);
        bond(e, 1, 2, 4);
        return {e, 24};
      }
    case 'G':
      if (n != 2) break;
      return {chain(2, 6), 6};
    case 'H':
      if (n < 3 || n > 4) break;
      {
        Entries e = chain(n);
        bond(e, 0, 1, 5);
        return {e, n == 3 ? 15 : 60};
      }
    default:
      break;
  }
  throw ValidationError(std::string("unknown finite Coxeter type ") + family +
                        std::to_string(n));
}

Entries named_affine(char family, int n) {
  switch (family) {
    case 'A':
      if (n == 1) return chain(2, kInfinity);
      if (n >= 2) {
        Entries e = chain(n + 1);
        bond(e, n, 0, 3);
        return e;
      }
      break;
    case 'B':
      if (n >= 3) {
        Entries e = identity_entries(n + 1);
        bond(e, 0, 2, 3);
        for (int i = 1; i + 1 < n; ++i) bond(e, i, i + 1, 3);
        bond(e, n - 1, n, 4);
        return e;
      }
      break;
    case 'C':
      if (n >= 2) {
        Entries e = chain(n + 1);
        bond(e, 0, 1, 4);
        bond(e, n - 1, n, 4);
        return e;
      }
      break;
    case 'D':
      if (n >= 4) {
        Entries e = identity_entries(n + 1);
        bond(e, 0, 2, 3);
        for (int i = 1; i + 1 <= n - 2; ++i) bond(e, i, i + 1, 3);
        bond(e, n - 2, n - 1, 3);
        bond(e, n - 2, n, 3);
        return e;
      }
      break;
    case 'E':
      if (n == 6) {
        Entries e = identity_entries(7);
        for (int i = 0; i < 4; ++i) bond(e, i, i + 1, 3);
        bond(e, 2, 5, 3);
        bond(e, 5, 6, 3);
        return e;
      }
      if (n == 7) {
        Entries e = chain(8);
        e[6][7] = e[7][6] = 2;
        bond(e, 3, 7, 3);
        return e;
      }
      if (n == 8) {
        Entries e = chain(9);
        e[7][8] = e[8][7] = 2;
        bond(e, 2, 8, 3);
        return e;
      }
      break;
    case 'F':
      if (n == 4) {
        Entries e = chain(5);
        bond(e, 2, 3, 4);
        return e;
      }
      break;
    case 'G':
      if (n == 2) {
        Entries e = chain(3);
        bond(e, 1, 2, 6);
        return e;
      }
      break;
    default:
      break;
  }
  throw ValidationError(std::string("unknown affine Coxeter type ~") + family +
                        std::to_string(n));
}

}  // namespace

CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<int>> entries, std::string name)
    : entries_(std::move(entries)), name_(std::move(name)) {
  const int n = rank();
  if (n == 0) throw ValidationError("Coxeter matrix must have rank >= 1");
  if (n > kMaxRank)
    throw ValidationError("rank " + std::to_string(n) + " exceeds the supported maximum " +
                          std::to_string(kMaxRank));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(entries_[i].size()) != n)
      throw ValidationError("matrix row " + std::to_string(i) + " has " +
                            std::to_string(entries_[i].size()) + " entries, expected " +
                            std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int v = entries_[i][j];
      const std::string where = "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (i == j) {
        if (v != 1) throw ValidationError(where + " on the diagonal must be 1, got " +
                                          std::to_string(v));
      } else {
        if (v != kInfinity && v < 2)
          throw ValidationError(where + " off the diagonal must be >= 2 or inf, got " +
                                std::to_string(v));
        if (v != entries_[j][i])
          throw ValidationError(where + " breaks symmetry: " + std::to_string(v) +
                                " vs " + std::to_string(entries_[j][i]));
      }
    }
  }
  if (name_.empty()) name_ = to_text();
}

CoxeterMatrix CoxeterMatrix::parse(std::string_view spec) {
  const std::string text = trim(spec);
  static const std::regex dihedral(R"(I2\((\d+|inf)\))");
  static const std::regex finite(R"(([A-H])(\d+))");
  static const std::regex affine(R"(~([A-G])(\d+)|([A-G])(\d+)~)");
  std::smatch m;
  if (std::regex_match(text, m, dihedral)) {
    const std::string arg = m[1].str();
    const int order = arg == "inf" ? kInfinity : std::stoi(arg);
    if (order != kInfinity && order < 2)
      throw ValidationError("I2(m) requires m >= 2, got " + arg);
    CoxeterMatrix cm(chain(2, order), text);
    if (order != kInfinity) cm.longest_ = order;
    return cm;
  }
  if (std::regex_match(text, m, finite)) {
    Named named = named_finite(m[1].str()[0], std::stoi(m[2].str()));
    CoxeterMatrix cm(std::move(named.entries), text);
    cm.longest_ = named.longest;
    return cm;
  }
  if (std::regex_match(text, m, affine)) {
    const bool prefix = m[1].matched;
    const char family = (prefix ? m[1] : m[3]).str()[0];
    const int n = std::stoi((prefix ? m[2] : m[4]).str());
    return CoxeterMatrix(named_affine(family, n), "~" + std::string(1, family) + std::to_string(n));
  }
  if (!text.empty() && (std::isdigit(static_cast<unsigned char>(text[0])) || text[0] == '['))
    return parse_explicit(text);
  throw ValidationError("cannot parse Coxeter type or matrix: '" + text + "'");
}

std::string CoxeterMatrix::to_text() const {
  std::string out;
  for (int i = 0; i < rank(); ++i) {
    if (i) out += "; ";
    for (int j = 0; j < rank(); ++j) {
      if (j) out += ' ';
      out += entries_[i][j] == kInfinity ? "inf" : std::to_string(entries_[i][j]);
    }
  }
  return out;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (Generator s : w) out += "s" + std::to_string(s);
  return out;
}

Word parse_word(std::string_view text) {
  const std::string t = trim(text);
  Word w;
  if (t.empty() || t == "e") return w;
  if (t.find('s') != std::string::npos) {
    std::size_t i = 0;
    while (i < t.size()) {
      if (t[i] == 's') {
        std::size_t j = i + 1;
        while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
        if (j == i + 1) throw ValidationError("dangling 's' in word '" + t + "'");
        w.push_back(std::stoi(t.substr(i + 1, j - i - 1)));
        i = j;
      } else if (std::isspace(static_cast<unsigned char>(t[i])) || t[i] == '.' || t[i] == '*') {
        ++i;
      } else {
        throw ValidationError("unexpected character in word '" + t + "'");
      }
    }
    return w;
  }
  if (t.find_first_of(" ,") != std::string::npos) {
    std::string copy = t;
    for (char& c : copy)
      if (c == ',') c = ' ';
    std::stringstream ss(copy);
    std::string tok;
    while (ss >> tok) {
      if (tok.find_first_not_of("0123456789") != std::string::npos)
        throw ValidationError("bad letter '" + tok + "' in word");
      w.push_back(std::stoi(tok));
    }
    return w;
  }
  for (char c : t) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ValidationError("unexpected character in word '" + t + "'");
    w.push_back(c - '0');
  }
  return w;
}

}  // namespace coxkit

namespace coxkit {

bool CoxeterMatrix::is_finite() const {
  const int n = rank();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int m = entries_[i][j];
      a[i][j] = m == kInfinity ? -1.0 : -std::cos(std::numbers::pi / m);
    }
  // Cholesky; a non-positive pivot means the form is not positive definite.
  constexpr double kEps = 1e-9;
  for (int j = 0; j < n; ++j) {
    double d = a[j][j];
    for (int k = 0; k < j; ++k) d -= a[j][k] * a[j][k];
    if (d <= kEps) return false;
    a[j][j] = std::sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      double v = a[i][j];
      for (int k = 0; k < j; ++k) v -= a[i][k] * a[j][k];
      a[i][j] = v / a[j][j];
    }
  }
  return true;
}

}  // namespace coxkit
