// One line per acceptance criterion. Exit status 0 iff every criterion
// passes within its time budget, except criterion 9, which must fail in
// exactly the known way (the closed form double-counts when m = 2k+1).

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "coxkit/curvature.hpp"
#include "coxkit/errors.hpp"
#include "coxkit/orders.hpp"
#include "coxkit/polynomials.hpp"
#include "coxkit/posetlab.hpp"
#include "coxkit/projections.hpp"
#include "coxkit/suite.hpp"
#include "unit/oracles.hpp"

using namespace coxkit;

namespace {

struct Result {
  bool pass = false;
  std::string detail;
  /// Failed, but exactly as documented for a known-red criterion.
  bool known_red = false;
};

std::string one_line(const GroupBall& ball, ElementId w) {
  std::string out;
  for (int v : oracle::perm_of_word(ball.normal_form(w), ball.rank() + 1)) out += std::to_string(v);
  return out;
}

std::vector<std::string> type_range(std::initializer_list<const char*> fixed, int m_lo, int m_hi) {
  std::vector<std::string> out(fixed.begin(), fixed.end());
  for (int m = m_lo; m <= m_hi; ++m) out.push_back("I2(" + std::to_string(m) + ")");
  return out;
}

std::string failures_of(const SuiteReport& r) {
  std::string out;
  for (const auto& o : r.outcomes)
    if (o.status != CheckStatus::kPass) out += " " + o.type + "/" + o.check + ":" + to_string(o.status);
  return out;
}

Result c1() {
  const auto s4 = full_group(CoxeterMatrix::parse("A3"));
  const auto p = gen_poly(k_absolute_length_all(reflections_in_ball(s4), 1));
  return {p.coeffs == CoeffVector{1, 5, 10, 7, 1}, "S4 k=1: " + format_poly(p.coeffs)};
}

Result c2() {
  const auto s4 = full_group(CoxeterMatrix::parse("A3"));
  const auto lk = k_absolute_length_all(reflections_in_ball(s4), 1);
  const auto abs = k_absolute_poset(lk);
  std::map<std::string, int> maxima;
  for (int u : abs.poset.maximal_elements()) maxima[one_line(s4, abs.poset.origin[u])] = lk.lk[abs.poset.origin[u]];
  const std::map<std::string, int> expected{{"2413", 3}, {"3142", 3}, {"4321", 4}};
  std::string detail = "maxima";
  for (const auto& [w, l] : maxima) detail += " " + w + "(l1=" + std::to_string(l) + ")";
  return {maxima == expected, detail};
}

Result c3() {
  std::size_t cells = 0, bad = 0;
  for (int n = 2; n <= 7; ++n) {
    const auto sn = full_group(CoxeterMatrix::parse("A" + std::to_string(n - 1)));
    const auto table = reflections_in_ball(sn);
    for (int k = 0; k <= n; ++k) {
      const auto formula = oracle::binomial(n, 2) - oracle::binomial(n - k - 1, 2);
      // (i j) has length 2(j-i)-1 in S_n.
      std::uint64_t transpositions = 0;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) transpositions += 2 * (j - i) - 1 <= 2 * k + 1;
      const auto enumerated = t_k_set(table, k).size();
      ++cells;
      bad += !(enumerated == formula && count_t_k_type_A(n, k) == formula && transpositions == formula);
    }
  }
  return {bad == 0, std::to_string(cells) + " cells (n, k), " + std::to_string(bad) + " mismatches"};
}

std::set<std::pair<std::string, std::string>> labelled_covers(const GroupBall& ball, const Poset& p) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [u, v] : p.cover_edges()) out.insert({ball.label(p.origin[u]), ball.label(p.origin[v])});
  return out;
}

Result c4() {
  const auto a3 = full_group(CoxeterMatrix::parse("A3"));
  const auto pa = t_order_poset(reflections_in_ball(a3));
  // 1-based labels s1, s2, s3 are generators 0, 1, 2 here.
  const std::set<std::pair<std::string, std::string>> a3_expected{
      {"s0", "s0s1s0"}, {"s1", "s0s1s0"}, {"s1", "s1s2s1"}, {"s2", "s1s2s1"},
      {"s0s1s0", "s0s1s2s1s0"}, {"s1s2s1", "s0s1s2s1s0"}};
  const auto b3 = full_group(CoxeterMatrix::parse("B3"));
  const auto pb = t_order_poset(reflections_in_ball(b3));
  auto name = [&](const char* w) { return b3.label(b3.locate(parse_word(w))); };
  const std::string a1 = name("s1s0s1s2s1s0s1"), b1 = name("s0s1s2s1s0"), b2 = name("s2s1s0s1s2");
  const std::string e1 = name("s0s1s0"), e2 = name("s1s0s1"), e3 = name("s1s2s1");
  const std::set<std::pair<std::string, std::string>> b3_expected{
      {b1, a1}, {e2, a1}, {e1, b1}, {e3, b1}, {e2, b2}, {e3, b2},
      {"s0", e1}, {"s1", e1}, {"s0", e2}, {"s1", e2}, {"s1", e3}, {"s2", e3}};
  const bool a_ok = pa.size() == 6 && labelled_covers(a3, pa) == a3_expected;
  const bool b_ok = pb.size() == 9 && labelled_covers(b3, pb) == b3_expected;
  return {a_ok && b_ok, "A3 " + std::to_string(pa.size()) + " nodes/" + std::to_string(pa.cover_count()) +
                            " covers, B3 " + std::to_string(pb.size()) + " nodes/" +
                            std::to_string(pb.cover_count()) + " covers"};
}

CheckSuiteConfig all_ideals(const std::string& check) {
  CheckSuiteConfig c;
  c.types = type_range({"A3", "B3"}, 2, 8);
  c.ideals = IdealMode::kAll;
  c.checks = {check};
  return c;
}

Result c5() {
  const auto r = run_check_suite(all_ideals("graded"));
  std::size_t ideals = 0;
  for (const auto& o : r.outcomes) ideals += o.data["ideals"].size();
  const std::string failures = failures_of(r);
  return {failures.empty() && r.exit_code() == 0,
          std::to_string(ideals) + " ideals over A3, B3, I2(2..8)" + (failures.empty() ? "" : ";" + failures)};
}

Result c6() {
  const auto r = run_check_suite(all_ideals("projections"));
  bool control = false;
  for (const auto& o : r.outcomes)
    if (o.check == "projections-control") control = o.status == CheckStatus::kPass;
  const std::string failures = failures_of(r);
  return {failures.empty() && control && r.exit_code() == 0,
          std::string("all (X, J) order-preserving; A2 control detected: ") + (control ? "yes" : "no") + failures};
}

Result c7() {
  const auto s4 = full_group(CoxeterMatrix::parse("A3"));
  const auto table = reflections_in_ball(s4);
  const Poset l2 = k_intermediate_poset(table, 2);
  // Tableau criterion for Bruhat order on permutations.
  auto tableau_leq = [](const oracle::Perm& u, const oracle::Perm& v) {
    const int n = static_cast<int>(u.size());
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        int cu = 0, cv = 0;
        for (int a = 0; a < i; ++a) {
          cu += u[a] >= j;
          cv += v[a] >= j;
        }
        if (cu > cv) return false;
      }
    return true;
  };
  bool bruhat = true;
  for (ElementId u = 0; u < static_cast<ElementId>(s4.size()); ++u)
    for (ElementId v = 0; v < static_cast<ElementId>(s4.size()); ++v)
      bruhat = bruhat && l2.leq(u, v) == tableau_leq(oracle::perm_of_word(s4.normal_form(u), 4),
                                                     oracle::perm_of_word(s4.normal_form(v), 4));
  bool weak = true;
  std::string balls;
  const std::vector<std::pair<std::string, std::optional<int>>> tested{
      {"A3", {}}, {"B3", {}}, {"H3", {}}, {"D4", {}}, {"I2(5)", {}}, {"I2(inf)", 8}, {"~A2", 6}, {"~C2", 6}};
  for (const auto& [type, radius] : tested) {
    const auto ball = build_ball(type, radius, kDefaultElementCap);
    const auto t = reflections_in_ball(ball);
    // Left weak order: u <= v iff l(v u^-1) + l(u) = l(v); a product outside
    // the ball is longer than l(v) - l(u).
    const Poset l0 = k_intermediate_poset(t, 0);
    for (ElementId u = 0; u < static_cast<ElementId>(ball.size()); ++u)
      for (ElementId v = 0; v < static_cast<ElementId>(ball.size()); ++v) {
        const auto q = ball.try_multiply(v, ball.inverse(u));
        const bool prefix = q && ball.length(*q) + ball.length(u) == ball.length(v);
        weak = weak && l0.leq(u, v) == prefix;
      }
    balls += " " + type;
  }
  return {bruhat && weak, std::string("S4 L^2 = Bruhat (tableau oracle): ") + (bruhat ? "yes" : "no") +
                              "; L^0 = left weak on" + balls + ": " + (weak ? "yes" : "no")};
}

Result c8() {
  bool ok = true;
  std::string detail;
  for (const char* type : {"A2", "A3"}) {
    const auto ball = full_group(CoxeterMatrix::parse(type));
    const auto table = reflections_in_ball(ball);
    const Poset bruhat = bruhat_poset(ball);
    int ks = 0;
    for (int k = 0; 2 * k - 1 <= table.max_length(); ++k, ++ks) {
      const Poset img = phi_k_image_poset(k_intermediate_poset(table, k), ball);
      const auto iso = poset_isomorphic(img, bruhat);
      bool witnessed = iso.isomorphic && iso.bijection.size() == img.size();
      for (int u = 0; witnessed && u < static_cast<int>(img.size()); ++u)
        for (int v = 0; v < static_cast<int>(img.size()); ++v)
          witnessed = witnessed && img.leq(u, v) == bruhat.leq(iso.bijection[u], iso.bijection[v]);
      ok = ok && witnessed;
    }
    detail += std::string(type) + " k=0.." + std::to_string(ks - 1) + " isomorphic; ";
  }
  const auto b3 = full_group(CoxeterMatrix::parse("B3"));
  const bool b3_graded = is_graded(phi_k_image_poset(k_intermediate_poset(reflections_in_ball(b3), 0), b3)).graded;
  ok = ok && !b3_graded;
  detail += std::string("B3 Im(phi_0) graded: ") + (b3_graded ? "yes" : "no");
  return {ok, detail};
}

// l_k on I2(m) from the explicit model: (f, i) is r^i (f = 0) or r^i s
// (f = 1), with s0 = (1, 0) and s1 = (1, 1).
CoeffVector dihedral_model_poly(int m, int k) {
  using El = std::pair<int, int>;
  auto mul = [m](El a, El b) -> El {
    const int sign = a.first ? -1 : 1;
    return {a.first ^ b.first, (((a.second + sign * b.second) % m) + m) % m};
  };
  std::map<El, int> len{{{0, 0}, 0}};
  std::vector<El> frontier{{0, 0}};
  while (!frontier.empty()) {
    std::vector<El> next;
    for (El w : frontier)
      for (El s : {El{1, 0}, El{1, 1}}) {
        const El ws = mul(w, s);
        if (!len.count(ws)) {
          len[ws] = len[w] + 1;
          next.push_back(ws);
        }
      }
    frontier = next;
  }
  std::vector<El> tk;
  for (const auto& [w, l] : len)
    if (w.first == 1 && l <= 2 * k + 1) tk.push_back(w);
  std::map<El, int> lk{{{0, 0}, 0}};
  frontier = {{0, 0}};
  while (!frontier.empty()) {
    std::vector<El> next;
    for (El a : frontier)
      for (El t : tk) {
        const El ta = mul(t, a);
        if (len[ta] > len[a] && !lk.count(ta)) {
          lk[ta] = lk[a] + 1;
          next.push_back(ta);
        }
      }
    frontier = next;
  }
  CoeffVector c;
  for (const auto& [w, l] : lk) {
    if (static_cast<int>(c.size()) <= l) c.resize(l + 1, 0);
    ++c[l];
  }
  return c;
}

Result c9() {
  std::set<std::pair<int, int>> mismatches;
  bool bfs_vs_model = true;
  int cells = 0;
  for (int m = 2; m <= 12; ++m) {
    const auto ball = full_group(CoxeterMatrix::parse("I2(" + std::to_string(m) + ")"));
    const auto table = reflections_in_ball(ball);
    for (int k = 0; 2 * k + 1 <= m; ++k, ++cells) {
      const CoeffVector bfs = gen_poly(k_absolute_length_all(table, k)).coeffs;
      bfs_vs_model = bfs_vs_model && bfs == dihedral_model_poly(m, k);
      if (trim(dihedral_formula_poly(m, k).coeffs) != bfs) mismatches.insert({m, k});
    }
  }
  std::set<std::pair<int, int>> documented;
  for (int k = 1; 2 * k + 1 <= 12; ++k) documented.insert({2 * k + 1, k});
  std::string list;
  for (const auto& [m, k] : mismatches) list += " (" + std::to_string(m) + "," + std::to_string(k) + ")";
  Result r;
  r.pass = mismatches.empty() && bfs_vs_model;
  r.known_red = mismatches == documented && bfs_vs_model;
  r.detail = std::to_string(cells) + " cells, BFS = explicit model: " + (bfs_vs_model ? "yes" : "no") +
             "; closed form differs at (m,k) =" + (list.empty() ? " none" : list);
  if (r.known_red) r.detail += "; known erratum: at m = 2k+1 the floor term is 0 and the a/b terms double-count";
  return r;
}

bool log_concave_oracle(const CoeffVector& c) {
  std::size_t first = 0, last = c.size();
  while (first < last && c[first] == 0) ++first;
  while (last > first && c[last - 1] == 0) --last;
  for (std::size_t i = first; i < last; ++i)
    if (c[i] == 0) return false;
  for (std::size_t i = first + 1; i + 1 < last; ++i)
    if (c[i] * c[i] < c[i - 1] * c[i + 1]) return false;
  return true;
}

Result c10() {
  std::vector<std::string> types{"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "H3"};
  for (int m = 2; m <= 12; ++m) types.push_back("I2(" + std::to_string(m) + ")");
  int cells = 0;
  std::string failures;
  for (const auto& type : types) {
    const auto ball = full_group(CoxeterMatrix::parse(type));
    const auto table = reflections_in_ball(ball);
    for (int k = 0; 2 * k - 1 <= table.max_length(); ++k, ++cells) {
      const auto p = gen_poly(k_absolute_length_all(table, k));
      std::int64_t total = 0;
      for (auto c : p.coeffs) total += c;
      const auto lc = is_log_concave(p.coeffs);
      const bool oracle_ok = log_concave_oracle(p.coeffs);
      if (!(lc.log_concave && oracle_ok && !lc.internal_zeros && total == static_cast<std::int64_t>(ball.size())))
        failures += " " + type + "/k" + std::to_string(k);
    }
  }
  return {failures.empty(), std::to_string(cells) + " (type, k) cells log-concave" +
                                (failures.empty() ? "" : "; failing:" + failures)};
}

Result c11() {
  int intervals = 0, shellable = 0, verified = 0;
  std::string bad;
  for (const char* type : {"A2", "A3"}) {
    const auto ball = full_group(CoxeterMatrix::parse(type));
    const auto table = reflections_in_ball(ball);
    for (int k = 0; k <= 2; ++k) {
      const Poset lk = k_intermediate_poset(table, k);
      for (ElementId c : coxeter_elements(ball)) {
        const auto complex = order_complex(lk.interval(ball.identity(), c));
        const auto r = shellability(complex);
        ++intervals;
        if (r.verdict != ShellVerdict::kShellable) {
          bad += std::string(" ") + type + "/k" + std::to_string(k) + "/" + ball.label(c) + ":" + to_string(r.verdict);
          continue;
        }
        ++shellable;
        std::vector<std::set<int>> facets;
        for (const auto& f : complex.facets) facets.emplace_back(f.begin(), f.end());
        verified += oracle::shelling_by_definition(facets, r.order);
      }
    }
  }
  return {shellable == intervals && verified == intervals,
          std::to_string(intervals) + " intervals [e,c]_k, " + std::to_string(shellable) +
              " shellable, orders re-verified by definition: " + std::to_string(verified) + bad};
}

// Noncrossing partitions of [n] under refinement, from scratch.
Poset nc_oracle(int n) {
  std::vector<std::vector<int>> parts;  // block index per point
  std::vector<int> rgs(n, 0);
  std::function<void(int, int)> grow = [&](int i, int blocks) {
    if (i == n) {
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          for (int c = b + 1; c < n; ++c)
            for (int d = c + 1; d < n; ++d)
              if (rgs[a] == rgs[c] && rgs[b] == rgs[d] && rgs[a] != rgs[b]) return;
      parts.push_back(rgs);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[i] = b;
      grow(i + 1, std::max(blocks, b + 1));
    }
  };
  grow(0, 0);
  return Poset::from_predicate(parts.size(), [&](int u, int v) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (parts[u][a] == parts[u][b] && parts[v][a] != parts[v][b]) return false;
    return true;
  });
}

Result c12() {
  const auto s4 = full_group(CoxeterMatrix::parse("A3"));
  const auto abs = k_absolute_poset(k_absolute_length_all(reflections_in_ball(s4), 2));
  const Poset nc = nc_oracle(4);
  int ok = 0, total = 0;
  for (ElementId c : coxeter_elements(s4)) {
    ++total;
    const Poset iv = abs.poset.interval(s4.identity(), c);
    const auto iso = poset_isomorphic(iv, nc);
    if (!iso.isomorphic || iv.size() != 14) continue;
    std::set<int> image(iso.bijection.begin(), iso.bijection.end());
    bool witnessed = image.size() == nc.size();
    for (int u = 0; witnessed && u < static_cast<int>(iv.size()); ++u)
      for (int v = 0; v < static_cast<int>(iv.size()); ++v)
        witnessed = witnessed && iv.leq(u, v) == nc.leq(iso.bijection[u], iso.bijection[v]);
    ok += witnessed;
  }
  // s0 and s2 commute, so the 6 orderings give 4 distinct elements.
  return {ok == total && total == 4 && nc.size() == 14,
          std::to_string(ok) + "/" + std::to_string(total) + " Coxeter elements c with [e,c]_a = NC4 (" +
              std::to_string(nc.size()) + " elements), bijection verified"};
}

Result c13() {
  const auto s4 = full_group(CoxeterMatrix::parse("A3"));
  const auto table = reflections_in_ball(s4);
  bool sperner = true;
  for (int k = 0; k <= 2; ++k) sperner = sperner && strong_sperner_check(k_intermediate_poset(table, k)).strongly_sperner;
  std::mt19937 rng(13);
  int posets = 0, mismatches = 0;
  for (int n = 1; n <= 20; ++n)
    for (int rep = 0; rep < (n <= 12 ? 8 : 2); ++rep) {
      std::bernoulli_distribution coin(0.08 + 0.04 * rep);
      std::vector<std::pair<int, int>> arcs;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (coin(rng)) arcs.emplace_back(i, j);
      const Poset p = Poset::from_arcs(n, arcs);
      const auto brute = oracle::brute_h_families(p);
      for (int h = 1; h <= p.height(); ++h) mismatches += max_h_family(p, h).size != brute[h];
      ++posets;
    }
  return {sperner && mismatches == 0, std::string("S4 L^0..L^2 strongly Sperner: ") + (sperner ? "yes" : "no") +
                                          "; flow = brute force on " + std::to_string(posets) +
                                          " random posets (<= 20 nodes), mismatches " + std::to_string(mismatches)};
}

Result c14() {
  std::string bad;
  const auto types = type_range({"A3", "B3"}, 2, 8);
  for (const auto& type : types) {
    const auto cm = CoxeterMatrix::parse(type);
    BallOptions tits, model;
    tits.backend = BallBackend::kTits;
    model.backend = BallBackend::kModel;
    const auto cmp = compare_balls(full_group(cm, tits), full_group(cm, model));
    if (!cmp.equal) bad += " " + type + ": " + cmp.first_difference;
  }
  return {bad.empty(), std::to_string(types.size()) + " types, Tits rewriting = combinatorial model" + bad};
}

Result c15() {
  std::mt19937 rng(15);
  int edges = 0, bad = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 4 + trial % 6;
    std::bernoulli_distribution coin(0.45);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) e.emplace_back(i, j);
    const auto g = graph_from_edges(n, e);
    for (const auto& [x, y] : g.edges()) {
      if (g.adjacency[x].size() > 5 || g.adjacency[y].size() > 5) continue;
      const auto r = ollivier_ricci_edge(g, x, y);
      const auto back = ollivier_ricci_edge(g, y, x);
      std::map<int, Rational> out, in;
      for (const auto& t : r.plan) {
        out[t.from] += t.mass;
        in[t.to] += t.mass;
      }
      bool marginals = out.size() == g.adjacency[x].size() && in.size() == g.adjacency[y].size();
      for (const auto& [u, m] : out) marginals = marginals && m == Rational(1, static_cast<std::int64_t>(g.adjacency[x].size()));
      for (const auto& [v, m] : in) marginals = marginals && m == Rational(1, static_cast<std::int64_t>(g.adjacency[y].size()));
      bad += !(marginals && r.kappa == back.kappa && r.w1 == oracle::brute_w1(g, x, y));
      ++edges;
    }
  }
  return {bad == 0 && edges > 200, std::to_string(edges) +
                                       " edges: marginals, symmetry and brute-force transport agree; no reference "
                                       "curvature value exists to compare against"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double budget_secs;  // 0: no budget
    std::function<Result()> run;
  };
  const std::vector<Criterion> criteria{
      {1, 1, c1},    {2, 1, c2},    {3, 30, c3},   {4, 0, c4},    {5, 300, c5},
      {6, 0, c6},    {7, 0, c7},    {8, 0, c8},    {9, 0, c9},    {10, 1800, c10},
      {11, 0, c11},  {12, 0, c12},  {13, 0, c13},  {14, 0, c14},  {15, 0, c15}};
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.budget_secs == 0 || secs < c.budget_secs;
    std::string status;
    if (r.pass && in_time)
      status = "PASS";
    else if (!r.pass && r.known_red && in_time)
      status = "RED ";
    else
      status = "FAIL";
    failed += status == "FAIL";
    char timing[64];
    if (c.budget_secs > 0)
      std::snprintf(timing, sizeof timing, "%.3fs < %.0fs", secs, c.budget_secs);
    else
      std::snprintf(timing, sizeof timing, "%.3fs", secs);
    std::printf("criterion %2d %s [%s] %s\n", c.id, status.c_str(), timing, r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d unexpected failure(s); RED marks a documented, expected failure\n", failed);
  return failed == 0 ? 0 : 1;
}
