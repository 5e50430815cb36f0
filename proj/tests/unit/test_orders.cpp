#include <doctest.h>

#include <map>
#include <set>

#include "coxkit/errors.hpp"
#include "coxkit/orders.hpp"
#include "unit/oracles.hpp"

using namespace coxkit;

namespace {

std::string one_line(const GroupBall& ball, ElementId w) {
  std::string out;
  for (int v : oracle::perm_of_word(ball.normal_form(w), ball.rank() + 1)) out += std::to_string(v);
  return out;
}

// Position-swap one-line notation: left multiplication by a reflection swaps
// positions, i.e. the inverse of perm_of_word.
std::string position_label(const GroupBall& ball, ElementId w) { return one_line(ball, ball.inverse(w)); }

ElementId by_one_line(const GroupBall& ball, const std::string& p) {
  for (ElementId w = 0; w < static_cast<ElementId>(ball.size()); ++w)
    if (one_line(ball, w) == p) return w;
  throw std::runtime_error("no element " + p);
}

// Tableau criterion: u <= v iff u[i,j] <= v[i,j] for all i, j, where
// w[i,j] = #{a <= i : w(a) >= j}.
bool tableau_leq(const oracle::Perm& u, const oracle::Perm& v) {
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
}

Poset pentagon() {
  // 0 < 1 < 2 < 4 and 0 < 3 < 4.
  return Poset::from_arcs(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

}  // namespace

TEST_CASE("poset basics") {
  const Poset p = pentagon();
  CHECK(p.size() == 5);
  CHECK(p.cover_count() == 5);
  CHECK(p.leq(0, 4));
  CHECK_FALSE(p.leq(1, 3));
  CHECK(p.bottom() == 0);
  CHECK(p.top() == 4);
  CHECK(p.height() == 4);
  CHECK(p.relation_size() == 8);
  CHECK(p.interval(0, 2).size() == 3);
  CHECK(p.interval(1, 1).size() == 1);
  CHECK_THROWS_AS(p.interval(1, 3), DomainError);
  CHECK_THROWS_AS(Poset::from_arcs(2, {{0, 1}, {1, 0}}), ValidationError);

  // Closure followed by reduction leaves the relation unchanged.
  std::vector<Bitset> rel(5, Bitset(5));
  for (int u = 0; u < 5; ++u)
    for (int v = 0; v < 5; ++v)
      if (p.leq(u, v)) rel[u].set(v);
  std::vector<std::pair<int, int>> covers = p.cover_edges();
  CHECK(Poset::from_arcs(5, covers).same_relation(p));
  CHECK(Poset::from_relation(rel).same_relation(p));
  CHECK(Poset::from_relation(rel).was_transitive);

  const Poset chain_by_covers = Poset::from_predicate(3, [](int u, int v) { return v == u + 1; });
  CHECK_FALSE(chain_by_covers.was_transitive);
  CHECK(chain_by_covers.leq(0, 2));
}

TEST_CASE("gradedness checks") {
  const Poset n5 = pentagon();
  CHECK_FALSE(is_graded(n5).graded);
  CHECK(is_graded(n5).witness == std::pair<int, int>{0, 4});
  CHECK_FALSE(check_graded(n5, {0, 1, 2, 1, 3}).graded);

  // The four-element N poset (a < c, b < c, b < d) is graded by height.
  const Poset n4 = Poset::from_arcs(4, {{0, 2}, {1, 2}, {1, 3}});
  CHECK(is_graded(n4).graded);
  CHECK(check_graded(n4, {0, 0, 1, 1}).graded);

  const auto ball = full_group(CoxeterMatrix::parse("A3"));
  const auto table = reflections_in_ball(ball);
  for (int k = 0; k <= 3; ++k) {
    const Poset p = k_intermediate_poset(table, k);
    CHECK(check_graded(p, *p.rank).graded);
    CHECK(is_graded(p).graded);
  }
}

TEST_CASE("omega graphs") {
  const auto s4 = full_group(CoxeterMatrix::parse("A3"));
  const auto table = reflections_in_ball(s4);

  const auto g0 = omega_graph(s4, t_k_set(table, 0));
  for (const auto& arc : g0.arcs) CHECK(s4.length(arc.to) == s4.length(arc.from) + 1);
  CHECK(g0.arcs.size() == 36);  // 24 * 3 / 2 weak-order covers

  // Bruhat graph arcs: pairs (u, t) with l(tu) > l(u), by permutations.
  std::size_t expected = 0;
  for (const auto& u : oracle::all_perms(4))
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) {
        oracle::Perm tu = u;
        for (int& x : tu) x = x == i ? j : x == j ? i : x;
        expected += oracle::inversions(tu) > oracle::inversions(u);
      }
  const auto gt = omega_graph(s4, table.reflections);
  CHECK(gt.arcs.size() == expected);
  for (const auto& arc : gt.arcs) CHECK(s4.multiply(arc.label, arc.from) == arc.to);

  const auto a1 = full_group(CoxeterMatrix::parse("A1"));
  const auto g1 = omega_graph(a1, reflections_in_ball(a1).reflections);
  REQUIRE(g1.arcs.size() == 1);
  CHECK(g1.arcs[0].from == 0);

  const auto partial = GroupBall::enumerate(CoxeterMatrix::parse("~A2"), 4);
  const auto pt = reflections_in_ball(partial);
  CHECK(omega_graph(partial, t_k_set(pt, 1)).boundary_arcs > 0);
}

TEST_CASE("intermediate orders on S4") {
  const auto s4 = full_group(CoxeterMatrix::parse("A3"));
  const auto table = reflections_in_ball(s4);
  const Poset l0 = k_intermediate_poset(table, 0);
  const Poset l1 = k_intermediate_poset(table, 1);
  const Poset l2 = k_intermediate_poset(table, 2);
  const Poset bruhat = bruhat_poset(s4);

  CHECK(l0.same_relation(left_weak_poset(s4)));
  CHECK(l2.same_relation(bruhat));
  CHECK_FALSE(l1.same_relation(bruhat));
  CHECK(bruhat.contains_relation(l1));
  CHECK(l1.contains_relation(l0));

  for (ElementId u = 0; u < 24; ++u)
    for (ElementId v = 0; v < 24; ++v)
      CHECK(bruhat.leq(u, v) == tableau_leq(oracle::perm_of_word(s4.normal_form(u), 4),
                                            oracle::perm_of_word(s4.normal_form(v), 4)));

  const std::set<std::pair<std::string, std::string>> expected = {
      {"1234", "1243"}, {"1234", "1324"}, {"1234", "2134"}, {"1243", "1342"}, {"1243", "1423"},
      {"1243", "2143"}, {"1324", "1342"}, {"1324", "1423"}, {"1324", "2314"}, {"1324", "3124"},
      {"1342", "1432"}, {"1342", "3142"}, {"1423", "1432"}, {"1423", "2413"}, {"1423", "4123"},
      {"1432", "3412"}, {"1432", "4132"}, {"2134", "2143"}, {"2134", "2314"}, {"2134", "3124"},
      {"2143", "2341"}, {"2143", "2413"}, {"2143", "4123"}, {"2314", "2341"}, {"2314", "2413"},
      {"2314", "3214"}, {"2341", "2431"}, {"2341", "3241"}, {"2413", "2431"}, {"2413", "4213"},
      {"2431", "3421"}, {"2431", "4231"}, {"3124", "3142"}, {"3124", "3214"}, {"3142", "3241"},
      {"3142", "3412"}, {"3142", "4132"}, {"3214", "3241"}, {"3214", "3412"}, {"3241", "3421"},
      {"3241", "4231"}, {"3412", "3421"}, {"3412", "4312"}, {"3421", "4321"}, {"4123", "4132"},
      {"4123", "4213"}, {"4132", "4231"}, {"4132", "4312"}, {"4213", "4231"}, {"4213", "4312"},
      {"4231", "4321"}, {"4312", "4321"}};
  std::set<std::pair<std::string, std::string>> covers;
  for (const auto& [u, v] : l1.cover_edges()) covers.emplace(position_label(s4, u), position_label(s4, v));
  CHECK(covers.size() == 52);
  CHECK(covers == expected);
}

TEST_CASE("k-absolute length") {
  const auto s4 = full_group(CoxeterMatrix::parse("A3"));
  const auto table = reflections_in_ball(s4);
  const auto l0 = k_absolute_length_all(table, 0);
  for (ElementId w = 0; w < 24; ++w) CHECK(l0.lk[w] == s4.length(w));

  const auto l1 = k_absolute_length_all(table, 1);
  CHECK(l1.lk[by_one_line(s4, "2413")] == 3);
  CHECK(l1.lk[by_one_line(s4, "3142")] == 3);
  CHECK(l1.lk[by_one_line(s4, "4321")] == 4);
  // Witness words multiply back to the element.
  for (ElementId w = 0; w < 24; ++w) {
    const auto path = l1.witness(w);
    CHECK(static_cast<int>(path.size()) == l1.lk[w]);
    ElementId x = s4.identity();
    for (ElementId t : path) {
      const ElementId y = s4.multiply(t, x);
      CHECK(s4.length(y) > s4.length(x));
      CHECK(s4.length(t) <= 3);
      x = y;
    }
    CHECK(x == w);
  }

  for (const char* name : {"B3", "H3", "~A2", "A4"}) {
    CAPTURE(name);
    const auto cm = CoxeterMatrix::parse(name);
    const auto ball = cm.is_finite() ? full_group(cm) : GroupBall::enumerate(cm, 9);
    const auto tab = reflections_in_ball(ball);
    for (int k = 0; k <= 4; ++k) {
      const auto lk = k_absolute_length_all(tab, k);
      for (ElementId w = 0; w < static_cast<ElementId>(ball.size()); ++w) {
        CHECK(lk.lk[w] <= ball.length(w));
        CHECK(lk.lk[w] * (2 * k + 1) >= ball.length(w));
      }
    }
  }
  const auto partial = GroupBall::enumerate(CoxeterMatrix::parse("~A2"), 4);
  CHECK_THROWS_AS(k_absolute_length_all(reflections_in_ball(partial), 2), OutOfBallError);
}

TEST_CASE("k-absolute orders") {
  const auto s4 = full_group(CoxeterMatrix::parse("A3"));
  const auto table = reflections_in_ball(s4);
  const auto a1 = k_absolute_poset(k_absolute_length_all(table, 1));
  CHECK(a1.flagged_pairs == 0);
  std::set<std::string> maxima;
  for (int u : a1.poset.maximal_elements()) maxima.insert(one_line(s4, u));
  CHECK(maxima == std::set<std::string>{"2413", "3142", "4321"});
  for (ElementId w = 0; w < 24; ++w) CHECK(a1.poset.leq(s4.identity(), w));

  const auto a0 = k_absolute_poset(k_absolute_length_all(table, 0));
  CHECK(a0.poset.same_relation(left_weak_poset(s4)));

  // Absolute order: rank sizes 1, 6, 11, 6 (Stirling numbers of the first kind).
  const auto abs = k_absolute_poset(k_absolute_length_all(table, 2));
  CHECK(rank_sizes(abs.poset) == std::vector<std::size_t>{1, 6, 11, 6});

  const auto partial = GroupBall::enumerate(CoxeterMatrix::parse("~A2"), 6);
  const auto pa = k_absolute_poset(k_absolute_length_all(reflections_in_ball(partial), 1));
  CHECK(pa.flagged_pairs > 0);
  CHECK(pa.suggested_radius >= 12);
}

TEST_CASE("intervals") {
  const auto a2 = full_group(CoxeterMatrix::parse("A2"));
  const Poset weak = left_weak_poset(a2);
  const ElementId st = a2.locate(parse_word("s0s1"));
  const Poset chain = weak.interval(a2.identity(), st);
  CHECK(chain.size() == 3);
  CHECK(chain.height() == 3);
  CHECK_THROWS_AS(weak.interval(st, a2.locate(parse_word("s1s0"))), DomainError);

  const auto s4 = full_group(CoxeterMatrix::parse("A3"));
  const Poset l1 = k_intermediate_poset(reflections_in_ball(s4), 1);
  const ElementId c = s4.locate(parse_word("s0s1s2"));
  const Poset iv = l1.interval(s4.identity(), c);
  std::size_t expected = 0;
  for (ElementId z = 0; z < 24; ++z) expected += l1.leq(s4.identity(), z) && l1.leq(z, c);
  CHECK(iv.size() == expected);
  for (std::size_t a = 0; a < iv.size(); ++a)
    for (std::size_t b = 0; b < iv.size(); ++b) CHECK(iv.leq(a, b) == l1.leq(iv.origin[a], iv.origin[b]));
}

TEST_CASE("refinement chain") {
  const auto s4 = full_group(CoxeterMatrix::parse("A3"));
  const auto r = refinement_chain_check(reflections_in_ball(s4), 2);
  CHECK(r.ok);
  CHECK(r.equals_bruhat == std::vector<bool>{false, false, true});
  CHECK(std::is_sorted(r.relation_sizes.begin(), r.relation_sizes.end()));

  const auto b3 = full_group(CoxeterMatrix::parse("B3"));
  const auto rb = refinement_chain_check(reflections_in_ball(b3), 4);
  CHECK(rb.ok);
  CHECK(rb.equals_bruhat.back());
  CHECK(refinement_chain_check(reflections_in_ball(b3), 0).ok);
}

TEST_CASE("covers of <=_{L^X} have length gap one for ideals X") {
  for (const char* name : {"A3", "I2(5)", "I2(6)"}) {
    CAPTURE(name);
    const auto ball = full_group(CoxeterMatrix::parse(name));
    const auto table = reflections_in_ball(ball);
    const Poset tp = t_order_poset(table);
    for (const auto& ideal : order_ideals(tp)) {
      std::vector<ElementId> X;
      for (int u : ideal) X.push_back(tp.origin[u]);
      const Poset p = intermediate_poset(ball, X);
      for (const auto& [u, v] : p.cover_edges()) CHECK(ball.length(v) == ball.length(u) + 1);
    }
  }
}
