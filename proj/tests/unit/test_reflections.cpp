#include <doctest.h>

#include <algorithm>
#include <deque>
#include <set>

#include "coxkit/errors.hpp"
#include "coxkit/reflections.hpp"
#include "unit/oracles.hpp"

using namespace coxkit;

namespace {

ElementId at(const GroupBall& ball, std::string_view word) { return ball.locate(parse_word(word)); }

std::set<std::pair<std::string, std::string>> labelled_covers(const Poset& p) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [u, v] : p.cover_edges()) out.emplace(p.label(u), p.label(v));
  return out;
}

// Subgroup generated by some elements, by closure over a finite group.
std::set<ElementId> closure_of(const GroupBall& ball, const std::vector<ElementId>& gens) {
  std::set<ElementId> seen{ball.identity()};
  std::deque<ElementId> queue{ball.identity()};
  while (!queue.empty()) {
    const ElementId x = queue.front();
    queue.pop_front();
    for (ElementId g : gens) {
      const ElementId y = ball.multiply(g, x);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return seen;
}

// S' = {r in T ∩ W' : N(r) ∩ W' = {r}}, with N(v) = {t : l(tv) < l(v)}.
std::set<ElementId> canonical_by_definition(const GroupBall& ball, const ReflectionTable& table,
                                            const std::set<ElementId>& sub) {
  std::set<ElementId> out;
  for (ElementId r : table.reflections) {
    if (!sub.count(r)) continue;
    bool only_self = true;
    for (ElementId t : table.reflections)
      if (t != r && sub.count(t) && ball.length(ball.multiply(t, r)) < ball.length(r))
        only_self = false;
    if (only_self) out.insert(r);
  }
  return out;
}

std::set<ElementId> closure_of(const GroupBall& ball, ElementId a, ElementId b) {
  return closure_of(ball, std::vector<ElementId>{a, b});
}

// The largest reflection subgroup containing t and t2 with two canonical
// generators: generated by every r for which <t, t2, r> is still dihedral.
std::set<ElementId> maximal_dihedral(const GroupBall& ball, const ReflectionTable& table,
                                     ElementId t, ElementId t2) {
  std::vector<ElementId> gens{t, t2};
  for (ElementId r : table.reflections) {
    const auto sub = closure_of(ball, {t, t2, r});
    if (canonical_by_definition(ball, table, sub).size() == 2) gens.push_back(r);
  }
  return closure_of(ball, gens);
}

// t ⊑' t2 by reachability from t to t2 in the Bruhat graph restricted to a
// dihedral reflection subgroup: arrows x -> rx, r in W' ∩ T, l(rx) > l(x).
bool omega_reachable(const GroupBall& ball, const ReflectionTable& table, ElementId t, ElementId t2) {
  if (t == t2) return true;
  const auto sub = maximal_dihedral(ball, table, t, t2);
  std::set<ElementId> seen{t};
  std::deque<ElementId> queue{t};
  while (!queue.empty()) {
    const ElementId x = queue.front();
    queue.pop_front();
    if (x == t2) return true;
    for (ElementId r : table.reflections) {
      if (!sub.count(r)) continue;
      const ElementId y = ball.multiply(r, x);
      if (ball.length(y) > ball.length(x) && seen.insert(y).second) queue.push_back(y);
    }
  }
  return false;
}

}  // namespace

TEST_CASE("reflection counts") {
  const auto a3 = full_group(CoxeterMatrix::parse("A3"));
  const auto t = reflections_in_ball(a3);
  CHECK(t.reflections.size() == 6);
  for (ElementId r : t.reflections) {
    CHECK(a3.multiply(r, r) == a3.identity());
    CHECK(a3.length(r) % 2 == 1);
    const Word& nf = a3.normal_form(r);
    Word rev(nf.rbegin(), nf.rend());
    CHECK(a3.locate(rev) == r);
  }
  CHECK(reflections_in_ball(full_group(CoxeterMatrix::parse("B3"))).reflections.size() == 9);
  CHECK(reflections_in_ball(full_group(CoxeterMatrix::parse("H3"))).reflections.size() == 15);
  CHECK(reflections_in_ball(full_group(CoxeterMatrix::parse("D4"))).reflections.size() == 12);
  CHECK(reflections_in_ball(full_group(CoxeterMatrix::parse("I2(7)"))).reflections.size() == 7);

  // Transpositions of S_5 are the involutions with exactly one 2-cycle.
  const auto a4 = full_group(CoxeterMatrix::parse("A4"));
  const auto t4 = reflections_in_ball(a4);
  std::size_t transpositions = 0;
  for (ElementId w = 0; w < static_cast<ElementId>(a4.size()); ++w) {
    const auto p = oracle::perm_of_word(a4.normal_form(w), 5);
    int moved = 0;
    bool involution = true;
    for (int i = 0; i < 5; ++i) {
      moved += p[i] != i + 1;
      involution = involution && p[p[i] - 1] == i + 1;
    }
    const bool is_t = involution && moved == 2;
    transpositions += is_t;
    CHECK(is_t == t4.is_reflection(w));
  }
  CHECK(transpositions == 10);
}

TEST_CASE("T_k slices") {
  const auto b3 = full_group(CoxeterMatrix::parse("B3"));
  const auto table = reflections_in_ball(b3);
  const auto t0 = t_k_set(table, 0);
  CHECK(t0 == std::vector<ElementId>{b3.generator(0), b3.generator(1), b3.generator(2)});
  const auto t1_list = t_k_set(table, 1);
  std::set<ElementId> t1(t1_list.begin(), t1_list.end());
  std::set<ElementId> expected;
  for (const char* w : {"s0", "s1", "s2", "s0s1s0", "s1s0s1", "s1s2s1"}) expected.insert(at(b3, w));
  CHECK(t1 == expected);
  for (int a = 0; a < 5; ++a)
    for (int b = a; b < 5; ++b) {
      const auto ta = t_k_set(table, a);
      const auto tb = t_k_set(table, b);
      CHECK(std::includes(tb.begin(), tb.end(), ta.begin(), ta.end()));
    }
  CHECK(t_k_set(table, 10).size() == table.reflections.size());

  for (int n = 2; n <= 6; ++n) {
    const auto ball = full_group(CoxeterMatrix::parse("A" + std::to_string(n - 1)));
    const auto tab = reflections_in_ball(ball);
    for (int k = 0; k <= n; ++k)
      CHECK(t_k_set(tab, k).size() == oracle::binomial(n, 2) - oracle::binomial(n - k - 1, 2));
  }

  const auto partial = GroupBall::enumerate(CoxeterMatrix::parse("~A2"), 4);
  const auto ptab = reflections_in_ball(partial);
  CHECK(t_k_set(ptab, 1).size() == 6);
  CHECK_THROWS_AS(t_k_set(ptab, 2), OutOfBallError);
}

TEST_CASE("dihedral subgroups and canonical generators") {
  const auto a3 = full_group(CoxeterMatrix::parse("A3"));
  const auto table = reflections_in_ball(a3);

  const auto simple = dihedral_subgroup(a3, a3.generator(0), a3.generator(1));
  CHECK(simple.canonical_generators == std::vector<ElementId>{a3.generator(0), a3.generator(1)});
  CHECK(simple.member_ids.size() == 6);
  CHECK(simple.closed);

  const ElementId t13 = at(a3, "s0s1s0");
  const auto sub = dihedral_subgroup(a3, t13, a3.generator(0));
  CHECK(sub.member_ids.size() == 6);
  const std::set<ElementId> members(sub.member_ids.begin(), sub.member_ids.end());
  CHECK(members == closure_of(a3, t13, a3.generator(0)));
  const auto by_def = canonical_by_definition(a3, table, members);
  CHECK(std::set<ElementId>(sub.canonical_generators.begin(), sub.canonical_generators.end()) == by_def);

  // Every pair in A3 and B3 against the definition of canonical generators.
  for (const char* name : {"A3", "B3"}) {
    const auto ball = full_group(CoxeterMatrix::parse(name));
    const auto tab = reflections_in_ball(ball);
    for (ElementId x : tab.reflections)
      for (ElementId y : tab.reflections) {
        if (x == y) continue;
        const auto d = dihedral_subgroup(ball, x, y);
        const auto cl = closure_of(ball, x, y);
        CHECK(std::set<ElementId>(d.member_ids.begin(), d.member_ids.end()) == cl);
        CHECK(std::set<ElementId>(d.canonical_generators.begin(), d.canonical_generators.end()) ==
              canonical_by_definition(ball, tab, cl));
      }
  }

  // Infinite dihedral: <s, sts> = W, so its canonical generators are {s, t}.
  const auto dinf = GroupBall::enumerate(CoxeterMatrix::parse("I2(inf)"), 7);
  const auto whole = dihedral_subgroup(dinf, at(dinf, "s0"), at(dinf, "s0s1s0"));
  CHECK(whole.canonical_generators == std::vector<ElementId>{at(dinf, "s0"), at(dinf, "s1")});
  CHECK_FALSE(whole.closed);
  // <s, tst> is proper, with canonical generators {s, tst}.
  const auto proper = dihedral_subgroup(dinf, at(dinf, "s0"), at(dinf, "s1s0s1"));
  CHECK(proper.canonical_generators == std::vector<ElementId>{at(dinf, "s0"), at(dinf, "s1s0s1")});
  CHECK(proper.contains(at(dinf, "s0s1s0s1")));
  CHECK_FALSE(proper.contains(at(dinf, "s1")));
  CHECK(proper.internal_length_of(at(dinf, "s0s1s0s1s0")) == 3);

  const auto small = GroupBall::enumerate(CoxeterMatrix::parse("I2(inf)"), 3);
  CHECK_THROWS_AS(dihedral_subgroup(small, at(small, "s0"), at(small, "s1s0s1")), OutOfBallError);
  CHECK_THROWS_AS(dihedral_subgroup(small, at(small, "s0"), at(small, "s0")), ValidationError);
  CHECK_THROWS_AS(dihedral_subgroup(dinf, at(dinf, "s0"), at(dinf, "s0s1")), ValidationError);
}

TEST_CASE("(T, ⊑) reproduces the A3 and B3 diagrams") {
  const auto a3 = full_group(CoxeterMatrix::parse("A3"));
  const auto pa = t_order_poset(reflections_in_ball(a3));
  CHECK(pa.size() == 6);
  const std::set<std::pair<std::string, std::string>> a3_covers = {
      {"s0", "s0s1s0"}, {"s1", "s0s1s0"}, {"s1", "s1s2s1"}, {"s2", "s1s2s1"},
      {"s0s1s0", "s0s1s2s1s0"}, {"s1s2s1", "s0s1s2s1s0"}};
  CHECK(labelled_covers(pa) == a3_covers);

  const auto b3 = full_group(CoxeterMatrix::parse("B3"));
  const auto pb = t_order_poset(reflections_in_ball(b3));
  CHECK(pb.size() == 9);
  auto name = [&](std::string_view w) { return b3.label(at(b3, w)); };
  const std::string a1 = name("s1s0s1s2s1s0s1"), b1 = name("s0s1s2s1s0"), b2 = name("s2s1s0s1s2");
  const std::string c1 = name("s0s1s0"), c2 = name("s1s0s1"), c3 = name("s1s2s1");
  const std::set<std::pair<std::string, std::string>> b3_covers = {
      {b1, a1}, {c2, a1}, {c1, b1}, {c3, b1}, {c2, b2}, {c3, b2},
      {"s0", c1}, {"s1", c1}, {"s0", c2}, {"s1", c2}, {"s1", c3}, {"s2", c3}};
  CHECK(labelled_covers(pb) == b3_covers);

  const auto a1g = full_group(CoxeterMatrix::parse("A1"));
  const auto p1 = t_order_poset(reflections_in_ball(a1g));
  CHECK(p1.size() == 1);
  CHECK(p1.relation_size() == 0);
}

TEST_CASE("plane of a reflection pair") {
  const auto b3 = full_group(CoxeterMatrix::parse("B3"));
  const auto tab = reflections_in_ball(b3);
  // s0 and s1s0s1 commute, but both lie in the B2 plane of s0 and s1.
  const auto plane = dihedral_reflections(tab, at(b3, "s0"), at(b3, "s1s0s1"));
  CHECK(plane.size() == 4);
  CHECK(std::find(plane.begin(), plane.end(), at(b3, "s1")) != plane.end());
  CHECK(t_order_generating(tab, at(b3, "s0"), at(b3, "s1s0s1")));
  CHECK_FALSE(t_order_generating(tab, at(b3, "s1s0s1"), at(b3, "s0")));
  CHECK_FALSE(t_order_generating(tab, at(b3, "s2"), at(b3, "s0s1s2s1s0")) ==
              t_order_generating(tab, at(b3, "s1"), at(b3, "s0s1s2s1s0")));
}

TEST_CASE("generating relation against directed paths in the subgroup graph") {
  for (const char* name : {"A3", "B3", "I2(6)", "H3"}) {
    CAPTURE(name);
    const auto ball = full_group(CoxeterMatrix::parse(name));
    const auto tab = reflections_in_ball(ball);
    for (ElementId x : tab.reflections)
      for (ElementId y : tab.reflections)
        CHECK(t_order_generating(tab, x, y) == omega_reachable(ball, tab, x, y));
  }
}

TEST_CASE("(T, ⊑) embeds in Bruhat order and T_k are ideals") {
  for (const char* name : {"A3", "B3", "A4", "H3", "D4", "I2(8)"}) {
    CAPTURE(name);
    const auto ball = full_group(CoxeterMatrix::parse(name));
    const auto tab = reflections_in_ball(ball);
    const auto p = t_order_poset(tab);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j)
        if (p.leq(i, j)) CHECK(ball.bruhat_leq(p.origin[i], p.origin[j]));
    for (int k = 0; k <= ball.radius() / 2; ++k) {
      std::vector<int> nodes;
      for (ElementId t : t_k_set(tab, k)) nodes.push_back(static_cast<int>(tab.index_of(t)));
      CHECK(is_order_ideal(p, nodes));
    }
    CHECK(is_order_ideal(p, {}));
    // s < t in Bruhat with t in an ideal X forces s in X.
    for (const auto& ideal : order_ideals(p)) {
      std::set<ElementId> in;
      for (int u : ideal) in.insert(p.origin[u]);
      for (ElementId t : in)
        for (Generator s = 0; s < ball.rank(); ++s)
          if (ball.bruhat_leq(ball.generator(s), t)) CHECK(in.count(ball.generator(s)));
    }
  }
  const auto a3 = full_group(CoxeterMatrix::parse("A3"));
  const auto tab = reflections_in_ball(a3);
  const auto p = t_order_poset(tab);
  CHECK_FALSE(is_order_ideal(p, {static_cast<int>(tab.index_of(at(a3, "s0s1s0")))}));
}

TEST_CASE("order ideals enumeration") {
  const auto a3 = full_group(CoxeterMatrix::parse("A3"));
  const auto p = t_order_poset(reflections_in_ball(a3));
  const auto ideals = order_ideals(p);
  // Brute force over all subsets.
  std::size_t count = 0;
  for (int mask = 0; mask < (1 << p.size()); ++mask) {
    std::vector<int> nodes;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (mask >> i & 1) nodes.push_back(static_cast<int>(i));
    count += is_order_ideal(p, nodes);
  }
  CHECK(ideals.size() == count);
  for (const auto& x : ideals) CHECK(is_order_ideal(p, x));
  CHECK(ideals.front().empty());
  CHECK(ideals.back().size() == p.size());
  CHECK_THROWS_AS(order_ideals(p, 3), ResourceError);
}

TEST_CASE("(T, ⊑) restricted to short reflections is stable in the radius") {
  for (const char* name : {"~A2", "I2(inf)", "~C2"}) {
    CAPTURE(name);
    const auto cm = CoxeterMatrix::parse(name);
    const auto small = GroupBall::enumerate(cm, 10);
    const auto large = GroupBall::enumerate(cm, 14);
    const auto ts = reflections_in_ball(small);
    const auto tl = reflections_in_ball(large);
    const auto ps = t_order_poset(ts, 5);
    const auto pl = t_order_poset(tl, 5);
    REQUIRE(ps.size() == pl.size());
    CHECK(ps.labels == pl.labels);
    CHECK(ps.same_relation(pl));
    CHECK(order_ideals(ps).size() == order_ideals(pl).size());
  }
}
