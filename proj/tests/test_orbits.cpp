#include <doctest.h>

#include "borbit/checks.hpp"

#include <algorithm>

using namespace borbit;

namespace {

Vec tuple(std::initializer_list<Int> v) {
  Vec out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (Int x : v) out[i++] = x;
  return out;
}

struct C2Fixture {
  RootSystem rs = build_root_system('C', 2);
  HermitianContext ctx = build_hermitian_context(rs, 1);
  ParabolicQuotient q = enumerate_WP(ctx);
  HermitianOrbits orb = enumerate_hermitian(q);
  BruhatCache cache{rs};
  int alpha2 = rs.index_of(tuple({0, 1}));
  int eta = rs.index_of(tuple({1, 1}));
  int theta = rs.index_of(tuple({2, 1}));

  int pair_of(std::vector<int> word, std::vector<int> roots) const {
    int v = -1;
    for (int i = 0; i < q.size(); ++i)
      if (q.elements[i].word == word) v = i;
    REQUIRE(v >= 0);
    std::sort(roots.begin(), roots.end());
    int id = orb.pair_id(v, roots);
    REQUIRE(id >= 0);
    return id;
  }
};

}  // namespace

TEST_CASE("nilradical enumeration lists all orthogonal subsets") {
  C2Fixture f;
  std::vector<OrthogonalSet> sets = enumerate_nilradical(f.ctx);
  REQUIRE(sets.size() == 5);
  CHECK(sets[0].roots.empty());
  CHECK(sets[1].roots == std::vector<int>{f.alpha2});
  CHECK(sets[2].roots == std::vector<int>{f.eta});
  CHECK(sets[3].roots == std::vector<int>{f.theta});
  CHECK(sets[4].roots == (std::vector<int>{f.alpha2, f.theta}));

  RootSystem a3 = build_root_system('A', 3);
  CHECK(enumerate_nilradical(build_hermitian_context(a3, 1)).size() == 7);

  RootSystem a1 = build_root_system('A', 1);
  CHECK(enumerate_nilradical(build_hermitian_context(a1, 0)).size() == 2);
}

TEST_CASE("hermitian enumeration lists all admissible pairs") {
  C2Fixture f;
  CHECK(f.orb.size() == 11);

  RootSystem a1 = build_root_system('A', 1);
  HermitianOrbits orb1 =
      enumerate_hermitian(enumerate_WP(build_hermitian_context(a1, 0)));
  REQUIRE(orb1.size() == 3);
  CHECK(orb1.pairs[0].v == 0);
  CHECK(orb1.pairs[0].S.roots.empty());
  CHECK(orb1.pairs[1].v == 1);
  CHECK(orb1.pairs[1].S.roots.empty());
  CHECK(orb1.pairs[2].v == 1);
  CHECK(orb1.pairs[2].S.roots == std::vector<int>{0});

  RootSystem a2 = build_root_system('A', 2);
  HermitianOrbits orb2 =
      enumerate_hermitian(enumerate_WP(build_hermitian_context(a2, 0)));
  CHECK(checks::enumeration_consistency(orb2).ok());
  Check brute = checks::enumeration_brute_force(orb2);  // subset count oracle
  CHECK(brute.ok());
  CHECK(brute.skipped_reason.empty());
}

TEST_CASE("fiber enumeration by induction on the length") {
  C2Fixture f;
  WeylElement s1s2 = from_word(f.rs, {0, 1});
  std::vector<OrthogonalSet> sets = enumerate_fiber_inductive(f.q, s1s2);
  REQUIRE(sets.size() == 3);
  CHECK(sets[0].roots.empty());
  CHECK(sets[1].roots == std::vector<int>{f.alpha2});
  CHECK(sets[2].roots == std::vector<int>{f.eta});

  CHECK(enumerate_fiber_inductive(f.q, identity_element(f.rs)).size() == 1);
  CHECK(enumerate_fiber_inductive(f.q, f.q.elements[f.q.longest]).size() == 5);

  CHECK_THROWS_AS(enumerate_fiber_inductive(f.q, simple_reflection(f.rs, 0)),
                  input_error);
}

TEST_CASE("pair invariants match the worked values") {
  C2Fixture f;
  const AdmissiblePair& p8 = f.orb.pairs[f.pair_of({1, 0, 1}, {f.eta})];
  CHECK(p8.sigma.element == from_word(f.rs, {1, 0, 1}));  // s_eta
  CHECK(f.q.elements[p8.nu].is_identity());
  CHECK(p8.dim == 5);

  const AdmissiblePair& p6 = f.orb.pairs[f.pair_of({1, 0, 1}, {})];
  CHECK(p6.sigma.element.is_identity());
  CHECK(p6.nu == p6.v);
  CHECK(p6.dim == 3);

  const AdmissiblePair& top = f.orb.pairs[f.pair_of({1, 0, 1}, {f.alpha2, f.theta})];
  CHECK(exact_eq(top.sigma.element.m, Mat(-Mat::Identity(2, 2))));
  CHECK(top.dim == 6);

  Check c = checks::pair_invariants(f.orb);
  CHECK(c.ok());
}

TEST_CASE("nilradical dimension formula") {
  C2Fixture f;
  CHECK(nilradical_dim(f.q, OrthogonalSet{{f.alpha2}}) == 2);
  CHECK(nilradical_dim(f.q, OrthogonalSet{{}}) == 0);
  CHECK(nilradical_dim(f.q, OrthogonalSet{{f.alpha2, f.theta}}) == 3);
}

TEST_CASE("raising operator on the worked cases") {
  C2Fixture f;
  int p_s2_a2 = f.pair_of({1}, {f.alpha2});
  CHECK(m_alpha(f.orb, p_s2_a2, 0) == f.pair_of({0, 1}, {f.alpha2}));
  CHECK(m_alpha(f.orb, p_s2_a2, 1) == p_s2_a2);  // lowering direction: stable

  int p_wp_empty = f.pair_of({1, 0, 1}, {});
  CHECK(m_alpha(f.orb, p_wp_empty, 1) == f.pair_of({1, 0, 1}, {f.theta}));
  CHECK(m_alpha(f.orb, p_wp_empty, 0) == p_wp_empty);  // stable candidate

  CHECK_THROWS_AS(m_alpha(f.orb, -1, 0), input_error);
  CHECK_THROWS_AS(m_alpha(f.orb, 0, 5), input_error);
}

TEST_CASE("lowering fibers on the worked cases") {
  C2Fixture f;
  auto sorted = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  std::vector<int> e1 = E_alpha(f.orb, f.pair_of({1}, {f.alpha2}), 1);
  CHECK(sorted(e1) == sorted({f.pair_of({}, {}), f.pair_of({1}, {})}));

  std::vector<int> e2 = E_alpha(f.orb, f.pair_of({1, 0, 1}, {f.theta, f.alpha2}), 0);
  CHECK(e2 == std::vector<int>{f.pair_of({1, 0, 1}, {f.eta})});

  // Raising direction has an empty fiber.
  CHECK(E_alpha(f.orb, f.pair_of({1}, {f.alpha2}), 0).empty());
}

TEST_CASE("pairwise order on the worked cases") {
  C2Fixture f;
  int a = f.pair_of({1}, {f.alpha2});
  int b = f.pair_of({1, 0, 1}, {f.eta});
  CHECK(rr_leq(f.orb, a, b, f.cache));
  CHECK(rr_leq(f.orb, a, a, f.cache));
  CHECK(rr_leq(f.orb, f.pair_of({1, 0, 1}, {f.theta}), b, f.cache));
  CHECK(!rr_leq(f.orb, b, a, f.cache));
}

TEST_CASE("nilradical and fiber orders on the worked cases") {
  C2Fixture f;
  OrthogonalSet empty{{}}, sa{{f.alpha2}}, se{{f.eta}}, st{{f.theta}},
      top{{f.alpha2, f.theta}};
  CHECK(pan_leq(f.q, st, sa, f.cache));
  CHECK(!pan_leq(f.q, sa, st, f.cache));
  CHECK(pan_leq(f.q, empty, sa, f.cache));
  CHECK(pan_leq(f.q, empty, top, f.cache));
  CHECK(!pan_leq(f.q, sa, se, f.cache));
  CHECK(!pan_leq(f.q, se, sa, f.cache));

  const WeylElement& wP = f.q.elements[f.q.longest];
  CHECK(fiber_leq(f.q, wP, st, top, f.cache));
  CHECK(fiber_leq(f.q, wP, sa, sa, f.cache));
  CHECK(!fiber_leq(f.q, wP, sa, se, f.cache));
  CHECK(!fiber_leq(f.q, wP, se, sa, f.cache));
  CHECK_THROWS_AS(fiber_leq(f.q, f.q.elements[1], se, sa, f.cache), input_error);
}

TEST_CASE("generated order equals the pairwise order") {
  C2Fixture f;
  Check c = checks::order_equivalence(f.orb, f.cache, 1);
  CHECK(c.ok());

  // Three orbits over A1: the two closed ones are incomparable minima.
  RootSystem a1 = build_root_system('A', 1);
  HermitianOrbits orb1 =
      enumerate_hermitian(enumerate_WP(build_hermitian_context(a1, 0)));
  OrbitPoset std1 = standard_order(orb1);
  CHECK(std1.covers == (std::vector<std::pair<int, int>>{{0, 2}, {1, 2}}));
  CHECK(!std1.leq_at(0, 1));
  CHECK(!std1.leq_at(1, 0));

  // Four minimal nodes and one maximal node over C2.
  OrbitPoset stdc = standard_order(f.orb);
  int minimal = 0, maximal = 0;
  for (int i = 0; i < stdc.n; ++i) {
    bool is_min = true, is_max = true;
    for (int j = 0; j < stdc.n; ++j) {
      if (j == i) continue;
      if (stdc.leq_at(j, i)) is_min = false;
      if (stdc.leq_at(i, j)) is_max = false;
    }
    minimal += is_min;
    maximal += is_max;
    if (is_max) CHECK(stdc.dims[i] == 6);
  }
  CHECK(minimal == 4);
  CHECK(maximal == 1);
}

TEST_CASE("hasse diagram of the nilradical diamond") {
  C2Fixture f;
  OrbitPoset p = nilradical_order(f.q, enumerate_nilradical(f.ctx), f.cache);
  CHECK(p.dims == (std::vector<int>{0, 2, 2, 1, 3}));
  CHECK(p.covers == (std::vector<std::pair<int, int>>{
                        {0, 3}, {1, 4}, {2, 4}, {3, 1}, {3, 2}}));

  // One-node poset: the fiber over the identity.
  OrbitPoset one = fiber_order(f.q, identity_element(f.rs),
                               enumerate_fiber_inductive(f.q, identity_element(f.rs)),
                               f.cache);
  CHECK(one.n == 1);
  CHECK(one.covers.empty());
}

TEST_CASE("hermitian hasse diagram: frozen edges and decorations") {
  C2Fixture f;
  OrbitPoset p = rr_order(f.orb, f.cache);
  // Hand-derived from the worked Sp4 example; ids in enumeration order.
  std::vector<std::pair<int, int>> edges{
      {0, 2}, {1, 2}, {1, 5}, {2, 4}, {2, 8}, {3, 5}, {3, 9}, {4, 10},
      {5, 4}, {5, 7}, {5, 8}, {6, 9}, {7, 10}, {8, 10}, {9, 7}, {9, 8}};
  CHECK(p.covers == edges);
  std::vector<std::array<int, 3>> decorations{
      {0, 2, 1}, {1, 2, 1}, {1, 5, 0}, {2, 4, 0}, {3, 5, 0}, {3, 9, 1},
      {4, 10, 1}, {5, 8, 1}, {6, 9, 1}, {7, 10, 1}, {8, 10, 0}, {9, 7, 0}};
  CHECK(p.decorations == decorations);

  // Exactly two coverings out of (s2s1s2, {eta}) are undecorated.
  int id_eta = f.pair_of({1, 0, 1}, {f.eta});
  std::vector<std::pair<int, int>> undecorated_out;
  for (auto [c, par] : p.covers) {
    if (par != id_eta) continue;
    bool dec = std::any_of(p.decorations.begin(), p.decorations.end(),
                           [&](auto& d) { return d[0] == c && d[1] == par; });
    if (!dec) undecorated_out.emplace_back(c, par);
  }
  CHECK(undecorated_out == (std::vector<std::pair<int, int>>{{2, 8}, {9, 8}}));
}

TEST_CASE("orbit weight lattices") {
  C2Fixture f;
  auto basis = orbit_weight_lattice(f.orb, f.pair_of({1}, {f.alpha2}));
  REQUIRE(basis.size() == 1);
  CHECK(exact_eq(basis[0], tuple({0, -1})));

  CHECK(orbit_weight_lattice(f.orb, f.pair_of({0, 1}, {})).empty());

  auto top = orbit_weight_lattice(f.orb, f.pair_of({1, 0, 1}, {f.alpha2, f.theta}));
  REQUIRE(top.size() == 2);
  CHECK(exact_eq(top[0], tuple({-2, -1})));  // w^P(alpha_2) = -theta
  CHECK(exact_eq(top[1], tuple({0, -1})));   // w^P(theta) = -alpha_2
}

TEST_CASE("raising and lowering consistency suites on small contexts") {
  for (auto [t, n, node] : {std::tuple<char, int, int>{'C', 2, 1},
                            {'A', 3, 1},
                            {'B', 3, 0},
                            {'C', 3, 2}}) {
    RootSystem rs = build_root_system(t, n);
    BruhatCache cache(rs);
    HermitianOrbits orb =
        enumerate_hermitian(enumerate_WP(build_hermitian_context(rs, node)));
    Check raise = checks::raising_consistency(orb, cache);
    INFO(raise.name << " on " << t << n);
    CHECK(raise.ok());
    Check lower = checks::lowering_fibers(orb);
    INFO(lower.name << " on " << t << n);
    CHECK(lower.ok());
  }
}

TEST_CASE("order restriction suites on small contexts") {
  for (auto [t, n, node] :
       {std::tuple<char, int, int>{'C', 2, 1}, {'A', 3, 0}, {'D', 4, 3}}) {
    RootSystem rs = build_root_system(t, n);
    BruhatCache cache(rs);
    HermitianOrbits orb =
        enumerate_hermitian(enumerate_WP(build_hermitian_context(rs, node)));
    Check c = checks::order_restrictions(orb, cache);
    INFO(c.name << " on " << t << n);
    CHECK(c.ok());
  }
}

TEST_CASE("posets are graded in every space across contexts") {
  // compute_hasse throws if any covering edge fails to raise dim by one;
  // this drives it through the nilradical and every fiber.
  for (auto [t, n, node] :
       {std::tuple<char, int, int>{'A', 4, 1}, {'B', 3, 0}, {'B', 4, 0},
        {'C', 2, 1}, {'C', 3, 2}, {'C', 4, 3}, {'D', 4, 0}, {'D', 4, 3},
        {'D', 5, 0}, {'D', 5, 3}}) {
    RootSystem rs = build_root_system(t, n);
    BruhatCache cache(rs);
    ParabolicQuotient q = enumerate_WP(build_hermitian_context(rs, node));
    INFO(t << n << " node " << node + 1);
    CHECK_NOTHROW(build_nilradical_document(q, cache));
    for (int v = 0; v < q.size(); ++v)
      CHECK_NOTHROW(build_fiber_document(q, q.elements[v], cache));
  }
}

TEST_CASE("length-restricted pairwise order matches the full computation") {
  RootSystem rs = build_root_system('C', 3);
  BruhatCache cache(rs);
  HermitianOrbits orb =
      enumerate_hermitian(enumerate_WP(build_hermitian_context(rs, 2)));
  OrbitPoset full = rr_order(orb, cache, 1, false);
  OrbitPoset restricted = rr_order(orb, cache, 2, true);
  for (int i = 0; i < full.n; ++i) CHECK(full.leq[i] == restricted.leq[i]);
  CHECK(full.covers == restricted.covers);
}
