#include <doctest.h>

#include "borbit/checks.hpp"

using namespace borbit;

namespace {

Vec tuple(std::initializer_list<Int> v) {
  Vec out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (Int x : v) out[i++] = x;
  return out;
}

}  // namespace

TEST_CASE("root systems close the simple roots under reflections") {
  RootSystem a2 = build_root_system('A', 2);
  CHECK(a2.num_roots() == 6);
  CHECK(exact_eq(a2.roots[a2.highest], tuple({1, 1})));

  RootSystem c2 = build_root_system('C', 2);
  CHECK(c2.num_roots() == 8);
  CHECK(exact_eq(c2.roots[c2.highest], tuple({2, 1})));
  CHECK(c2.is_root(tuple({1, 1})));  // eta

  RootSystem a1 = build_root_system('A', 1);
  REQUIRE(a1.num_roots() == 2);
  CHECK(exact_eq(a1.roots[0], tuple({1})));
  CHECK(exact_eq(a1.roots[1], tuple({-1})));
}

TEST_CASE("positive-root counts match the classical values") {
  CHECK(build_root_system('B', 3).n_positive == 9);
  CHECK(build_root_system('D', 4).n_positive == 12);
  CHECK(build_root_system('E', 6).n_positive == 36);
  CHECK(build_root_system('E', 7).n_positive == 63);
  CHECK(build_root_system('F', 4).n_positive == 24);
  CHECK(build_root_system('G', 2).n_positive == 6);
}

TEST_CASE("invalid type and rank combinations are rejected") {
  CHECK_THROWS_AS(build_root_system('A', 0), input_error);
  CHECK_THROWS_AS(build_root_system('B', 1), input_error);
  CHECK_THROWS_AS(build_root_system('D', 3), input_error);
  CHECK_THROWS_AS(build_root_system('E', 9), input_error);
  CHECK_THROWS_AS(build_root_system('F', 5), input_error);
  CHECK_THROWS_AS(build_root_system('H', 2), input_error);
}

TEST_CASE("pairing agrees with the C2 Cartan matrix") {
  RootSystem c2 = build_root_system('C', 2);
  // Independent oracle: the C2 Cartan matrix entries <alpha_j, alpha_i^vee>.
  const Int oracle[2][2] = {{2, -2}, {-1, 2}};  // oracle[i][j]
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Vec ei = Vec::Zero(2), ej = Vec::Zero(2);
      ei[i] = 1;
      ej[j] = 1;
      CHECK(pairing(c2, ej, ei) == oracle[i][j]);
    }
  CHECK(pairing(c2, tuple({1, 0}), tuple({0, 1})) == -1);
  CHECK(pairing(c2, tuple({0, 1}), tuple({1, 0})) == -2);
  for (int i = 0; i < c2.num_roots(); ++i) CHECK(pairing(c2, i, i) == 2);
  CHECK_THROWS_AS(pairing(c2, tuple({1, 2}), tuple({1, 0})), input_error);
}

TEST_CASE("cominuscule nodes are the coefficient-one nodes of the highest root") {
  auto nodes = [](char t, int n) { return cominuscule_nodes(build_root_system(t, n)); };
  CHECK(nodes('C', 2) == std::vector<int>{1});
  CHECK(nodes('A', 3) == (std::vector<int>{0, 1, 2}));
  CHECK(nodes('G', 2).empty());
  CHECK(nodes('B', 3) == std::vector<int>{0});
  CHECK(nodes('C', 3) == std::vector<int>{2});
  CHECK(nodes('D', 5) == (std::vector<int>{0, 3, 4}));
  CHECK(nodes('E', 6) == (std::vector<int>{0, 5}));
  CHECK(nodes('E', 7) == std::vector<int>{6});
  CHECK(nodes('E', 8).empty());
  CHECK(nodes('F', 4).empty());
}

TEST_CASE("hermitian context carries Psi and the fundamental coweight") {
  RootSystem c2 = build_root_system('C', 2);
  HermitianContext ctx = build_hermitian_context(c2, 1);
  REQUIRE(ctx.psi.size() == 3);
  CHECK(exact_eq(c2.roots[ctx.psi[0]], tuple({0, 1})));
  CHECK(exact_eq(c2.roots[ctx.psi[1]], tuple({1, 1})));
  CHECK(exact_eq(c2.roots[ctx.psi[2]], tuple({2, 1})));
  CHECK(ctx.phi_P_plus.size() == 1);
  CHECK(ctx.delta_P == std::vector<int>{0});
  CHECK(exact_eq(ctx.omega_P_covee.num, tuple({1, 2})));
  CHECK(ctx.omega_P_covee.den == 2);

  RootSystem a2 = build_root_system('A', 2);
  HermitianContext actx = build_hermitian_context(a2, 0);
  REQUIRE(actx.psi.size() == 2);
  CHECK(exact_eq(a2.roots[actx.psi[0]], tuple({1, 0})));
  CHECK(exact_eq(a2.roots[actx.psi[1]], tuple({1, 1})));

  // Non-cominuscule node: the error names the offending coefficient.
  try {
    build_hermitian_context(c2, 0);
    FAIL("expected input_error");
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("= 2") != std::string::npos);
  }
}

TEST_CASE("dominance order on root tuples") {
  Vec alpha2 = tuple({0, 1}), eta = tuple({1, 1}), theta = tuple({2, 1});
  CHECK(dominance_leq(alpha2, eta));
  CHECK(dominance_leq(eta, theta));
  CHECK(dominance_leq(theta, theta));
  CHECK(!dominance_leq(tuple({1, 0}), alpha2));
  CHECK(!dominance_leq(alpha2, tuple({1, 0})));
  CHECK_THROWS_AS(dominance_leq(tuple({1}), alpha2), input_error);
}

TEST_CASE("coweight dominance rejects non-integral differences") {
  Coweight x{Vec::Zero(2), 1};
  Coweight y{tuple({1, 0}), 2};  // half a simple coroot above x
  CHECK(!dominance_leq(x, y));
  Coweight z{tuple({2, 0}), 2};  // one full coroot
  CHECK(dominance_leq(x, z));
  CHECK(dominance_leq(x, x));
  CHECK(!dominance_leq(z, x));
}

TEST_CASE("structural properties hold across small types") {
  for (auto [t, n] : {std::pair<char, int>{'A', 3},
                      {'B', 3},
                      {'C', 2},
                      {'D', 4},
                      {'G', 2}}) {
    Check c = checks::root_system_properties(build_root_system(t, n));
    INFO(c.name << " on " << t << n);
    CHECK(c.ok());
  }
}

TEST_CASE("context properties hold across small contexts") {
  for (auto [t, n, node] : {std::tuple<char, int, int>{'C', 2, 1},
                            {'A', 3, 1},
                            {'B', 3, 0},
                            {'D', 4, 0}}) {
    Check c = checks::context_properties(
        build_hermitian_context(build_root_system(t, n), node));
    INFO(c.name << " on " << t << n);
    CHECK(c.ok());
  }
}
