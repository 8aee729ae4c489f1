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

struct C2Fixture {
  RootSystem rs = build_root_system('C', 2);
  int alpha2 = rs.index_of(tuple({0, 1}));
  int eta = rs.index_of(tuple({1, 1}));
  int theta = rs.index_of(tuple({2, 1}));
};

}  // namespace

TEST_CASE("sigma_S multiplies commuting reflections") {
  C2Fixture f;
  Involution w0 = sigma_of(f.rs, {f.alpha2, f.theta});
  CHECK(exact_eq(w0.element.m, Mat(-Mat::Identity(2, 2))));
  CHECK(w0.element.length == 4);
  CHECK(w0.lambda == 2);
  CHECK(w0.L == 3);

  Involution id = sigma_of(f.rs, {});
  CHECK(id.element.is_identity());
  CHECK(id.L == 0);

  Involution s_eta = sigma_of(f.rs, {f.eta});
  CHECK(s_eta.element.length == 3);
  CHECK(s_eta.lambda == 1);
  CHECK(s_eta.L == 2);
  CHECK(s_eta.element.word == (std::vector<int>{1, 0, 1}));

  // Order of the factors does not matter, and negatives name the same
  // reflection.
  CHECK(sigma_of(f.rs, {f.theta, f.alpha2}) == w0);
  CHECK(sigma_of(f.rs, {f.rs.negate(f.eta)}) == s_eta);

  CHECK_THROWS_AS(sigma_of(f.rs, {f.alpha2, f.eta}), input_error);
}

TEST_CASE("circle action composes with one conjugation when needed") {
  C2Fixture f;
  Involution s_theta = make_involution(f.rs, reflection(f.rs, f.theta));
  Involution c1 = circle(f.rs, 1, s_theta);  // commuting case
  CHECK(exact_eq(c1.element.m, Mat(-Mat::Identity(2, 2))));

  Involution id = sigma_of(f.rs, {});
  CHECK(circle(f.rs, 0, id).element == simple_reflection(f.rs, 0));

  Involution s_alpha2 = make_involution(f.rs, simple_reflection(f.rs, 1));
  Involution c2 = circle(f.rs, 0, s_alpha2);  // non-commuting case
  CHECK(c2.element == from_word(f.rs, {0, 1, 0}));
  CHECK(c2.element == reflection(f.rs, f.theta));

  // The circle action is an involution on its input.
  CHECK(circle(f.rs, 0, c2) == s_alpha2);
}

TEST_CASE("involution length via the -1 eigenspace") {
  C2Fixture f;
  CHECK(inv_length_L(make_involution(f.rs, reflection(f.rs, f.theta))) == 2);
  CHECK(inv_length_L(sigma_of(f.rs, {})) == 0);
  CHECK(inv_length_L(sigma_of(f.rs, {f.alpha2, f.theta})) == 3);
  CHECK_THROWS_AS(make_involution(f.rs, from_word(f.rs, {0, 1})), input_error);
}

TEST_CASE("root-set split of an involution") {
  C2Fixture f;
  Involution w0 = sigma_of(f.rs, {f.alpha2, f.theta});
  PhiSigmaSplit split = phi_sigma_split(f.rs, w0);
  CHECK(split.phi_sigma.size() == 8);
  CHECK(split.t_long ==
        (std::vector<int>{f.alpha2, f.theta, f.rs.negate(f.alpha2),
                          f.rs.negate(f.theta)}));
  CHECK(split.t_short.empty());
  CHECK(split.negative_selection ==
        (std::vector<int>{f.rs.negate(f.alpha2), f.rs.negate(f.theta)}));

  CHECK(phi_sigma_split(f.rs, sigma_of(f.rs, {})).phi_sigma.empty());

  Involution s_eta = sigma_of(f.rs, {f.eta});
  PhiSigmaSplit se = phi_sigma_split(f.rs, s_eta);
  CHECK(se.phi_sigma == (std::vector<int>{f.eta, f.rs.negate(f.eta)}));
  CHECK(se.negative_selection == std::vector<int>{f.rs.negate(f.eta)});
}

TEST_CASE("orthogonal sets validate membership and orthogonality") {
  C2Fixture f;
  HermitianContext ctx = build_hermitian_context(f.rs, 1);
  OrthogonalSet s = make_orthogonal_set(ctx, {f.theta, f.alpha2});
  CHECK(s.roots == (std::vector<int>{f.alpha2, f.theta}));
  int alpha1 = f.rs.index_of(tuple({1, 0}));
  CHECK_THROWS_AS(make_orthogonal_set(ctx, {alpha1}), input_error);
  CHECK_THROWS_AS(make_orthogonal_set(ctx, {f.alpha2, f.eta}), input_error);
  CHECK_THROWS_AS(make_orthogonal_set(ctx, {f.alpha2, f.alpha2}), input_error);
}

TEST_CASE("involution monotonicity and lifting on small groups") {
  for (auto [t, n] : {std::pair<char, int>{'B', 2}, {'A', 3}}) {
    RootSystem rs = build_root_system(t, n);
    BruhatCache cache(rs);
    auto group = enumerate_weyl_group(rs, 100);
    Check mono = checks::involution_monotonicity(rs, group, cache);
    INFO(mono.name << " on " << t << n);
    CHECK(mono.ok());
    Check lift = checks::involution_lifting(rs, group, cache);
    INFO(lift.name << " on " << t << n);
    CHECK(lift.ok());
  }
}

TEST_CASE("sigma structure suite on the C2 context") {
  RootSystem rs = build_root_system('C', 2);
  HermitianOrbits orb =
      enumerate_hermitian(enumerate_WP(build_hermitian_context(rs, 1)));
  Check c = checks::sigma_structure(orb);
  CHECK(c.ok());
  CHECK(c.cases > 0);
}
