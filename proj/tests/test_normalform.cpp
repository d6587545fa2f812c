#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilnorm/normalform.hpp"

using namespace nilnorm;

namespace {

LieComb comb2(std::initializer_list<std::pair<std::pair<int, int>, Rational>> terms, bool with_n = true) {
  LieComb u(Dim::d2, with_n);
  for (const auto& [lm, c] : terms) u.add_term(OrbitElement(Dim::d2, lm.first, lm.second), ParamPoly(c));
  return u;
}

}  // namespace

TEST_CASE("gradings") {
  CHECK(grade_delta0(OrbitElement(Dim::d3, 0, 1, 0)) == 1);
  CHECK(grade_delta0(OrbitElement(Dim::d3, 3, 2, 1)) == 4);
  CHECK(grade_delta0(OrbitElement(Dim::d2, 2, 5)) == 5);

  CHECK(grade_2d(OrbitElement(Dim::d2, 0, 3), 3) == 6);  // A^0_{nu1} at nu1 = 3
  CHECK(grade_2d_nilpotent(3) == 6);
  CHECK(grade_2d(OrbitElement(Dim::d2, 1, 4), 2) == 2 * (4 + 2));
  CHECK(grade_2d(OrbitElement(Dim::d2, 2, 3), 1) == 10);

  CHECK(grade_3d(OrbitElement(Dim::d3, 0, 2, 1), 2, 1) == 2 + 2 * 1);  // A^0_{r,s}
  CHECK(grade_3d_nilpotent(2, 1) == 4);
  CHECK(grade_3d(OrbitElement(Dim::d3, 2, 1, 0), 1, 0) == 3);
}

TEST_CASE("grading additivity under the bracket") {
  // bracket output grades equal the sum of input grades, for both gradings
  for (int r = 1; r <= 2; ++r)
    for (int s = 0; s <= 1; ++s)
      for (int mu1 = 1; mu1 <= 3; ++mu1)
        for (int mu2 = 1; mu2 <= 3; ++mu2)
          for (int l1 = 0; l1 <= 2 * mu1; ++l1)
            for (int l2 = 0; l2 <= 2 * mu2; ++l2) {
              OrbitElement e1(Dim::d3, l1, mu1, s), e2(Dim::d3, l2, mu2, 0);
              LieComb b = bracket(e1, e2);
              for (const auto& [e, c] : b.terms())
                CHECK(grade_3d(e, r, s) == grade_3d(e1, r, s) + grade_3d(e2, r, s));
            }
  for (int nu1 = 1; nu1 <= 3; ++nu1)
    for (int mu1 = 1; mu1 <= 4; ++mu1)
      for (int mu2 = 1; mu2 <= 4; ++mu2)
        for (int l1 = 0; l1 <= mu1; ++l1)
          for (int l2 = 0; l2 <= mu2; ++l2) {
            OrbitElement e1(Dim::d2, l1, mu1), e2(Dim::d2, l2, mu2);
            LieComb b = bracket(e1, e2);
            for (const auto& [e, c] : b.terms())
              CHECK(grade_2d(e, nu1) == grade_2d(e1, nu1) + grade_2d(e2, nu1));
          }
}

TEST_CASE("apply_transform basics") {
  // removal: v = N + A^1_s, T = A^0_s -> N
  LieComb v = comb2({{{1, 2}, Rational(1)}});
  LieComb t = comb2({{{0, 2}, Rational(1)}}, false);
  LieComb out = apply_transform(v, t, 6);
  CHECK(out == LieComb::nilpotent(Dim::d2));

  CHECK(apply_transform(v, LieComb(Dim::d2), 6) == v);  // T = 0

  LieComb bad(Dim::d2, true);
  CHECK_THROWS_AS(apply_transform(v, bad, 6), std::invalid_argument);  // N in generator
}

TEST_CASE("per-grade generator: single commutator equals the full series") {
  // brackets of same-delta0 Euler elements vanish, so exp(ad_T) collapses to
  // one commutator when T is concentrated in a single grade
  LieComb v(Dim::d3, true);
  v.add_term(OrbitElement(Dim::d3, 0, 1, 0), ParamPoly::parse("a[0,1,0]"));
  v.add_term(OrbitElement(Dim::d3, 2, 1, 0), ParamPoly::parse("a[2,1,0]"));
  v.add_term(OrbitElement(Dim::d3, 3, 2, 0), ParamPoly::parse("a[3,2,0]"));
  v.add_term(OrbitElement(Dim::d3, 1, 1, 1), ParamPoly::parse("a[1,1,1]"));
  const int gmax = 3;
  for (int g = 1; g <= gmax; ++g) {
    LieComb t = first_level_generator(v, g);
    if (t.is_zero()) continue;
    LieComb series = apply_transform(v, t, gmax);
    LieComb single = (v + comb_bracket(t, v)).truncated(gmax);
    CHECK(series == single);
  }
}

TEST_CASE("distinct equal-grade kernels target distinct slots") {
  // 3D: two degenerate kernels A^{2m}_{m,k} with m1 != m2 at the same grade
  // produce different removal slots (the slot mu is injective in m)
  for (int r = 1; r <= 4; ++r)
    for (int s = 0; s <= 3; ++s) {
      std::vector<std::pair<int, int>> kernels;  // (m1, k)
      for (int kk = 0; 2 * kk <= r + 2 * s; ++kk) {
        int m1 = r + 2 * (s - kk);
        if (m1 >= 1) kernels.emplace_back(m1, kk);
      }
      for (size_t i = 0; i < kernels.size(); ++i)
        for (size_t j = i + 1; j < kernels.size(); ++j) {
          auto [ma, ka] = kernels[i];
          auto [mb, kb] = kernels[j];
          // anchored on any second slot (r1, s1), targets differ already in mu
          int mu_a = ma + 1 + 2 * ma * r, mu_b = mb + 1 + 2 * mb * r;
          CHECK(mu_a != mu_b);
        }
    }
}

TEST_CASE("first_level cleans everything above l = 0") {
  // already clean input is unchanged
  LieComb v0 = comb2({{{0, 1}, Rational(2)}, {{0, 3}, Rational(5)}});
  CHECK(first_level(v0, 6) == v0);

  // N + a A^2_{1,0} in 3D collapses to N
  LieComb v(Dim::d3, true);
  v.add_term(OrbitElement(Dim::d3, 2, 1, 0), ParamPoly::parse("a"));
  std::vector<LieComb> gens;
  LieComb out = first_level(v, 4, &gens);
  CHECK(out == LieComb::nilpotent(Dim::d3));
  REQUIRE(!gens.empty());
  CHECK(gens[0].coeff(OrbitElement(Dim::d3, 1, 1, 0)) == ParamPoly::parse("a"));

  // replay
  LieComb replay = v;
  for (const auto& g : gens) replay = apply_transform(replay, g, 4);
  CHECK(replay == out);
}

TEST_CASE("first-level output lies in ker ad_M") {
  LieComb v(Dim::d3, true);
  v.add_term(OrbitElement(Dim::d3, 1, 1, 0), ParamPoly(Rational(2)));
  v.add_term(OrbitElement(Dim::d3, 3, 2, 0), ParamPoly(Rational(-1, 3)));
  v.add_term(OrbitElement(Dim::d3, 1, 1, 1), ParamPoly(Rational(5)));
  LieComb out = first_level(v, 4);
  for (const auto& [e, c] : out.terms()) CHECK(e.l == 0);
  LieComb nl = out;
  nl.set_n_flag(false);
  auto f = euler_factor(comb_to_vectorfield(nl));
  REQUIRE(f.has_value());
  CHECK(ker_m_test(*f));
}

TEST_CASE("detect_leading") {
  LieComb v = comb2({{{0, 2}, Rational(1)}, {{0, 5}, Rational(3)}});
  LeadingInfo info = detect_leading(v);
  CHECK(info.nu1 == 2);
  CHECK(info.nu2 == 5);
  CHECK(detect_leading(LieComb::nilpotent(Dim::d2)).leading == std::nullopt);

  LieComb w(Dim::d3, true);
  w.add_term(OrbitElement(Dim::d3, 0, 2, 1), ParamPoly(Rational(1)));
  LeadingInfo i3 = detect_leading(w);
  REQUIRE(i3.leading.has_value());
  CHECK(i3.r_per_s.at(1) == 2);
}

TEST_CASE("solve_generator_chain, 2D exact") {
  // X = N + 2 A^0_1
  LieComb x(Dim::d2, true);
  x.add_term(OrbitElement(Dim::d2, 0, 1), ParamPoly(Rational(2)));
  SUBCASE("n = 1: T = -A^0_m") {
    GeneratorChain ch = solve_generator_chain(x, OrbitElement(Dim::d2, 1, 3));
    CHECK(ch.t.coeff(OrbitElement(Dim::d2, 0, 3)) == ParamPoly(Rational(-1)));
    CHECK(ch.residual_slot == OrbitElement(Dim::d2, 0, 4));
    LieComb check = comb_bracket(x, ch.t);
    check.add_term(OrbitElement(Dim::d2, 1, 3), ParamPoly(Rational(1)));
    LieComb expect(Dim::d2);
    expect.add_term(ch.residual_slot, ParamPoly(ch.residual_coeff));
    CHECK(check == expect);
  }
  SUBCASE("longer chains satisfy the lemma exactly") {
    for (int n = 1; n <= 3; ++n) {
      OrbitElement target(Dim::d2, n, 4);
      GeneratorChain ch = solve_generator_chain(x, target);
      LieComb check = comb_bracket(x, ch.t);
      check.add_term(target, ParamPoly(Rational(1)));
      LieComb expect(Dim::d2);
      expect.add_term(ch.residual_slot, ParamPoly(ch.residual_coeff));
      CHECK(check == expect);
      CHECK(ch.residual_slot == OrbitElement(Dim::d2, 0, 4 + n * 1));
      CHECK(ch.residual_coeff != Rational(0));
    }
  }
}

TEST_CASE("solve_generator_chain, 3D filtered") {
  LieComb x(Dim::d3, true);
  x.add_term(OrbitElement(Dim::d3, 0, 1, 1), ParamPoly(Rational(3)));  // lead (r,s) = (1,1)
  OrbitElement target(Dim::d3, 2, 2, 0);
  GeneratorChain ch = solve_generator_chain(x, target);
  CHECK(ch.residual_slot == OrbitElement(Dim::d3, 0, 2 + 2 * 1, 0 + 2 * 1));
  LieComb w = comb_bracket(x, ch.t);
  w.add_term(target, ParamPoly(Rational(1)));
  w.add_term(ch.residual_slot, ParamPoly(-ch.residual_coeff));
  // leftovers live strictly above the chain's delta filtration: at the chain
  // step slots (l = 2 - i) the delta power exceeds k + i*s
  for (const auto& [e, c] : w.terms()) {
    int i = 2 - e.l;
    CHECK(i >= 0);
    CHECK(e.k > 0 + i * 1);
  }
}

TEST_CASE("2D second and third level, frozen example") {
  // input: N + 6A^0_1 + 3A^0_2 + 7A^0_3 + A^0_4 + 2A^0_5 + 9A^0_6 + 2A^0_7 + 6A^0_8
  NFProblem p{comb2({{{0, 1}, Rational(6)},
                     {{0, 2}, Rational(3)},
                     {{0, 3}, Rational(7)},
                     {{0, 4}, Rational(1)},
                     {{0, 5}, Rational(2)},
                     {{0, 6}, Rational(9)},
                     {{0, 7}, Rational(2)},
                     {{0, 8}, Rational(6)}}),
              8, NFMode::numeric};
  NFReport rep = first_level(p);
  CHECK(rep.level1 == p.input);  // already first-level
  second_level(p, rep);
  CHECK(rep.level2.coeff(OrbitElement(Dim::d2, 0, 5)).is_zero());
  CHECK(rep.level2.coeff(OrbitElement(Dim::d2, 0, 7)).is_zero());
  CHECK(rep.level2.coeff(OrbitElement(Dim::d2, 0, 3)) == ParamPoly(Rational(7)));  // stuck slot nu1(2+nu1)
  CHECK(rep.level2.coeff(OrbitElement(Dim::d2, 0, 6)) == ParamPoly(Rational(39, 5)));
  CHECK(rep.level2.coeff(OrbitElement(Dim::d2, 0, 8)) == ParamPoly(Rational(713, 189)));
  third_level(p, rep);
  CHECK(rep.level3.coeff(OrbitElement(Dim::d2, 0, 4)).is_zero());  // nu1 + nu2 + nu1^2
  CHECK(rep.level3.coeff(OrbitElement(Dim::d2, 0, 5)).is_zero());
  CHECK(rep.level3.coeff(OrbitElement(Dim::d2, 0, 7)).is_zero());
  CHECK(rep.level3.coeff(OrbitElement(Dim::d2, 0, 6)) == ParamPoly(Rational(35, 4)));
  CHECK(rep.level3.coeff(OrbitElement(Dim::d2, 0, 8)) == ParamPoly(Rational(-33581, 3024)));

  SUBCASE("replay reproduces each level") {
    LieComb cur = p.input;
    for (const auto& g : rep.generators1) cur = apply_transform(cur, g, p.max_grade);
    CHECK(cur == rep.level1);
    for (const auto& g : rep.generators2) cur = apply_transform(cur, g, p.max_grade);
    CHECK(cur == rep.level2);
    for (const auto& g : rep.generators3) cur = apply_transform(cur, g, p.max_grade);
    CHECK(cur == rep.level3);
  }

  SUBCASE("idempotence") {
    NFProblem p2{rep.level3, p.max_grade, NFMode::numeric};
    NFReport rep2 = normal_form(p2);
    CHECK(rep2.level3 == rep.level3);
    CHECK(rep2.removed2.empty());
    CHECK(rep2.removed3.empty());
  }
}

TEST_CASE("second level is a clean no-op without nonlinear terms") {
  NFProblem p{LieComb::nilpotent(Dim::d2), 6, NFMode::numeric};
  NFReport rep = normal_form(p);
  CHECK(rep.level3 == LieComb::nilpotent(Dim::d2));
}

TEST_CASE("3D: degenerate kernels give no low-grade moves (leading grade 1)") {
  // leading (r,s) = (1,0): the m = 1 kernel A^2_{1,0} has delta0 equality and
  // is reserved for level 3; the first usable target sits at grade 7
  LieComb v(Dim::d3, true);
  v.add_term(OrbitElement(Dim::d3, 0, 1, 0), ParamPoly(Rational(1)));
  v.add_term(OrbitElement(Dim::d3, 0, 4, 0), ParamPoly(Rational(3)));
  v.add_term(OrbitElement(Dim::d3, 0, 2, 1), ParamPoly(Rational(5)));
  NFProblem p{v, 5, NFMode::numeric};
  NFReport rep = normal_form(p, 2);
  CHECK(rep.level2 == v);
  CHECK(rep.removed2.empty());
}

TEST_CASE("3D second level removes the predicted slot family") {
  // leading (r,s) = (2,0); kernel A^{2m}_{m,kk} targets A^0_{m+2+4m, kk}
  LieComb v(Dim::d3, true);
  v.add_term(OrbitElement(Dim::d3, 0, 2, 0), ParamPoly(Rational(1)));
  v.add_term(OrbitElement(Dim::d3, 0, 7, 0), ParamPoly(Rational(3)));   // target of m=1, kk=0
  v.add_term(OrbitElement(Dim::d3, 0, 2, 1), ParamPoly(Rational(5)));   // not a target
  v.add_term(OrbitElement(Dim::d3, 0, 5, 1), ParamPoly(Rational(2)));   // target of m=1, kk=1: A^0_{7,1} grade 9 > maxg
  NFProblem p{v, 7, NFMode::numeric};
  NFReport rep = normal_form(p, 2);
  CHECK(rep.level2.coeff(OrbitElement(Dim::d3, 0, 7, 0)).is_zero());
  CHECK(rep.level2.coeff(OrbitElement(Dim::d3, 0, 2, 1)) == ParamPoly(Rational(5)));
  REQUIRE(rep.removed2.size() == 1);
  CHECK(rep.removed2[0] == OrbitElement(Dim::d3, 0, 7, 0));
  // pattern consistency: removed slot matches A^0_{m+r+2mr, kk+s+2ms}
  CHECK(rep.removed2[0].mu == 1 + 2 + 2 * 1 * 2);
  CHECK(rep.removed2[0].k == 0);

  // replay
  LieComb cur = v;
  for (const auto& g : rep.generators1) cur = apply_transform(cur, g, p.max_grade);
  for (const auto& g : rep.generators2) cur = apply_transform(cur, g, p.max_grade);
  CHECK(cur == rep.level2);
}

TEST_CASE("3D third level uses the degenerate kernel against the second term") {
  // leading (1,0); degenerate kernel A^2_{1,0}; second term A^0_{2,0}:
  // target A^0_{1+2+2*1*1, 0} = A^0_{5,0}
  LieComb v(Dim::d3, true);
  v.add_term(OrbitElement(Dim::d3, 0, 1, 0), ParamPoly(Rational(1)));
  v.add_term(OrbitElement(Dim::d3, 0, 2, 0), ParamPoly(Rational(1)));
  v.add_term(OrbitElement(Dim::d3, 0, 5, 0), ParamPoly(Rational(4)));
  NFProblem p{v, 5, NFMode::numeric};
  NFReport rep = normal_form(p, 3);
  CHECK(rep.level3.coeff(OrbitElement(Dim::d3, 0, 5, 0)).is_zero());
  REQUIRE(rep.removed3.size() == 1);
  CHECK(rep.removed3[0] == OrbitElement(Dim::d3, 0, 5, 0));
  LieComb cur = v;
  for (const auto& g : rep.generators1) cur = apply_transform(cur, g, p.max_grade);
  for (const auto& g : rep.generators2) cur = apply_transform(cur, g, p.max_grade);
  for (const auto& g : rep.generators3) cur = apply_transform(cur, g, p.max_grade);
  CHECK(cur == rep.level3);
}

TEST_CASE("3D pipeline at grade 8: mixed input, full invariants") {
  LieComb v(Dim::d3, true);
  auto add = [&](int l, int mu, int k, Rational c) { v.add_term(OrbitElement(Dim::d3, l, mu, k), ParamPoly(c)); };
  add(0, 1, 0, Rational(2));
  add(1, 1, 0, Rational(1));
  add(0, 0, 1, Rational(3));
  add(2, 2, 0, Rational(-1));
  add(0, 3, 0, Rational(1, 2));
  add(1, 1, 1, Rational(5));
  add(3, 2, 1, Rational(-2, 3));
  add(0, 5, 0, Rational(7));
  add(2, 4, 1, Rational(1, 3));
  add(0, 7, 0, Rational(4));
  add(6, 8, 0, Rational(-5));
  NFProblem p{v, 8, NFMode::numeric};
  NFReport rep = normal_form(p);
  // leading (1,0); removable family (3m+1, kk) excluding the degenerate m=1,kk=0
  std::vector<OrbitElement> expect = {OrbitElement(Dim::d3, 0, 4, 1), OrbitElement(Dim::d3, 0, 7, 0),
                                      OrbitElement(Dim::d3, 0, 4, 2)};
  CHECK(rep.removed2 == expect);
  for (const auto& [e, c] : rep.level3.terms()) CHECK(e.l == 0);
  // replay all three levels
  LieComb cur = v.truncated(p.max_grade);
  for (const auto& g : rep.generators1) cur = apply_transform(cur, g, p.max_grade);
  CHECK(cur == rep.level1);
  for (const auto& g : rep.generators2) cur = apply_transform(cur, g, p.max_grade);
  CHECK(cur == rep.level2);
  for (const auto& g : rep.generators3) cur = apply_transform(cur, g, p.max_grade);
  CHECK(cur == rep.level3);
  // realized nonlinear part lies in ker M
  LieComb nl = rep.level3;
  nl.set_n_flag(false);
  auto f = euler_factor(comb_to_vectorfield(nl));
  REQUIRE(f.has_value());
  CHECK(ker_m_test(*f));
}

TEST_CASE("mode and validation errors") {
  LieComb v(Dim::d3, true);
  v.add_term(OrbitElement(Dim::d3, 0, 1, 0), ParamPoly::parse("a"));
  NFProblem p{v, 3, NFMode::numeric};
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);  // symbolic coeff in numeric mode
  NFProblem q{v, 3, NFMode::symbolic};
  NFReport rep = first_level(q);
  CHECK_THROWS_AS(second_level(q, rep), std::invalid_argument);

  LieComb noN(Dim::d3);
  NFProblem r{noN, 3, NFMode::numeric};
  CHECK_THROWS_AS(r.validate(), std::invalid_argument);
}

TEST_CASE("NFProblem JSON round trip") {
  LieComb v(Dim::d2, true);
  v.add_term(OrbitElement(Dim::d2, 0, 2), ParamPoly(Rational(3, 7)));
  NFProblem p{v, 9, NFMode::numeric};
  NFProblem back = NFProblem::from_json(p.json());
  CHECK(back.input == p.input);
  CHECK(back.max_grade == 9);
  CHECK(back.mode == NFMode::numeric);
}
