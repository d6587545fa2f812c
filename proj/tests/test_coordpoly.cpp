#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nilnorm/coordpoly.hpp"

using namespace nilnorm;

namespace {

CoordPoly cp(Dim d, const char* text) { return CoordPoly::parse(d, text); }

VectorField random_field(Dim d, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), ex(0, 3);
  VectorField v(d);
  for (int i = 0; i < dim_count(d); ++i) {
    for (int t = 0; t < 3; ++t) {
      int total = ex(rng);
      int e0 = static_cast<int>(rng() % (total + 1));
      int e1 = d == Dim::d2 ? total - e0 : static_cast<int>(rng() % (total - e0 + 1));
      int e2 = d == Dim::d2 ? 0 : total - e0 - e1;
      v.comp[i].add_term(CoordMonomial(d, e0, e1, e2), ParamPoly(Rational(coef(rng))));
    }
  }
  return v;
}

}  // namespace

TEST_CASE("apply_derivation basics") {
  Dim d = Dim::d3;
  CHECK(apply_derivation(field_N(d), cp(d, "z")) == cp(d, "2y"));
  CHECK(apply_derivation(field_N(d), cp(d, "z^2")) == cp(d, "4yz"));
  CHECK(apply_derivation(field_M(d), delta_invariant()).is_zero());
  CHECK(delta_invariant() == cp(d, "xz - y^2"));
}

TEST_CASE("oracle bracket pins the sl2 relations") {
  for (Dim d : {Dim::d2, Dim::d3}) {
    CHECK(oracle_bracket(field_M(d), field_N(d)) == field_H(d));
    CHECK(oracle_bracket(field_H(d), field_N(d)) == field_N(d).scaled(ParamPoly(Rational(-2))));
    CHECK(oracle_bracket(field_H(d), field_M(d)) == field_M(d).scaled(ParamPoly(Rational(2))));
    CHECK(oracle_bracket(field_E(d), field_N(d)).is_zero());
    CHECK(oracle_bracket(field_E(d), field_M(d)).is_zero());
    CHECK(oracle_bracket(field_E(d), field_H(d)).is_zero());
  }
}

TEST_CASE("bracket is antisymmetric") {
  std::mt19937 rng(5);
  VectorField v = random_field(Dim::d3, rng);
  CHECK(oracle_bracket(v, v).is_zero());
}

TEST_CASE("euler_factor") {
  Dim d = Dim::d3;
  VectorField xe = euler_field(cp(d, "x"));
  REQUIRE(euler_factor(xe).has_value());
  CHECK(*euler_factor(xe) == cp(d, "x"));
  CHECK(*euler_factor(field_E(d)) == cp(d, "1"));
  CHECK_FALSE(euler_factor(field_N(d)).has_value());
}

TEST_CASE("cpoly arith") {
  Dim d = Dim::d3;
  CHECK(cp(d, "z") * cp(d, "z") == cp(d, "z^2"));
  CHECK(cp(d, "xz") + (-cp(d, "y^2")) == delta_invariant());
  CHECK(cp(d, "2y").scaled(ParamPoly(Rational(1, 2))) == cp(d, "y"));
}

TEST_CASE("jacobi identity, 50 random triples") {
  std::mt19937 rng(17);
  for (int t = 0; t < 50; ++t) {
    Dim d = t % 2 == 0 ? Dim::d3 : Dim::d2;
    VectorField u = random_field(d, rng), v = random_field(d, rng), w = random_field(d, rng);
    VectorField jac = oracle_bracket(oracle_bracket(u, v), w);
    jac += oracle_bracket(oracle_bracket(v, w), u);
    jac += oracle_bracket(oracle_bracket(w, u), v);
    CHECK(jac.is_zero());
  }
}

TEST_CASE("derivation rule L(fg) = L(f)g + fL(g)") {
  std::mt19937 rng(23);
  Dim d = Dim::d3;
  VectorField L = random_field(d, rng);
  CoordPoly f = random_field(d, rng).comp[0], g = random_field(d, rng).comp[1];
  CHECK(apply_derivation(L, f * g) == apply_derivation(L, f) * g + f * apply_derivation(L, g));
}

TEST_CASE("dimension mismatch is an error") {
  CHECK_THROWS_AS(apply_derivation(field_N(Dim::d2), CoordPoly::variable(Dim::d3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(oracle_bracket(field_N(Dim::d2), field_N(Dim::d3)), std::invalid_argument);
}
