#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nilnorm/sl2.hpp"

using namespace nilnorm;

namespace {
CoordPoly cp(Dim d, const char* text) { return CoordPoly::parse(d, text); }
}

TEST_CASE("realize basics") {
  Dim d = Dim::d3;
  CHECK(realize(OrbitFunction(d, 0, 1)) == cp(d, "z"));
  CHECK(realize(OrbitFunction(d, 2, 1)) == cp(d, "2x"));
  CHECK(realize(OrbitFunction(d, 4, 2)) == cp(d, "24x^2"));
  // orbit exhausted
  CHECK(realize(OrbitFunction(d, 3, 1)).is_zero());
  CHECK_FALSE(OrbitFunction(d, 3, 1).within_orbit());
  // 2D
  CHECK(realize(OrbitFunction(Dim::d2, 1, 2)) == CoordPoly::parse(Dim::d2, "2xy"));
}

TEST_CASE("ker_m_test") {
  Dim d = Dim::d3;
  CHECK(ker_m_test(cp(d, "z^3") * delta_invariant() * delta_invariant()));
  CHECK_FALSE(ker_m_test(cp(d, "y")));
  CHECK(ker_m_test(CoordPoly(d)));
}

TEST_CASE("ker_m_basis enumeration") {
  auto b2 = ker_m_basis(Dim::d3, 2);
  REQUIRE(b2.size() == 2);
  CHECK((b2[0].mu == 2 && b2[0].k == 0));
  CHECK((b2[1].mu == 0 && b2[1].k == 1));
  auto b3 = ker_m_basis(Dim::d3, 3);
  REQUIRE(b3.size() == 2);
  CHECK((b3[0].mu == 3 && b3[1].mu == 1 && b3[1].k == 1));
  auto c4 = ker_m_basis(Dim::d2, 4);
  REQUIRE(c4.size() == 1);
  CHECK(c4[0].mu == 4);
}

TEST_CASE("h_weight") {
  Dim d = Dim::d3;
  CHECK(h_weight(cp(d, "z")) == 2);
  // each N application lowers the weight by 2
  CoordPoly nz2 = apply_derivation(field_N(d), cp(d, "z^2"));
  CHECK(h_weight(nz2) == 2);
  CHECK(h_weight(apply_derivation(field_N(d), nz2)) == 0);
  CHECK_FALSE(h_weight(cp(d, "x + z")).has_value());
  CHECK(h_weight(CoordPoly(d)) == 0);
}

TEST_CASE("to_orbit_coords known expansions") {
  Dim d = Dim::d3;
  auto m = to_orbit_coords(cp(d, "2x"));
  REQUIRE(m.size() == 1);
  CHECK(m.begin()->first == OrbitFunction(d, 2, 1));
  CHECK(m.begin()->second == ParamPoly(1));

  // xz = (1/12) N^2 z^2 + (2/3) delta
  auto m2 = to_orbit_coords(cp(d, "xz"));
  REQUIRE(m2.size() == 2);
  CHECK(m2.at(OrbitFunction(d, 2, 2, 0)) == ParamPoly(Rational(1, 12)));
  CHECK(m2.at(OrbitFunction(d, 0, 0, 1)) == ParamPoly(Rational(2, 3)));

  CHECK(to_orbit_coords(CoordPoly(d)).empty());
}

TEST_CASE("round trip on random polynomials, both dimensions") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (Dim d : {Dim::d3, Dim::d2}) {
    for (int t = 0; t < 15; ++t) {
      CoordPoly f(d);
      for (int i = 0; i < 5; ++i) {
        int total = static_cast<int>(rng() % 7);
        int e0 = static_cast<int>(rng() % (total + 1));
        int e1 = d == Dim::d2 ? total - e0 : static_cast<int>(rng() % (total - e0 + 1));
        int e2 = d == Dim::d2 ? 0 : total - e0 - e1;
        f.add_term(CoordMonomial(d, e0, e1, e2), ParamPoly(Rational(coef(rng))));
      }
      CoordPoly back(d);
      for (const auto& [of, c] : to_orbit_coords(f)) back += realize(of).scaled(c);
      CHECK(back == f);
    }
  }
}

TEST_CASE("orbit kernel and exhaustion properties") {
  for (Dim d : {Dim::d3, Dim::d2}) {
    for (unsigned deg = 0; deg <= 5; ++deg) {
      for (const KerMMonomial& km : ker_m_basis(d, deg)) {
        CHECK(ker_m_test(realize(OrbitFunction(km, 0))));
        CHECK(realize(OrbitFunction(km, km.weight() + 1)).is_zero());
      }
    }
  }
}

TEST_CASE("orbit basis dimension matches monomial space per degree") {
  for (unsigned deg = 0; deg <= 8; ++deg) {
    size_t orbit = 0;
    for (const KerMMonomial& km : ker_m_basis(Dim::d3, deg)) orbit += km.weight() + 1;
    CHECK(orbit == (deg + 1) * (deg + 2) / 2);
    size_t orbit2 = 0;
    for (const KerMMonomial& km : ker_m_basis(Dim::d2, deg)) orbit2 += km.weight() + 1;
    CHECK(orbit2 == deg + 1);
  }
}

TEST_CASE("to_orbit_coords carries symbolic coefficients through") {
  Dim d = Dim::d3;
  CoordPoly f(d);
  f.add_term(CoordMonomial(d, 1, 0, 1), ParamPoly::parse("a[0,1,1]"));  // a * xz
  auto m = to_orbit_coords(f);
  CHECK(m.at(OrbitFunction(d, 0, 0, 1)) == ParamPoly::parse("2/3*a[0,1,1]"));
}
