#include "nilnorm/verify.hpp"

#include <atomic>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

namespace nilnorm {

namespace {

std::string ints(std::initializer_list<long> xs) {
  std::ostringstream out;
  out << "(";
  bool first = true;
  for (long x : xs) {
    if (!first) out << ",";
    first = false;
    out << x;
  }
  out << ")";
  return out.str();
}

CoordPoly random_coordpoly(Dim d, int max_deg, std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-4, 4);
  CoordPoly f(d);
  int terms = 1 + static_cast<int>(rng() % 4);
  for (int t = 0; t < terms; ++t) {
    int total = deg(rng);
    int ex = static_cast<int>(rng() % (total + 1));
    int ey = static_cast<int>(rng() % (total - ex + 1));
    int ez = (d == Dim::d3) ? total - ex - ey : 0;
    if (d == Dim::d2) ey = total - ex;
    int c = coef(rng);
    if (c == 0) c = 1;
    f.add_term(CoordMonomial(d, ex, ey, ez), ParamPoly(Rational(c)));
  }
  return f;
}

VectorField random_field(Dim d, int max_deg, std::mt19937& rng) {
  VectorField v(d);
  for (int i = 0; i < dim_count(d); ++i) v.comp[i] = random_coordpoly(d, max_deg, rng);
  return v;
}

}  // namespace

CheckResult check_binomial_identity(int max_mn) {
  for (int m = 0; m <= max_mn; ++m)
    for (int n = 0; n <= max_mn; ++n)
      for (int p = 0; p <= std::min(m, n); ++p) {
        Rational lhs(0);
        for (int i = 0; i <= p; ++i) lhs += binom(m - i, m - p) * binom(n - (p - i), n - p);
        if (lhs != binom(m + n - p + 1, p))
          return {"binomial-identity", false, "mismatch at " + ints({m, n, p})};
      }
  return {"binomial-identity", true, ""};
}

CheckResult check_pascal(int max_a) {
  for (long a = 1; a <= max_a; ++a)
    for (long b = 1; b <= a; ++b)
      if (binom(a, b) != binom(a - 1, b - 1) + binom(a - 1, b))
        return {"pascal-recurrence", false, "mismatch at " + ints({a, b})};
  return {"pascal-recurrence", true, ""};
}

CheckResult check_sl2_relations() {
  for (Dim d : {Dim::d2, Dim::d3}) {
    VectorField n = field_N(d), h = field_H(d), m = field_M(d), e = field_E(d);
    if (!(oracle_bracket(m, n) == h)) return {"sl2-relations", false, "[M,N] != H"};
    if (!(oracle_bracket(h, n) == n.scaled(ParamPoly(Rational(-2))))) return {"sl2-relations", false, "[H,N] != -2N"};
    if (!(oracle_bracket(h, m) == m.scaled(ParamPoly(Rational(2))))) return {"sl2-relations", false, "[H,M] != 2M"};
    for (const VectorField& w : {n, m, h})
      if (!oracle_bracket(e, w).is_zero()) return {"sl2-relations", false, "[E, .] != 0"};
  }
  return {"sl2-relations", true, ""};
}

CheckResult check_jacobi(int trials, unsigned seed) {
  std::mt19937 rng(seed);
  for (int t = 0; t < trials; ++t) {
    Dim d = (t % 2 == 0) ? Dim::d3 : Dim::d2;
    VectorField u = random_field(d, 3, rng), v = random_field(d, 3, rng), w = random_field(d, 3, rng);
    VectorField jac = oracle_bracket(oracle_bracket(u, v), w);
    jac += oracle_bracket(oracle_bracket(v, w), u);
    jac += oracle_bracket(oracle_bracket(w, u), v);
    if (!jac.is_zero()) return {"jacobi-identity", false, "violation at trial " + std::to_string(t)};
  }
  return {"jacobi-identity", true, ""};
}

CheckResult check_euler_bracket_law(int trials, unsigned seed) {
  std::mt19937 rng(seed);
  for (int t = 0; t < trials; ++t) {
    Dim d = (t % 2 == 0) ? Dim::d3 : Dim::d2;
    // delta0-homogeneous coefficient functions
    int df = 1 + static_cast<int>(rng() % 3), dg = 1 + static_cast<int>(rng() % 3);
    CoordPoly f = random_coordpoly(d, df, rng).homogeneous_part(df);
    CoordPoly g = random_coordpoly(d, dg, rng).homogeneous_part(dg);
    VectorField lhs = oracle_bracket(euler_field(f), euler_field(g));
    VectorField rhs = euler_field((f * g).scaled(ParamPoly(Rational(dg - df))));
    if (!(lhs == rhs)) return {"euler-bracket-law", false, "violation at trial " + std::to_string(t)};
  }
  return {"euler-bracket-law", true, ""};
}

CheckResult check_cgc_orthogonality(int max_mn) {
  for (int m = 0; m <= max_mn; ++m)
    for (int n = 0; n <= max_mn; ++n)
      for (int p1 = 0; p1 <= std::min(m, n); ++p1)
        for (int k1 = 0; k1 <= m + n - 2 * p1; ++k1)
          for (int p2 = 0; p2 <= std::min(m, n); ++p2) {
            int k2 = p1 + k1 - p2;
            if (k2 < 0 || k2 > m + n - 2 * p2) continue;
            Rational sum(0);
            for (int i = 0; i <= p1 + k1; ++i) {
              int j = p1 + k1 - i;
              if (i > m || j > n || j < 0) continue;
              sum += cgc_3j(m, n, p1, i, j, k1) * cgc_3j(m, n, p2, i, j, k2) * binom(m, i) * binom(n, j);
            }
            Rational expect(0);
            if (p1 == p2 && k1 == k2) expect = binom(m + n - 2 * p1, k1) * transvectant_norm_sq(m, n, p1);
            if (sum != expect)
              return {"cgc-orthogonality", false, "mismatch at " + ints({m, n, p1, k1, p2, k2})};
          }
  return {"cgc-orthogonality", true, ""};
}

CheckResult check_inversion_roundtrip(int max_mn) {
  for (int m = 0; m <= max_mn; ++m)
    for (int n = 0; n <= max_mn; ++n)
      for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j) {
          std::map<std::pair<int, int>, Rational> acc;
          for (const auto& [pk, c] : invert_tensor(m, n, i, j).terms) {
            for (const auto& [ij, w] : orbit_transvectant(m, n, pk.first, pk.second).terms) {
              acc[ij] += c * w;
              if (acc[ij].is_zero()) acc.erase(ij);
            }
          }
          std::map<std::pair<int, int>, Rational> expect{{{i, j}, Rational(1)}};
          if (acc != expect) return {"inversion-roundtrip", false, "mismatch at " + ints({m, n, i, j})};
        }
  return {"inversion-roundtrip", true, ""};
}

CheckResult check_norm_consistency(int max_mn) {
  for (int m = 0; m <= max_mn; ++m)
    for (int n = 0; n <= max_mn; ++n)
      for (int p = 0; p <= std::min(m, n); ++p) {
        Rational direct(0);
        for (int i = 0; i <= p; ++i) {
          Rational den = binom(m, i) * binom(n, p - i);
          if (den.is_zero()) continue;
          direct += binom(p, i) * binom(p, i) / den;
        }
        if (direct != transvectant_norm_sq(m, n, p))
          return {"norm-consistency", false, "mismatch at " + ints({m, n, p})};
      }
  return {"norm-consistency", true, ""};
}

CheckResult check_contraction_kernel(int max_mu) {
  // realize pi . transvectant on z-powers; odd p contract to 0, even p = 2 rho
  // to the closed-form multiple of z^(mu1+mu2-p) delta^rho; all in ker M.
  const Dim d = Dim::d3;
  for (int mu1 = 0; mu1 <= max_mu; ++mu1)
    for (int mu2 = 0; mu2 <= max_mu; ++mu2) {
      int m1 = 2 * mu1, m2 = 2 * mu2;
      for (int p = 0; p <= std::min(m1, m2); ++p) {
        CoordPoly acc(d);
        for (const auto& [ij, c] : transvectant(m1, m2, p).terms) {
          // v^(i) = N^i z^mu1 / i!, contracted by multiplication
          CoordPoly vi = realize(OrbitFunction(d, ij.first, mu1));
          CoordPoly wj = realize(OrbitFunction(d, ij.second, mu2));
          acc += (vi * wj).scaled(ParamPoly(c / Rational(Integer(factorial(ij.first) * factorial(ij.second)))));
        }
        if (!ker_m_test(acc)) return {"contraction-kernel", false, "not in ker M at " + ints({mu1, mu2, p})};
        if (p % 2 != 0) {
          if (!acc.is_zero()) return {"contraction-kernel", false, "odd p nonzero at " + ints({mu1, mu2, p})};
          continue;
        }
        int rho = p / 2;
        Rational den = binom(m1, p) * binom(m2, p) * binom(p, rho);
        Rational c = den.is_zero() ? Rational(0)
                                   : binom(mu1 + mu2 - rho, rho) * binom(mu1, rho) * binom(mu2, rho) / den;
        for (int q = 0; q < p; ++q) c *= Rational(2);
        CoordPoly expect = realize(OrbitFunction(d, 0, mu1 + mu2 - p, rho)).scaled(ParamPoly(c));
        if (!(acc == expect)) return {"contraction-kernel", false, "closed form mismatch at " + ints({mu1, mu2, p})};
      }
    }
  return {"contraction-kernel", true, ""};
}

CheckResult check_lambda_rho0(int max_mu) {
  for (int mu1 = 0; mu1 <= max_mu; ++mu1)
    for (int mu2 = 0; mu2 <= max_mu; ++mu2)
      for (int l1 = 0; l1 <= 2 * mu1; ++l1)
        for (int l2 = 0; l2 <= 2 * mu2; ++l2) {
          Rational closed = binom(2 * mu1 + 2 * mu2 - l1 - l2, 2 * mu1 - l1) / binom(2 * mu1 + 2 * mu2, 2 * mu1);
          if (lambda_coeff(l1, mu1, l2, mu2, 0) != closed)
            return {"lambda-rho0-closed-form", false, "mismatch at " + ints({l1, mu1, l2, mu2})};
        }
  return {"lambda-rho0-closed-form", true, ""};
}

CheckResult check_lambda_l1zero(int max_mu) {
  for (int mu1 = 0; mu1 <= max_mu; ++mu1)
    for (int mu2 = 0; mu2 <= max_mu; ++mu2)
      for (int l2 = 0; l2 <= 2 * mu2; ++l2)
        for (int rho = 0; 2 * rho <= l2; ++rho) {
          int p = 2 * rho, m1 = 2 * mu1, m2 = 2 * mu2;
          Rational den = binom(p, rho) * binom(m1 + m2 - 2 * p, l2 - p) * binom(m1 + m2 - p + 1, p);
          Rational closed(0);
          if (!den.is_zero()) {
            closed = Rational(factorial(p)) * binom(mu1, rho) * binom(mu2, rho) * binom(l2, p) *
                     binom(m2 - p, m2 - l2) * binom(mu1 + mu2 - rho, rho) / den;
            for (int q = 0; q < p; ++q) closed *= Rational(2);
          }
          if (lambda_coeff(0, mu1, l2, mu2, rho) != closed)
            return {"lambda-l1zero-closed-form", false, "mismatch at " + ints({mu1, l2, mu2, rho})};
        }
  return {"lambda-l1zero-closed-form", true, ""};
}

CheckResult check_product_formula(Dim d, int max_mu) {
  for (int mu1 = 0; mu1 <= max_mu; ++mu1)
    for (int mu2 = 0; mu2 <= max_mu; ++mu2) {
      int top1 = d == Dim::d3 ? 2 * mu1 : mu1;
      int top2 = d == Dim::d3 ? 2 * mu2 : mu2;
      for (int l1 = 0; l1 <= top1; ++l1)
        for (int l2 = 0; l2 <= top2; ++l2) {
          OrbitFunction o1(d, l1, mu1), o2(d, l2, mu2);
          CoordPoly direct = realize(o1) * realize(o2);
          CoordPoly formula(d);
          for (const auto& [of, c] : product_orbit(d, o1, o2)) formula += realize(of).scaled(ParamPoly(c));
          if (!(direct == formula))
            return {std::string("product-formula-") + (d == Dim::d3 ? "3d" : "2d"), false,
                    "mismatch at " + ints({l1, mu1, l2, mu2})};
        }
    }
  return {std::string("product-formula-") + (d == Dim::d3 ? "3d" : "2d"), true, ""};
}

CheckResult check_bracket_oracle(Dim d, int max_mu, int max_k) {
  std::string name = std::string("bracket-oracle-") + (d == Dim::d3 ? "3d" : "2d");
  for (int mu1 = 0; mu1 <= max_mu; ++mu1)
    for (int mu2 = 0; mu2 <= max_mu; ++mu2)
      for (int k1 = 0; k1 <= (d == Dim::d3 ? max_k : 0); ++k1)
        for (int k2 = 0; k2 <= (d == Dim::d3 ? max_k : 0); ++k2) {
          int top1 = d == Dim::d3 ? 2 * mu1 : mu1;
          int top2 = d == Dim::d3 ? 2 * mu2 : mu2;
          for (int l1 = 0; l1 <= top1; ++l1)
            for (int l2 = 0; l2 <= top2; ++l2) {
              OrbitElement e1(d, l1, mu1, k1), e2(d, l2, mu2, k2);
              VectorField closed = comb_to_vectorfield(bracket(e1, e2));
              LieComb u(d), w(d);
              u.add_term(e1, ParamPoly(Rational(1)));
              w.add_term(e2, ParamPoly(Rational(1)));
              VectorField direct = oracle_bracket(comb_to_vectorfield(u), comb_to_vectorfield(w));
              if (!(closed == direct))
                return {name, false, "mismatch at " + ints({l1, mu1, k1, l2, mu2, k2})};
            }
        }
  return {name, true, ""};
}

CheckResult check_orbit_roundtrip(Dim d, int max_degree, int trials, unsigned seed) {
  std::mt19937 rng(seed);
  std::string name = std::string("orbit-roundtrip-") + (d == Dim::d3 ? "3d" : "2d");
  for (int t = 0; t < trials; ++t) {
    CoordPoly f = random_coordpoly(d, max_degree, rng);
    CoordPoly back(d);
    for (const auto& [of, c] : to_orbit_coords(f)) back += realize(of).scaled(c);
    if (!(back == f)) return {name, false, "round trip failed at trial " + std::to_string(t)};
  }
  return {name, true, ""};
}

std::vector<CheckResult> run_verification(bool quick) {
  return run_verification(quick ? VerifyRanges::quick() : VerifyRanges{});
}

std::vector<CheckResult> run_verification(const VerifyRanges& r) {
  std::vector<std::function<CheckResult()>> checks = {
      [&] { return check_binomial_identity(std::max(10, 2 * r.max_mn)); },
      [&] { return check_pascal(30); },
      [] { return check_sl2_relations(); },
      [&] { return check_jacobi(r.trials, 20240901u); },
      [&] { return check_euler_bracket_law(r.trials, 20240902u); },
      [&] { return check_cgc_orthogonality(r.max_mn); },
      [&] { return check_inversion_roundtrip(r.max_mn); },
      [&] { return check_norm_consistency(r.max_mn + 2); },
      [&] { return check_contraction_kernel(std::min(r.max_mu, 4)); },
      [&] { return check_lambda_rho0(r.max_mn); },
      [&] { return check_lambda_l1zero(r.max_mn); },
      [&] { return check_product_formula(Dim::d3, r.max_mu); },
      [&] { return check_product_formula(Dim::d2, r.max_mu_2d); },
      [&] { return check_bracket_oracle(Dim::d3, std::min(r.max_mu, 4), 2); },
      [&] { return check_bracket_oracle(Dim::d2, r.max_mu_2d, 0); },
      [&] { return check_orbit_roundtrip(Dim::d3, 6, std::max(6, r.trials / 3), 20240903u); },
      [&] { return check_orbit_roundtrip(Dim::d2, 6, std::max(6, r.trials / 3), 20240904u); },
  };

  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("NILNORM_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
  }
  std::vector<CheckResult> results(checks.size());
  if (hw <= 1) {
    for (size_t i = 0; i < checks.size(); ++i) results[i] = checks[i]();
    return results;
  }
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  for (unsigned t = 0; t < std::min<size_t>(hw, checks.size()); ++t) {
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < checks.size(); i = next.fetch_add(1)) results[i] = checks[i]();
    });
  }
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace nilnorm
