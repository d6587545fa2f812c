#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nilnorm/coordpoly.hpp"

namespace nilnorm {

/// Generator of ker ad_M as a ring: z^mu * delta^k in 3D (ker M = R[z, delta]),
/// y^mu in 2D (k always 0).
struct KerMMonomial {
  Dim dim = Dim::d3;
  unsigned mu = 0;
  unsigned k = 0;

  KerMMonomial() = default;
  KerMMonomial(Dim d, unsigned mu_, unsigned k_ = 0) : dim(d), mu(mu_), k(k_) {
    if (d == Dim::d2 && k_ != 0) throw std::invalid_argument("KerMMonomial: delta power in 2D");
  }

  /// H-eigenvalue: 2*mu in 3D, mu in 2D.
  unsigned weight() const { return dim == Dim::d3 ? 2 * mu : mu; }
  /// Coordinate degree: mu + 2k in 3D, mu in 2D.
  unsigned degree() const { return dim == Dim::d3 ? mu + 2 * k : mu; }

  friend bool operator==(const KerMMonomial& a, const KerMMonomial& b) {
    return a.dim == b.dim && a.mu == b.mu && a.k == b.k;
  }
  friend auto operator<=>(const KerMMonomial& a, const KerMMonomial& b) {
    return std::tie(a.dim, a.mu, a.k) <=> std::tie(b.dim, b.mu, b.k);
  }
};

/// N^l applied to a kernel monomial's z-power part: realizes as
/// (N^l z^mu) delta^k. Valid for 0 <= l <= weight; beyond the weight the
/// orbit is exhausted and the realization is the zero polynomial.
struct OrbitFunction {
  KerMMonomial base;
  unsigned l = 0;

  OrbitFunction() = default;
  OrbitFunction(KerMMonomial b, unsigned l_) : base(b), l(l_) {}
  OrbitFunction(Dim d, unsigned l_, unsigned mu, unsigned k = 0) : base(d, mu, k), l(l_) {}

  bool within_orbit() const { return l <= base.weight(); }

  friend bool operator==(const OrbitFunction& a, const OrbitFunction& b) { return a.base == b.base && a.l == b.l; }
  friend auto operator<=>(const OrbitFunction& a, const OrbitFunction& b) {
    return std::tie(a.base, a.l) <=> std::tie(b.base, b.l);
  }
};

/// Exact polynomial realization; zero when the orbit is exhausted (l > weight).
CoordPoly realize(const OrbitFunction& o);

/// True iff M f = 0.
bool ker_m_test(const CoordPoly& f);

/// All kernel monomials of the given coordinate degree, descending mu.
std::vector<KerMMonomial> ker_m_basis(Dim d, unsigned degree);

/// The H-eigenvalue of f, or nullopt when f mixes eigenspaces (0 for f = 0).
std::optional<long> h_weight(const CoordPoly& f);

/// Unique expansion f = sum c_o * realize(o), solved exactly per homogeneous
/// degree over the monomial basis (the system is square and invertible; an
/// inconsistency is an internal-invariant failure).
std::map<OrbitFunction, ParamPoly> to_orbit_coords(const CoordPoly& f);

/// Exact linear solve A x = b with a Rational matrix and ParamPoly right-hand
/// side (Gaussian elimination with exact pivots). Throws std::logic_error on a
/// singular or inconsistent system.
std::vector<ParamPoly> solve_exact(std::vector<std::vector<Rational>> a, std::vector<ParamPoly> b);

}  // namespace nilnorm
