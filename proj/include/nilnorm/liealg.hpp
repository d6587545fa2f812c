#pragma once

#include <map>
#include <string>

#include "nilnorm/cgc.hpp"

namespace nilnorm {

/// Basis element A^l_{mu,k} = (N^l z^mu) delta^k E of the 3D Euler family,
/// or A^l_mu = (N^l y^mu) E in 2D (k identically 0).
struct OrbitElement {
  Dim dim = Dim::d3;
  int l = 0;
  int mu = 0;
  int k = 0;

  OrbitElement() = default;
  OrbitElement(Dim d, int l_, int mu_, int k_ = 0) : dim(d), l(l_), mu(mu_), k(k_) {
    if (l < 0 || mu < 0 || k < 0) throw std::invalid_argument("OrbitElement: negative index");
    if (d == Dim::d2 && k != 0) throw std::invalid_argument("OrbitElement: delta power in 2D");
    if (l > orbit_top()) throw std::invalid_argument("OrbitElement: l beyond orbit");
  }

  int orbit_top() const { return dim == Dim::d3 ? 2 * mu : mu; }
  /// delta_0 grade: mu + 2k (3D), mu (2D).
  int delta0() const { return dim == Dim::d3 ? mu + 2 * k : mu; }
  /// H-eigenvalue of the coefficient function.
  int h_weight() const { return dim == Dim::d3 ? 2 * mu - 2 * l : mu - 2 * l; }

  OrbitFunction function() const {
    return OrbitFunction(dim, static_cast<unsigned>(l), static_cast<unsigned>(mu), static_cast<unsigned>(k));
  }

  friend bool operator==(const OrbitElement& a, const OrbitElement& b) {
    return a.dim == b.dim && a.l == b.l && a.mu == b.mu && a.k == b.k;
  }
  /// Order by (delta0 grade, mu, k, l): deterministic listing for output.
  friend bool operator<(const OrbitElement& a, const OrbitElement& b) {
    return std::tuple(a.delta0(), a.mu, a.k, a.l) < std::tuple(b.delta0(), b.mu, b.k, b.l);
  }

  /// "A[l,mu,k]" (3D) or "A[l,m]" (2D).
  std::string str() const;
  static OrbitElement parse(Dim d, std::string_view text);
};

/// Element of the Euler-family Lie algebra: finite sum of basis elements with
/// ParamPoly coefficients, optionally offset by the distinguished nilpotent N.
class LieComb {
 public:
  explicit LieComb(Dim d = Dim::d3, bool with_n = false) : dim_(d), n_flag_(with_n) {}

  static LieComb nilpotent(Dim d) { return LieComb(d, true); }

  Dim dim() const { return dim_; }
  bool n_flag() const { return n_flag_; }
  void set_n_flag(bool f) { n_flag_ = f; }
  const std::map<OrbitElement, ParamPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty() && !n_flag_; }

  ParamPoly coeff(const OrbitElement& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ParamPoly() : it->second;
  }
  void add_term(const OrbitElement& e, const ParamPoly& c);
  void set_term(const OrbitElement& e, const ParamPoly& c);

  LieComb operator-() const;
  LieComb& operator+=(const LieComb& o);
  LieComb& operator-=(const LieComb& o);
  LieComb scaled(const ParamPoly& c) const;
  friend LieComb operator+(LieComb a, const LieComb& b) { return a += b; }
  friend LieComb operator-(LieComb a, const LieComb& b) { return a -= b; }
  friend bool operator==(const LieComb& a, const LieComb& b) {
    return a.dim_ == b.dim_ && a.n_flag_ == b.n_flag_ && a.terms_ == b.terms_;
  }

  /// Keep only terms with delta0 grade <= gmax (N flag untouched).
  LieComb truncated(int gmax) const;
  /// Largest delta0 grade present (0 when empty).
  int max_delta0() const;

  std::string str() const;
  std::string json() const;
  static LieComb from_json(const std::string& text);

 private:
  Dim dim_;
  bool n_flag_;
  std::map<OrbitElement, ParamPoly> terms_;
};

/// Closed-form bracket of two basis elements.
/// 3D: (delta0(e2) - delta0(e1)) * sum over p+k=l1+l2, p=2 rho of
///     lambda(rho) A^k_{mu1+mu2-p, k1+k2+rho};
/// 2D: (mu2 - mu1) * C(mu1+mu2-l1-l2, mu1-l1)/C(mu1+mu2, mu1) * A^{l1+l2}_{mu1+mu2}.
/// Identical to oracle_bracket of the realized fields.
LieComb bracket(const OrbitElement& e1, const OrbitElement& e2);

/// Bracket truncated to terms with delta power <= kmax (3D only). At
/// kmax = k1+k2 this is the single-term leading formula with lambda(0).
LieComb bracket_filtered(const OrbitElement& e1, const OrbitElement& e2, int kmax);

/// Bilinear extension; N flags enter via [N, A^l] = A^{l+1} (zero at the
/// orbit top). The result never carries an N flag.
LieComb comb_bracket(const LieComb& u, const LieComb& v);

/// Realization: sum coeff * realize(orbit function) * E, plus N when flagged.
VectorField comb_to_vectorfield(const LieComb& u);

/// Inverse of comb_to_vectorfield for Euler-type fields (plus optional N).
LieComb vectorfield_to_comb(const VectorField& v, bool expect_n);

}  // namespace nilnorm
