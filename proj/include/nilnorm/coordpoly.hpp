#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "nilnorm/parampoly.hpp"

namespace nilnorm {

enum class Dim : int { d2 = 2, d3 = 3 };

inline int dim_count(Dim d) { return static_cast<int>(d); }

/// Power product of the coordinates x, y (and z in 3D).
struct CoordMonomial {
  Dim dim = Dim::d3;
  std::array<unsigned, 3> e{0, 0, 0};  // e[2] stays 0 in 2D

  CoordMonomial() = default;
  CoordMonomial(Dim d, unsigned ex, unsigned ey, unsigned ez = 0) : dim(d), e{ex, ey, ez} {
    if (d == Dim::d2 && ez != 0) throw std::invalid_argument("CoordMonomial: z exponent in 2D");
  }

  unsigned total_degree() const { return e[0] + e[1] + e[2]; }

  friend bool operator==(const CoordMonomial& a, const CoordMonomial& b) { return a.dim == b.dim && a.e == b.e; }
  friend bool operator<(const CoordMonomial& a, const CoordMonomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a.e < b.e;
  }
};

/// Polynomial in the coordinates with ParamPoly coefficients, canonical
/// (no zero terms). All operands of one computation share the dimension tag.
class CoordPoly {
 public:
  explicit CoordPoly(Dim d = Dim::d3) : dim_(d) {}
  CoordPoly(Dim d, const CoordMonomial& m, ParamPoly c) : dim_(d) { add_term(m, std::move(c)); }

  static CoordPoly constant(Dim d, const ParamPoly& c) { return CoordPoly(d, CoordMonomial(d, 0, 0, 0), c); }
  static CoordPoly variable(Dim d, int axis);  // 0 = x, 1 = y, 2 = z

  Dim dim() const { return dim_; }
  const std::map<CoordMonomial, ParamPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;  // max total exponent (0 for the zero polynomial)
  bool is_homogeneous(unsigned d) const;

  void add_term(const CoordMonomial& m, ParamPoly c);

  CoordPoly operator-() const;
  CoordPoly& operator+=(const CoordPoly& o);
  CoordPoly& operator-=(const CoordPoly& o);
  CoordPoly operator*(const CoordPoly& o) const;
  CoordPoly scaled(const ParamPoly& c) const;
  CoordPoly derivative(int axis) const;
  /// Terms of total degree d only.
  CoordPoly homogeneous_part(unsigned d) const;

  friend CoordPoly operator+(CoordPoly a, const CoordPoly& b) { return a += b; }
  friend CoordPoly operator-(CoordPoly a, const CoordPoly& b) { return a -= b; }
  friend bool operator==(const CoordPoly& a, const CoordPoly& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }
  friend bool operator!=(const CoordPoly& a, const CoordPoly& b) { return !(a == b); }

  static CoordPoly parse(Dim d, std::string_view text);
  std::string str() const;

 private:
  Dim dim_;
  std::map<CoordMonomial, ParamPoly> terms_;
};

/// Polynomial vector field: one coordinate polynomial per component.
struct VectorField {
  Dim dim = Dim::d3;
  std::vector<CoordPoly> comp;

  explicit VectorField(Dim d = Dim::d3) : dim(d), comp(dim_count(d), CoordPoly(d)) {}

  bool is_zero() const;
  VectorField operator-() const;
  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  VectorField scaled(const ParamPoly& c) const;
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend bool operator==(const VectorField& a, const VectorField& b) { return a.dim == b.dim && a.comp == b.comp; }
};

/// Sum_i v_i dF/dx_i, the action of v as a derivation.
CoordPoly apply_derivation(const VectorField& v, const CoordPoly& f);

/// Componentwise [v,w]_i = sum_j (v_j dw_i/dx_j - w_j dv_i/dx_j), the
/// ground-truth Lie bracket. Sign fixed so that oracle_bracket(M, N) = H
/// for the standard triples below.
VectorField oracle_bracket(const VectorField& v, const VectorField& w);

/// Recognizes v = F * E (E the Euler field); returns F, or nullopt.
std::optional<CoordPoly> euler_factor(const VectorField& v);

/// F * E as a vector field.
VectorField euler_field(const CoordPoly& f);

/// The standard nilpotent triple and Euler field.
/// 2D: N = x d/dy, H = y d/dy - x d/dx, M = y d/dx, E = x d/dx + y d/dy.
/// 3D: N = x d/dy + 2y d/dz, H = 2z d/dz - 2x d/dx, M = z d/dy + 2y d/dx.
VectorField field_N(Dim d);
VectorField field_H(Dim d);
VectorField field_M(Dim d);
VectorField field_E(Dim d);

/// The quadratic invariant xz - y^2 (3D).
CoordPoly delta_invariant();

}  // namespace nilnorm
