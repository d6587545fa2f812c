#include "nilnorm/sl2.hpp"

#include <algorithm>

namespace nilnorm {

CoordPoly realize(const OrbitFunction& o) {
  Dim d = o.base.dim;
  // z^mu (3D) or y^mu (2D)
  CoordPoly zf = CoordPoly::constant(d, ParamPoly(1));
  CoordPoly var = CoordPoly::variable(d, d == Dim::d3 ? 2 : 1);
  for (unsigned i = 0; i < o.base.mu; ++i) zf = zf * var;
  VectorField n = field_N(d);
  for (unsigned i = 0; i < o.l; ++i) zf = apply_derivation(n, zf);
  if (d == Dim::d3) {
    CoordPoly del = delta_invariant();
    for (unsigned i = 0; i < o.base.k; ++i) zf = zf * del;
  }
  return zf;
}

bool ker_m_test(const CoordPoly& f) { return apply_derivation(field_M(f.dim()), f).is_zero(); }

std::vector<KerMMonomial> ker_m_basis(Dim d, unsigned degree) {
  std::vector<KerMMonomial> out;
  if (d == Dim::d2) {
    out.emplace_back(d, degree);
    return out;
  }
  for (int mu = static_cast<int>(degree); mu >= 0; mu -= 2) {
    out.emplace_back(d, static_cast<unsigned>(mu), (degree - static_cast<unsigned>(mu)) / 2);
  }
  return out;
}

std::optional<long> h_weight(const CoordPoly& f) {
  if (f.is_zero()) return 0;
  VectorField h = field_H(f.dim());
  // each monomial is an H-eigenvector; collect and compare
  std::optional<long> weight;
  for (const auto& [m, c] : f.terms()) {
    long w;
    if (f.dim() == Dim::d3) {
      w = 2L * m.e[2] - 2L * m.e[0];
    } else {
      w = static_cast<long>(m.e[1]) - static_cast<long>(m.e[0]);
    }
    if (weight.has_value() && *weight != w) return std::nullopt;
    weight = w;
  }
  // realized definition: H f = weight * f
  CoordPoly hf = apply_derivation(h, f);
  CoordPoly scaled = f.scaled(ParamPoly(Rational(*weight)));
  if (!(hf == scaled)) return std::nullopt;
  return weight;
}

std::vector<ParamPoly> solve_exact(std::vector<std::vector<Rational>> a, std::vector<ParamPoly> b) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  if (rows != b.size()) throw std::logic_error("solve_exact: shape mismatch");
  size_t r = 0;
  std::vector<std::pair<size_t, size_t>> pivots;  // (row, col)
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pr = r;
    while (pr < rows && a[pr][c].is_zero()) ++pr;
    if (pr == rows) continue;
    std::swap(a[r], a[pr]);
    std::swap(b[r], b[pr]);
    Rational pv = a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] /= pv;
    b[r] = b[r].scaled(Rational(1) / pv);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rational f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= b[r].scaled(f);
    }
    pivots.emplace_back(r, c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) throw std::logic_error("solve_exact: inconsistent system");
  if (pivots.size() < cols) throw std::logic_error("solve_exact: singular system");
  std::vector<ParamPoly> x(cols);
  for (const auto& [pr, pc] : pivots) x[pc] = b[pr];
  return x;
}

namespace {

std::vector<CoordMonomial> coord_monomials(Dim d, unsigned deg) {
  std::vector<CoordMonomial> out;
  if (d == Dim::d2) {
    for (unsigned i = 0; i <= deg; ++i) out.emplace_back(d, i, deg - i);
    return out;
  }
  for (unsigned i = 0; i <= deg; ++i)
    for (unsigned j = 0; j + i <= deg; ++j) out.emplace_back(d, i, j, deg - i - j);
  return out;
}

std::vector<OrbitFunction> orbit_slots(Dim d, unsigned deg) {
  std::vector<OrbitFunction> out;
  for (const KerMMonomial& km : ker_m_basis(d, deg))
    for (unsigned l = 0; l <= km.weight(); ++l) out.emplace_back(km, l);
  return out;
}

}  // namespace

std::map<OrbitFunction, ParamPoly> to_orbit_coords(const CoordPoly& f) {
  std::map<OrbitFunction, ParamPoly> out;
  if (f.is_zero()) return out;
  Dim d = f.dim();
  for (unsigned deg = 0; deg <= f.degree(); ++deg) {
    CoordPoly part = f.homogeneous_part(deg);
    if (part.is_zero()) continue;
    std::vector<OrbitFunction> slots = orbit_slots(d, deg);
    std::vector<CoordMonomial> monos = coord_monomials(d, deg);
    // realize-matrix is square by sl2 completeness of the orbit basis
    std::vector<std::vector<Rational>> a(monos.size(), std::vector<Rational>(slots.size(), Rational(0)));
    for (size_t j = 0; j < slots.size(); ++j) {
      CoordPoly rj = realize(slots[j]);
      for (size_t i = 0; i < monos.size(); ++i) {
        auto it = rj.terms().find(monos[i]);
        if (it != rj.terms().end()) a[i][j] = it->second.constant_value();
      }
    }
    std::vector<ParamPoly> rhs(monos.size());
    for (size_t i = 0; i < monos.size(); ++i) {
      auto it = part.terms().find(monos[i]);
      if (it != part.terms().end()) rhs[i] = it->second;
    }
    std::vector<ParamPoly> x = solve_exact(std::move(a), std::move(rhs));
    for (size_t j = 0; j < slots.size(); ++j)
      if (!x[j].is_zero()) out[slots[j]] = x[j];
  }
  return out;
}

}  // namespace nilnorm
