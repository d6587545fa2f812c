#include "nilnorm/coordpoly.hpp"

#include <cctype>
#include <sstream>

namespace nilnorm {

CoordPoly CoordPoly::variable(Dim d, int axis) {
  if (axis < 0 || axis >= dim_count(d)) throw std::invalid_argument("CoordPoly::variable: axis out of range");
  CoordMonomial m(d, axis == 0 ? 1 : 0, axis == 1 ? 1 : 0, axis == 2 ? 1 : 0);
  return CoordPoly(d, m, ParamPoly(1));
}

unsigned CoordPoly::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

bool CoordPoly::is_homogeneous(unsigned d) const {
  for (const auto& [m, c] : terms_)
    if (m.total_degree() != d) return false;
  return true;
}

void CoordPoly::add_term(const CoordMonomial& m, ParamPoly c) {
  if (m.dim != dim_) throw std::invalid_argument("CoordPoly: dimension mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CoordPoly CoordPoly::operator-() const {
  CoordPoly r(dim_);
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

CoordPoly& CoordPoly::operator+=(const CoordPoly& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("CoordPoly: dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CoordPoly& CoordPoly::operator-=(const CoordPoly& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("CoordPoly: dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CoordPoly CoordPoly::operator*(const CoordPoly& o) const {
  if (o.dim_ != dim_) throw std::invalid_argument("CoordPoly: dimension mismatch");
  CoordPoly r(dim_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      CoordMonomial m(dim_, m1.e[0] + m2.e[0], m1.e[1] + m2.e[1], m1.e[2] + m2.e[2]);
      r.add_term(m, c1 * c2);
    }
  }
  return r;
}

CoordPoly CoordPoly::scaled(const ParamPoly& c) const {
  CoordPoly r(dim_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  return r;
}

CoordPoly CoordPoly::derivative(int axis) const {
  CoordPoly r(dim_);
  for (const auto& [m, c] : terms_) {
    if (m.e[axis] == 0) continue;
    CoordMonomial dm = m;
    dm.e[axis] -= 1;
    r.add_term(dm, c.scaled(Rational(static_cast<long>(m.e[axis]))));
  }
  return r;
}

CoordPoly CoordPoly::homogeneous_part(unsigned d) const {
  CoordPoly r(dim_);
  for (const auto& [m, c] : terms_)
    if (m.total_degree() == d) r.add_term(m, c);
  return r;
}

bool VectorField::is_zero() const {
  for (const auto& c : comp)
    if (!c.is_zero()) return false;
  return true;
}

VectorField VectorField::operator-() const {
  VectorField r(dim);
  for (int i = 0; i < dim_count(dim); ++i) r.comp[i] = -comp[i];
  return r;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  if (o.dim != dim) throw std::invalid_argument("VectorField: dimension mismatch");
  for (int i = 0; i < dim_count(dim); ++i) comp[i] += o.comp[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  if (o.dim != dim) throw std::invalid_argument("VectorField: dimension mismatch");
  for (int i = 0; i < dim_count(dim); ++i) comp[i] -= o.comp[i];
  return *this;
}

VectorField VectorField::scaled(const ParamPoly& c) const {
  VectorField r(dim);
  for (int i = 0; i < dim_count(dim); ++i) r.comp[i] = comp[i].scaled(c);
  return r;
}

CoordPoly apply_derivation(const VectorField& v, const CoordPoly& f) {
  if (v.dim != f.dim()) throw std::invalid_argument("apply_derivation: dimension mismatch");
  CoordPoly r(f.dim());
  for (int i = 0; i < dim_count(v.dim); ++i) r += v.comp[i] * f.derivative(i);
  return r;
}

VectorField oracle_bracket(const VectorField& v, const VectorField& w) {
  if (v.dim != w.dim) throw std::invalid_argument("oracle_bracket: dimension mismatch");
  VectorField r(v.dim);
  for (int i = 0; i < dim_count(v.dim); ++i) r.comp[i] = apply_derivation(v, w.comp[i]) - apply_derivation(w, v.comp[i]);
  return r;
}

VectorField euler_field(const CoordPoly& f) {
  VectorField r(f.dim());
  for (int i = 0; i < dim_count(f.dim()); ++i) r.comp[i] = f * CoordPoly::variable(f.dim(), i);
  return r;
}

std::optional<CoordPoly> euler_factor(const VectorField& v) {
  // Every monomial of v_i must be divisible by x_i; the quotients must agree.
  std::optional<CoordPoly> f;
  for (int i = 0; i < dim_count(v.dim); ++i) {
    CoordPoly q(v.dim);
    for (const auto& [m, c] : v.comp[i].terms()) {
      if (m.e[i] == 0) {
        if (v.comp[i].is_zero()) continue;
        // a monomial without x_i: only acceptable if the whole component vanishes
        return std::nullopt;
      }
      CoordMonomial qm = m;
      qm.e[i] -= 1;
      q.add_term(qm, c);
    }
    if (!v.comp[i].is_zero() || !q.is_zero()) {
      if (f.has_value()) {
        if (!(*f == q)) return std::nullopt;
      } else {
        f = q;
      }
    }
  }
  if (!f.has_value()) f = CoordPoly(v.dim);  // zero field = 0 * E
  // cross-check against components that were identically zero
  if (!(euler_field(*f) == v)) return std::nullopt;
  return f;
}

namespace {

VectorField linear_field(Dim d, std::initializer_list<std::pair<int, std::pair<int, long>>> entries) {
  // entries: component index -> (variable axis, coefficient)
  VectorField v(d);
  for (const auto& [ci, t] : entries) {
    v.comp[ci] += CoordPoly::variable(d, t.first).scaled(ParamPoly(Rational(t.second)));
  }
  return v;
}

}  // namespace

VectorField field_N(Dim d) {
  if (d == Dim::d2) return linear_field(d, {{1, {0, 1}}});                  // x d/dy
  return linear_field(d, {{1, {0, 1}}, {2, {1, 2}}});                       // x d/dy + 2y d/dz
}

VectorField field_H(Dim d) {
  if (d == Dim::d2) return linear_field(d, {{1, {1, 1}}, {0, {0, -1}}});    // y d/dy - x d/dx
  return linear_field(d, {{2, {2, 2}}, {0, {0, -2}}});                      // 2z d/dz - 2x d/dx
}

VectorField field_M(Dim d) {
  if (d == Dim::d2) return linear_field(d, {{0, {1, 1}}});                  // y d/dx
  return linear_field(d, {{1, {2, 1}}, {0, {1, 2}}});                       // z d/dy + 2y d/dx
}

VectorField field_E(Dim d) {
  VectorField v(d);
  for (int i = 0; i < dim_count(d); ++i) v.comp[i] = CoordPoly::variable(d, i);
  return v;
}

CoordPoly delta_invariant() {
  Dim d = Dim::d3;
  CoordPoly xz = CoordPoly::variable(d, 0) * CoordPoly::variable(d, 2);
  CoordPoly y2 = CoordPoly::variable(d, 1) * CoordPoly::variable(d, 1);
  return xz - y2;
}

namespace {

int axis_of(Dim d, char c) {
  switch (c) {
    case 'x': return 0;
    case 'y': return 1;
    case 'z': return d == Dim::d3 ? 2 : -1;
    default: return -1;
  }
}

}  // namespace

CoordPoly CoordPoly::parse(Dim d, std::string_view text) {
  // mirror of the parameter-polynomial grammar with variables x, y, z
  size_t pos = 0;
  auto fail = [&](const std::string& what) -> void {
    throw std::invalid_argument("CoordPoly::parse: " + what + " at position " + std::to_string(pos));
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto peek = [&]() -> char {
    skip();
    return pos < text.size() ? text[pos] : '\0';
  };
  auto accept = [&](char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  };
  auto digits = [&]() -> std::string {
    skip();
    std::string out;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) out.push_back(text[pos++]);
    if (out.empty()) fail("digits expected");
    return out;
  };

  CoordPoly out(d);
  bool neg = accept('-');
  if (!neg) accept('+');
  while (true) {
    Rational coeff(1);
    bool saw = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      if (accept('/'))
        coeff = Rational(Integer(num), Integer(digits()));
      else
        coeff = Rational(Integer(num));
      saw = true;
      accept('*');
    }
    CoordMonomial m(d, 0, 0, 0);
    while (true) {
      char c = peek();
      int ax = axis_of(d, c);
      if (ax < 0) break;
      ++pos;
      unsigned e = 1;
      if (accept('^')) e = static_cast<unsigned>(std::stoul(digits()));
      m.e[ax] += e;
      saw = true;
      accept('*');
    }
    if (!saw) fail("term expected");
    out.add_term(m, ParamPoly(neg ? -coeff : coeff));
    skip();
    if (pos >= text.size()) break;
    if (accept('+'))
      neg = false;
    else if (accept('-'))
      neg = true;
    else
      fail("'+' or '-' expected");
  }
  return out;
}

std::string CoordPoly::str() const {
  if (terms_.empty()) return "0";
  static const char* names = "xyz";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (int ax = 0; ax < 3; ++ax) {
      if (m.e[ax] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono.push_back(names[ax]);
      if (m.e[ax] > 1) mono += "^" + std::to_string(m.e[ax]);
    }
    std::string cs = c.str();
    bool simple = c.is_constant();
    if (!first) out << " + ";
    first = false;
    if (mono.empty()) {
      out << (simple ? cs : "(" + cs + ")");
    } else if (simple && cs == "1") {
      out << mono;
    } else if (simple && cs == "-1") {
      out << "-" << mono;
    } else {
      out << (simple ? cs : "(" + cs + ")") << "*" << mono;
    }
  }
  return out.str();
}

}  // namespace nilnorm
