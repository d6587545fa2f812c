#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nilnorm/rational.hpp"

namespace nilnorm {

/// Named formal parameter. Canonical form "a[l,mu,k]" for the 3D family
/// coefficients, "a[l,m]" in 2D, or any free-form identifier.
struct ParamSymbol {
  std::string name;

  ParamSymbol() = default;
  explicit ParamSymbol(std::string n) : name(std::move(n)) {
    if (name.empty()) throw std::invalid_argument("ParamSymbol: empty name");
  }

  friend bool operator==(const ParamSymbol& a, const ParamSymbol& b) { return a.name == b.name; }
  friend auto operator<=>(const ParamSymbol& a, const ParamSymbol& b) { return a.name <=> b.name; }
};

/// Power product of parameters; no zero exponents stored, empty product = 1.
class ParamMonomial {
 public:
  ParamMonomial() = default;
  explicit ParamMonomial(const ParamSymbol& s, unsigned e = 1) {
    if (e > 0) exps_[s] = e;
  }

  const std::map<ParamSymbol, unsigned>& exponents() const { return exps_; }
  bool is_unit() const { return exps_.empty(); }
  unsigned degree() const;

  ParamMonomial operator*(const ParamMonomial& o) const;

  friend bool operator==(const ParamMonomial& a, const ParamMonomial& b) { return a.exps_ == b.exps_; }
  /// Graded lexicographic: by total degree, then lex on (symbol, exponent) maps.
  friend bool operator<(const ParamMonomial& a, const ParamMonomial& b);

  std::string str() const;

 private:
  std::map<ParamSymbol, unsigned> exps_;
};

/// Sparse multivariate polynomial over Rational in named parameters.
/// Canonical: no zero coefficients; equality is term-map equality.
class ParamPoly {
 public:
  ParamPoly() = default;
  ParamPoly(const Rational& c) {  // NOLINT: implicit constant embedding
    if (!c.is_zero()) terms_[ParamMonomial{}] = c;
  }
  ParamPoly(long n) : ParamPoly(Rational(n)) {}  // NOLINT
  static ParamPoly symbol(const ParamSymbol& s) { return ParamPoly(ParamMonomial(s), Rational(1)); }
  ParamPoly(const ParamMonomial& m, const Rational& c) {
    if (!c.is_zero()) terms_[m] = c;
  }

  const std::map<ParamMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit()); }
  /// Constant term (the whole value when is_constant()).
  Rational constant_value() const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly operator*(const ParamPoly& o) const;
  ParamPoly scaled(const Rational& c) const;

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }
  friend bool operator<(const ParamPoly& a, const ParamPoly& b) { return a.terms_ < b.terms_; }

  /// Exact substitution; throws std::out_of_range naming the first symbol
  /// missing from the assignment.
  Rational eval(const std::map<ParamSymbol, Rational>& assignment) const;

  /// Grammar: terms joined by '+'/'-'; term = [Rational]['*'][symbol['^'int]]*;
  /// symbol = identifier or a[ints]. Throws std::invalid_argument with position.
  static ParamPoly parse(std::string_view text);
  std::string str() const;

 private:
  std::map<ParamMonomial, Rational> terms_;
};

}  // namespace nilnorm
