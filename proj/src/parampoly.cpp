#include "nilnorm/parampoly.hpp"

#include <cctype>
#include <sstream>

namespace nilnorm {

unsigned ParamMonomial::degree() const {
  unsigned d = 0;
  for (const auto& [s, e] : exps_) d += e;
  return d;
}

ParamMonomial ParamMonomial::operator*(const ParamMonomial& o) const {
  ParamMonomial r = *this;
  for (const auto& [s, e] : o.exps_) r.exps_[s] += e;
  return r;
}

bool operator<(const ParamMonomial& a, const ParamMonomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exps_ < b.exps_;
}

std::string ParamMonomial::str() const {
  if (exps_.empty()) return "1";
  std::string out;
  bool first = true;
  for (const auto& [s, e] : exps_) {
    if (!first) out += "*";
    first = false;
    out += s.name;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

Rational ParamPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  auto it = terms_.find(ParamMonomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, -c);
    } else {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
  ParamPoly r;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      ParamMonomial m = m1 * m2;
      Rational c = c1 * c2;
      auto it = r.terms_.find(m);
      if (it == r.terms_.end()) {
        if (!c.is_zero()) r.terms_.emplace(std::move(m), c);
      } else {
        it->second += c;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  return r;
}

ParamPoly ParamPoly::scaled(const Rational& c) const {
  ParamPoly r;
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
  return r;
}

Rational ParamPoly::eval(const std::map<ParamSymbol, Rational>& assignment) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [s, e] : m.exponents()) {
      auto it = assignment.find(s);
      if (it == assignment.end()) throw std::out_of_range("ParamPoly::eval: missing symbol '" + s.name + "'");
      for (unsigned i = 0; i < e; ++i) t *= it->second;
    }
    total += t;
  }
  return total;
}

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("ParamPoly::parse: " + what + " at position " + std::to_string(pos));
  }
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_ws();
    std::string out;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) out.push_back(text[pos++]);
    if (out.empty()) fail("digits expected");
    return out;
  }

  Rational number() {
    std::string num = digits();
    if (accept('/')) return Rational(Integer(num), Integer(digits()));
    return Rational(Integer(num));
  }

  ParamSymbol symbol() {
    skip_ws();
    if (pos >= text.size() || !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      fail("identifier expected");
    std::string name;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      name.push_back(text[pos++]);
    if (pos < text.size() && text[pos] == '[') {
      name.push_back(text[pos++]);
      name += digits();
      while (accept(',')) {
        name.push_back(',');
        name += digits();
      }
      if (!accept(']')) fail("']' expected");
      name.push_back(']');
    }
    return ParamSymbol(name);
  }

  // term := [number] ['*'] [factor ('*'|implicit) ...]; factor := symbol ['^' digits]
  ParamPoly term() {
    Rational coeff(1);
    ParamMonomial mono;
    bool saw_anything = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      saw_anything = true;
      accept('*');
    }
    while (true) {
      char c = peek();
      if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) break;
      ParamSymbol s = symbol();
      unsigned e = 1;
      if (accept('^')) e = static_cast<unsigned>(std::stoul(digits()));
      if (e > 0) mono = mono * ParamMonomial(s, e);
      saw_anything = true;
      accept('*');
    }
    if (!saw_anything) fail("term expected");
    return ParamPoly(mono, coeff);
  }

  ParamPoly parse() {
    ParamPoly out;
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    while (true) {
      ParamPoly t = term();
      out += neg ? -t : t;
      if (eof()) break;
      if (accept('+'))
        neg = false;
      else if (accept('-'))
        neg = true;
      else
        fail("'+' or '-' expected");
    }
    return out;
  }
};

}  // namespace

ParamPoly ParamPoly::parse(std::string_view text) {
  Parser p{text};
  if (p.eof()) throw std::invalid_argument("ParamPoly::parse: empty input");
  return p.parse();
}

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  // leading term (highest graded-lex order) first
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    first = false;
    if (m.is_unit()) {
      out << a.str();
    } else if (a == Rational(1)) {
      out << m.str();
    } else {
      out << a.str() << "*" << m.str();
    }
  }
  return out.str();
}

}  // namespace nilnorm
