#include "nilnorm/rational.hpp"

#include <cctype>

namespace nilnorm {

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("Rational::parse: empty input");
  size_t pos = 0;
  bool neg = false;
  if (text[pos] == '-') {
    neg = true;
    ++pos;
  }
  auto read_digits = [&](std::string& out) {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      out.push_back(text[pos]);
      ++pos;
    }
    if (pos == start) throw std::invalid_argument("Rational::parse: digits expected in '" + std::string(text) + "'");
  };
  std::string num, den;
  read_digits(num);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    read_digits(den);
  }
  if (pos != text.size()) throw std::invalid_argument("Rational::parse: trailing junk in '" + std::string(text) + "'");
  Integer n(num), d(den.empty() ? "1" : den);
  if (d == 0) throw std::invalid_argument("Rational::parse: zero denominator");
  if (neg) n = -n;
  return Rational(n, d);
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Integer factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational binom(long a, long b) {
  if (b < 0 || a < 0 || b > a) return Rational(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return Rational(r);
}

}  // namespace nilnorm
