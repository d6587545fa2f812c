#include "nilnorm/cgc.hpp"

namespace nilnorm {

Rational cgc_3j(int m, int n, int p, int i, int j, int k) {
  if (i + j != k + p) return Rational(0);
  if (i < 0 || j < 0 || k < 0) return Rational(0);
  Rational total(0);
  for (int r = 0; r <= k; ++r) {
    int q = k - r;
    Rational d1 = binom(m, i - q);
    Rational d2 = binom(n, j - r);
    if (d1.is_zero() || d2.is_zero()) continue;
    Rational num = binom(p, i - q) * binom(i, q) * binom(j, r);
    Rational term = num / (d1 * d2);
    if ((i - k + r) % 2 != 0) term = -term;
    total += term;
  }
  return total;
}

TensorExpansion transvectant(int m, int n, int p) {
  if (p < 0 || p > std::min(m, n)) throw std::invalid_argument("transvectant: p out of range");
  TensorExpansion t{m, n, {}};
  for (int i = 0; i <= p; ++i) {
    Rational c = binom(p, i) / (binom(m, i) * binom(n, p - i));
    if (i % 2 != 0) c = -c;
    t.terms[{i, p - i}] = c;
  }
  return t;
}

TensorExpansion orbit_transvectant(int m, int n, int p, int k) {
  if (p < 0 || p > std::min(m, n)) throw std::invalid_argument("orbit_transvectant: p out of range");
  if (k < 0 || k > m + n - 2 * p) throw std::invalid_argument("orbit_transvectant: k out of range");
  TensorExpansion t{m, n, {}};
  for (int i = 0; i <= k + p; ++i) {
    int j = k + p - i;
    if (i > m || j > n) continue;
    Rational c = cgc_3j(m, n, p, i, j, k);
    if (!c.is_zero()) t.terms[{i, j}] = c;
  }
  return t;
}

Rational transvectant_norm_sq(int m, int n, int p) {
  if (p < 0 || p > std::min(m, n)) throw std::invalid_argument("transvectant_norm_sq: p out of range");
  return binom(m + n - p + 1, p) / (binom(m, p) * binom(n, p));
}

OrbitCoords invert_tensor(int m, int n, int i, int j) {
  if (i < 0 || i > m || j < 0 || j > n) throw std::invalid_argument("invert_tensor: index out of range");
  OrbitCoords oc{m, n, {}};
  for (int p = 0; p <= i + j; ++p) {
    int k = i + j - p;
    if (p > std::min(m, n) || k > m + n - 2 * p) continue;
    Rational den = binom(m + n - 2 * p, k) * binom(m + n - p + 1, p);
    if (den.is_zero()) continue;
    Rational c = cgc_3j(m, n, p, i, j, k) * binom(m, i) * binom(n, j) * binom(m, p) * binom(n, p) / den;
    if (!c.is_zero()) oc.terms[{p, k}] = c;
  }
  return oc;
}

Rational lambda_coeff(int l1, int mu1, int l2, int mu2, int rho) {
  const int m1 = 2 * mu1, m2 = 2 * mu2;
  const int p = 2 * rho;
  const int k = l1 + l2 - p;
  if (k < 0) return Rational(0);
  Rational den = binom(m1 + m2 - 2 * p, k) * binom(m1 + m2 - p + 1, p) * binom(p, rho);
  if (den.is_zero()) return Rational(0);
  Rational c = cgc_3j(m1, m2, p, l1, l2, k) * binom(m1, l1) * binom(m2, l2) / den;
  Rational pow2(1);
  for (int i = 0; i < p; ++i) pow2 *= Rational(2);
  c *= pow2 * binom(mu1 + mu2 - rho, rho) * binom(mu1, rho) * binom(mu2, rho);
  c *= Rational(factorial(l1) * factorial(l2), factorial(k));
  return c;
}

std::map<OrbitFunction, Rational> product_orbit(Dim d, const OrbitFunction& o1, const OrbitFunction& o2) {
  if (o1.base.dim != d || o2.base.dim != d) throw std::invalid_argument("product_orbit: dimension mismatch");
  std::map<OrbitFunction, Rational> out;
  if (!o1.within_orbit() || !o2.within_orbit()) return out;  // an exhausted factor realizes to zero
  const int l1 = static_cast<int>(o1.l), l2 = static_cast<int>(o2.l);
  const int mu1 = static_cast<int>(o1.base.mu), mu2 = static_cast<int>(o2.base.mu);
  if (d == Dim::d2) {
    // N^l1 y^mu1 * N^l2 y^mu2 = ratio * N^(l1+l2) y^(mu1+mu2)
    Rational c = binom(mu1 + mu2 - l1 - l2, mu1 - l1) / binom(mu1 + mu2, mu1);
    if (!c.is_zero()) out[OrbitFunction(d, l1 + l2, mu1 + mu2)] = c;
    return out;
  }
  const int kshift = static_cast<int>(o1.base.k + o2.base.k);
  for (int rho = 0; 2 * rho <= l1 + l2; ++rho) {
    const int p = 2 * rho;
    const int k = l1 + l2 - p;
    const int mu = mu1 + mu2 - p;
    if (mu < 0) continue;
    if (k > 2 * mu) continue;  // N^k z^mu = 0 beyond the orbit
    Rational c = lambda_coeff(l1, mu1, l2, mu2, rho);
    if (!c.is_zero())
      out[OrbitFunction(d, k, mu, kshift + rho)] = c;
  }
  return out;
}

}  // namespace nilnorm
