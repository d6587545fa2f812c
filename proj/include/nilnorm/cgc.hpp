#pragma once

#include <map>
#include <utility>

#include "nilnorm/sl2.hpp"

namespace nilnorm {

/// Element of V_m (x) W_n in divided-power coordinates: terms (i, j) stand
/// for v^(i)_m (x) w^(j)_n with v^(i) = N^i v / i!.
struct TensorExpansion {
  int m = 0, n = 0;
  std::map<std::pair<int, int>, Rational> terms;
};

/// Element expressed over the transvectant orbit basis: terms (p, k) stand
/// for the k-fold raised weight-(m+n-2p) transvectant of v_m (x) w_n.
struct OrbitCoords {
  int m = 0, n = 0;
  std::map<std::pair<int, int>, Rational> terms;
};

/// Rational Clebsch-Gordan coefficient (3j-symbol):
///   sum over r+q=k of (-1)^(i-k+r) C(p,i-q) C(i,q) C(j,r) / (C(m,i-q) C(n,j-r)),
/// zero unless i+j = k+p; terms with vanishing denominator binomials drop.
Rational cgc_3j(int m, int n, int p, int i, int j, int k);

/// p-th transvectant of v_m (x) w_n: terms (i, p-i) with coefficient
/// (-1)^i C(p,i) / (C(m,i) C(n,p-i)). Requires 0 <= p <= min(m, n).
TensorExpansion transvectant(int m, int n, int p);

/// k-fold coproduct raising of the p-th transvectant: terms (i, j) with
/// i+j = k+p and coefficient cgc_3j(m,n,p,i,j,k). Requires 0 <= k <= m+n-2p.
TensorExpansion orbit_transvectant(int m, int n, int p, int k);

/// Squared norm C(m+n-p+1, p) / (C(m,p) C(n,p)) for unit base norms.
Rational transvectant_norm_sq(int m, int n, int p);

/// Inversion: v^(i)_m (x) w^(j)_n = sum over p+k=i+j of
///   cgc * C(m,i)C(n,j)C(m,p)C(n,p) / (C(m+n-2p,k) C(m+n-p+1,p))
/// times the (p, k) orbit transvectant.
OrbitCoords invert_tensor(int m, int n, int i, int j);

/// The structure-constant coefficient lambda^{l1,mu1}_{l2,mu2}(rho): the
/// weight of N^k z^(mu1+mu2-p) delta^rho (k = l1+l2-p, p = 2 rho) in the
/// product N^l1 z^mu1 * N^l2 z^mu2. Zero when k < 0.
Rational lambda_coeff(int l1, int mu1, int l2, int mu2, int rho);

/// Exact expansion of realize(o1) * realize(o2) over the orbit basis.
/// 3D: the lambda sum over even p, shifted by the operands' delta powers.
/// 2D: the single term (l1+l2, mu1+mu2) with the binomial ratio coefficient.
/// Terms whose slot exceeds its orbit bound realize to zero and are dropped.
std::map<OrbitFunction, Rational> product_orbit(Dim d, const OrbitFunction& o1, const OrbitFunction& o2);

}  // namespace nilnorm
