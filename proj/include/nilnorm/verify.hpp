#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nilnorm/normalform.hpp"

namespace nilnorm {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first mismatch, empty when pass
};

/// Closed-form-vs-oracle identity checks. Each runs exactly (no tolerances)
/// over the stated ranges and reports the first mismatch.
CheckResult check_binomial_identity(int max_mn);
CheckResult check_pascal(int max_a);
CheckResult check_sl2_relations();
CheckResult check_jacobi(int trials, unsigned seed);
CheckResult check_euler_bracket_law(int trials, unsigned seed);
CheckResult check_cgc_orthogonality(int max_mn);
CheckResult check_inversion_roundtrip(int max_mn);
CheckResult check_norm_consistency(int max_mn);
CheckResult check_contraction_kernel(int max_mu);
CheckResult check_lambda_rho0(int max_mu);
CheckResult check_lambda_l1zero(int max_mu);
CheckResult check_product_formula(Dim d, int max_mu);
CheckResult check_bracket_oracle(Dim d, int max_mu, int max_k);
CheckResult check_orbit_roundtrip(Dim d, int max_degree, int trials, unsigned seed);

struct VerifyRanges {
  int max_mn = 8;        // tensor-weight grids (orthogonality, inversion)
  int max_mu = 5;        // 3D product/bracket grids
  int max_mu_2d = 6;     // 2D grids
  int trials = 50;       // randomized identities

  static VerifyRanges quick() { return {5, 3, 4, 10}; }
};

/// The full suite, ordered deterministically. Thread fan-out over
/// independent checks, capped by NILNORM_THREADS.
std::vector<CheckResult> run_verification(const VerifyRanges& r);
std::vector<CheckResult> run_verification(bool quick = false);

}  // namespace nilnorm
