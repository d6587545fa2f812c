#pragma once

#include <optional>
#include <vector>

#include "nilnorm/liealg.hpp"

namespace nilnorm {

enum class NFMode { symbolic, numeric };

/// A normal-form computation: the field N + nonlinear part, a hard delta0
/// truncation grade, and the coefficient mode. Numeric mode requires every
/// coefficient to be a constant; the higher levels divide by leading
/// coefficients and are only available there.
struct NFProblem {
  LieComb input;  // N flag must be set
  int max_grade = 0;
  NFMode mode = NFMode::numeric;

  void validate() const;

  std::string json() const;
  static NFProblem from_json(const std::string& text);
};

/// Leading data detected on a first-level form.
struct LeadingInfo {
  std::optional<OrbitElement> leading;          // lowest nonzero A^0 slot
  std::optional<OrbitElement> second;           // next one
  std::optional<int> nu1, nu2;                  // 2D names
  std::map<int, int> r_per_s;                   // 3D: delta power s -> r_s
};

/// Result of one or more levels: the reduced field per level, the generators
/// applied (replay via apply_transform in order reproduces each level's
/// output from its input), and the removed slots.
struct NFReport {
  NFProblem problem;
  LieComb level1;
  LieComb level2;
  LieComb level3;
  int levels_done = 0;
  std::vector<LieComb> generators1, generators2, generators3;
  LeadingInfo leading;
  std::vector<OrbitElement> removed2, removed3;

  NFReport() : level1(Dim::d3), level2(Dim::d3), level3(Dim::d3) {}

  std::string json() const;
};

/// delta0 grade of a basis element: mu + 2k (3D), mu (2D).
int grade_delta0(const OrbitElement& e);

/// Second-level grading in 2D: 2(mu + nu1 * l); N carries grade 2*nu1.
int grade_2d(const OrbitElement& e, int nu1);
int grade_2d_nilpotent(int nu1);

/// Second-level grading in 3D: (r+1)(mu+2k) + (l-mu)(r+2s); N carries r+2s.
int grade_3d(const OrbitElement& e, int r, int s);
int grade_3d_nilpotent(int r, int s);

/// exp(ad_T) applied to v (the N flag rides along), truncated to delta0
/// grade <= max_grade. T must be N-free with every term of grade >= 1; the
/// series terminates by grading.
LieComb apply_transform(const LieComb& v, const LieComb& t, int max_grade);

/// The first-level generator at one grade: sum over terms A^l_s (l >= 1) of
/// coeff * A^{l-1}_s, so that [T, N] removes exactly those terms.
LieComb first_level_generator(const LieComb& v, int grade);

/// Grade-by-grade sl2-style normalization: after it, only A^0 terms remain
/// (plus N). Works symbolically. Appends applied generators to *record.
LieComb first_level(const LieComb& v, int max_grade, std::vector<LieComb>* record = nullptr);

/// Detect leading slots of a first-level form.
LeadingInfo detect_leading(const LieComb& v);

/// Generator chain for X = N + a * A^0_lead: T = sum_{i<n} alpha_i
/// A^{n-i-1}_{m+i r, k+i s} with the alpha_i from term-by-term cancellation,
/// so that [X, T] + A^n_{m,k} = residual * A^0_{m+n r, k+n s} modulo terms of
/// higher delta power (exact in 2D).
struct GeneratorChain {
  LieComb t;
  OrbitElement residual_slot;
  Rational residual_coeff;

  GeneratorChain() : t(Dim::d3), residual_slot() {}
};
GeneratorChain solve_generator_chain(const LieComb& x, const OrbitElement& target);

/// Runs level 1 on the problem.
NFReport first_level(const NFProblem& p);

/// Level 2: kernel-generator sweep removing the chain-reachable A^0 slots,
/// ascending by target grade. Numeric mode only.
void second_level(const NFProblem& p, NFReport& report);

/// Level 3: the leftover degenerate kernel generators, anchored on the next
/// surviving term; removes their lowest targets, then re-sweeps level 2.
void third_level(const NFProblem& p, NFReport& report);

/// Convenience: run all levels applicable to the mode.
NFReport normal_form(const NFProblem& p, int levels = 3);

}  // namespace nilnorm
