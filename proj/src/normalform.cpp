#include "nilnorm/normalform.hpp"

#include <json.hpp>

#include <algorithm>

namespace nilnorm {

void NFProblem::validate() const {
  if (!input.n_flag()) throw std::invalid_argument("NFProblem: input must carry the nilpotent part");
  if (max_grade < 0) throw std::invalid_argument("NFProblem: negative max_grade");
  for (const auto& [e, c] : input.terms()) {
    if (e.delta0() < 1) throw std::invalid_argument("NFProblem: nonlinear part must have grade >= 1");
    if (mode == NFMode::numeric && !c.is_constant())
      throw std::invalid_argument("NFProblem: numeric mode requires constant coefficients");
  }
}

std::string NFProblem::json() const {
  nlohmann::json j;
  j["input"] = nlohmann::json::parse(input.json());
  j["max_grade"] = max_grade;
  j["mode"] = mode == NFMode::numeric ? "numeric" : "symbolic";
  return j.dump();
}

NFProblem NFProblem::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  NFProblem p{LieComb::from_json(j.at("input").dump()), j.at("max_grade").get<int>(),
              j.value("mode", "numeric") == std::string("symbolic") ? NFMode::symbolic : NFMode::numeric};
  p.validate();
  return p;
}

namespace {

nlohmann::json comb_json(const LieComb& c) { return nlohmann::json::parse(c.json()); }

nlohmann::json slot_json(const OrbitElement& e) {
  nlohmann::json j;
  j["l"] = e.l;
  j["mu"] = e.mu;
  j["k"] = e.k;
  return j;
}

}  // namespace

std::string NFReport::json() const {
  nlohmann::json j;
  j["problem"] = nlohmann::json::parse(problem.json());
  j["levels_done"] = levels_done;
  j["level1"] = comb_json(level1);
  if (levels_done >= 2) j["level2"] = comb_json(level2);
  if (levels_done >= 3) j["level3"] = comb_json(level3);
  auto gens = [](const std::vector<LieComb>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& g : v) a.push_back(comb_json(g));
    return a;
  };
  j["generators1"] = gens(generators1);
  j["generators2"] = gens(generators2);
  j["generators3"] = gens(generators3);
  nlohmann::json lead;
  if (leading.leading) lead["leading"] = slot_json(*leading.leading);
  if (leading.second) lead["second"] = slot_json(*leading.second);
  if (leading.nu1) lead["nu1"] = *leading.nu1;
  if (leading.nu2) lead["nu2"] = *leading.nu2;
  if (!leading.r_per_s.empty()) {
    nlohmann::json rs;
    for (const auto& [s, r] : leading.r_per_s) rs[std::to_string(s)] = r;
    lead["r_per_s"] = rs;
  }
  j["leading"] = lead;
  auto slots = [](const std::vector<OrbitElement>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& e : v) a.push_back(slot_json(e));
    return a;
  };
  j["removed2"] = slots(removed2);
  j["removed3"] = slots(removed3);
  return j.dump();
}

int grade_delta0(const OrbitElement& e) { return e.delta0(); }

int grade_2d(const OrbitElement& e, int nu1) {
  if (e.dim != Dim::d2) throw std::invalid_argument("grade_2d: 2D only");
  return 2 * (e.mu + nu1 * e.l);
}

int grade_2d_nilpotent(int nu1) { return 2 * nu1; }

int grade_3d(const OrbitElement& e, int r, int s) {
  if (e.dim != Dim::d3) throw std::invalid_argument("grade_3d: 3D only");
  return (r + 1) * (e.mu + 2 * e.k) + (e.l - e.mu) * (r + 2 * s);
}

int grade_3d_nilpotent(int r, int s) { return r + 2 * s; }

LieComb apply_transform(const LieComb& v, const LieComb& t, int max_grade) {
  if (t.n_flag()) throw std::invalid_argument("apply_transform: generator must not contain N");
  for (const auto& [e, c] : t.terms())
    if (e.delta0() < 1) throw std::invalid_argument("apply_transform: generator grade must be >= 1");
  LieComb out = v.truncated(max_grade);
  LieComb term = comb_bracket(t, v).truncated(max_grade);  // ad_T(N + v), N via flag
  long j = 1;
  while (!term.is_zero()) {
    out += term;
    ++j;
    term = comb_bracket(t, term).truncated(max_grade);
    term = term.scaled(ParamPoly(Rational(1, j)));
    if (j > 4 * (max_grade + 2)) throw std::logic_error("apply_transform: series did not terminate");
  }
  return out;
}

LieComb first_level_generator(const LieComb& v, int grade) {
  LieComb t(v.dim());
  for (const auto& [e, c] : v.terms()) {
    if (e.delta0() != grade || e.l < 1) continue;
    t.add_term(OrbitElement(e.dim, e.l - 1, e.mu, e.k), c);
  }
  return t;
}

LieComb first_level(const LieComb& v, int max_grade, std::vector<LieComb>* record) {
  LieComb cur = v.truncated(max_grade);
  for (int g = 1; g <= max_grade; ++g) {
    for (int guard = 0;; ++guard) {
      LieComb t = first_level_generator(cur, g);
      if (t.is_zero()) break;
      if (record) record->push_back(t);
      cur = apply_transform(cur, t, max_grade);
      if (guard > max_grade + 2) throw std::logic_error("first_level: grade did not stabilize");
    }
  }
  return cur;
}

LeadingInfo detect_leading(const LieComb& v) {
  LeadingInfo info;
  std::vector<OrbitElement> nonzero;
  for (const auto& [e, c] : v.terms()) {
    if (e.l != 0) continue;  // leading data lives on the first-level form
    nonzero.push_back(e);
  }
  // lowest grade first; grade ties broken by ascending delta power
  std::sort(nonzero.begin(), nonzero.end(), [](const OrbitElement& a, const OrbitElement& b) {
    return std::tuple(a.delta0(), a.k, a.mu) < std::tuple(b.delta0(), b.k, b.mu);
  });
  if (!nonzero.empty()) info.leading = nonzero[0];
  if (nonzero.size() > 1) info.second = nonzero[1];
  if (v.dim() == Dim::d2) {
    if (info.leading) info.nu1 = info.leading->mu;
    if (info.second) info.nu2 = info.second->mu;
  } else {
    for (const auto& e : nonzero) {
      auto it = info.r_per_s.find(e.k);
      if (it == info.r_per_s.end() || e.mu < it->second) info.r_per_s[e.k] = e.mu;
    }
  }
  return info;
}

GeneratorChain solve_generator_chain(const LieComb& x, const OrbitElement& target) {
  if (!x.n_flag()) throw std::invalid_argument("solve_generator_chain: X must contain N");
  if (x.terms().size() != 1) throw std::invalid_argument("solve_generator_chain: X must be N + a*A^0_lead");
  const auto& [lead, acoef] = *x.terms().begin();
  if (lead.l != 0 || acoef.is_zero() || !acoef.is_constant())
    throw std::invalid_argument("solve_generator_chain: leading term must be numeric A^0");
  const Rational a = acoef.constant_value();
  const int n = target.l;
  if (n < 1) throw std::invalid_argument("solve_generator_chain: target.l must be >= 1");
  const int r = lead.mu, s = lead.k, m = target.mu, k = target.k;
  const Dim d = target.dim;

  GeneratorChain chain;
  chain.t = LieComb(d);
  Rational alpha(-1);  // alpha_0
  OrbitElement elt(d, n - 1, m, k);
  chain.t.add_term(elt, ParamPoly(alpha));
  for (int i = 1; i < n; ++i) {
    // alpha_i cancels the junk [a A^0_lead, alpha_{i-1} elt_{i-1}] creates at
    // the next chain slot (leading delta-filtration term).
    OrbitElement next(d, n - i - 1, m + i * r, k + i * s);
    OrbitElement junk(d, n - i, m + i * r, k + i * s);
    LieComb b = bracket(lead, OrbitElement(d, n - i, m + (i - 1) * r, k + (i - 1) * s));
    Rational step = b.coeff(junk).constant_value();
    alpha = -(a * alpha * step);
    chain.t.add_term(next, ParamPoly(alpha));
  }
  // residual from the last chain element
  OrbitElement last(d, 0, m + (n - 1) * r, k + (n - 1) * s);
  chain.residual_slot = OrbitElement(d, 0, m + n * r, k + n * s);
  LieComb b = bracket(lead, last);
  chain.residual_coeff = a * alpha * b.coeff(chain.residual_slot).constant_value();
  return chain;
}

NFReport first_level(const NFProblem& p) {
  p.validate();
  NFReport rep;
  rep.problem = p;
  rep.level1 = first_level(p.input, p.max_grade, &rep.generators1);
  rep.levels_done = 1;
  rep.leading = detect_leading(rep.level1);
  return rep;
}

namespace {

Rational const_coeff(const LieComb& v, const OrbitElement& e) { return v.coeff(e).constant_value(); }

/// One composite reduction move: apply c * K, restore first-level form, with
/// c solved so that the coefficient at `target` becomes zero. The target
/// response is linear in c when the target is the lowest slot the move
/// reaches; the exact application can feed back nonlinearly in principle, so
/// the move verifies the zero and retries with a correction dial, reverting
/// entirely if the slot cannot be cleared. Applied generators are recorded.
bool remove_slot_via(LieComb& v, const LieComb& kernel, const OrbitElement& target, int max_grade,
                     std::vector<LieComb>& record) {
  if (const_coeff(v, target).is_zero()) return false;
  LieComb attempt = v;
  std::vector<LieComb> applied;
  for (int tries = 0; tries < 4; ++tries) {
    const Rational cur = const_coeff(attempt, target);
    if (cur.is_zero()) break;
    std::vector<LieComb> scratch;
    LieComb probe = apply_transform(attempt, kernel, max_grade);
    probe = first_level(probe, max_grade, &scratch);
    const Rational delta = const_coeff(probe, target) - cur;
    if (delta.is_zero()) return false;  // kernel does not reach the slot
    LieComb gen = kernel.scaled(ParamPoly(-cur / delta));
    applied.push_back(gen);
    attempt = apply_transform(attempt, gen, max_grade);
    attempt = first_level(attempt, max_grade, &applied);
  }
  if (!const_coeff(attempt, target).is_zero()) return false;  // no exact dial; leave v untouched
  v = std::move(attempt);
  record.insert(record.end(), applied.begin(), applied.end());
  return true;
}

struct Move {
  OrbitElement kernel;
  OrbitElement target;
};

/// The kernel-generator sweep of the second level: kernel elements of ad_N
/// (A^m_m in 2D, A^{2m}_{m,k} in 3D) with a delta0 mismatch against the
/// leading term; each reaches, through the generator chain, the single A^0
/// slot listed as its target.
std::vector<Move> second_level_moves(Dim d, const OrbitElement& lead, int max_grade) {
  std::vector<Move> moves;
  const int r = lead.mu, s = lead.k;
  if (d == Dim::d2) {
    for (int m = 1; m <= max_grade; ++m) {
      if (m == r) continue;  // delta0 equality: kernel of X, reserved for level 3
      int tgt = m * (1 + r) + r;
      if (tgt > max_grade) continue;
      moves.push_back({OrbitElement(d, m, m), OrbitElement(d, 0, tgt)});
    }
  } else {
    for (int m = 1; m <= max_grade; ++m) {
      for (int kk = 0; m + 2 * kk <= max_grade; ++kk) {
        if (m + 2 * kk == r + 2 * s) continue;  // degenerate kernel, level 3
        int tmu = m + r + 2 * m * r;
        int tk = kk + s + 2 * m * s;
        if (tmu + 2 * tk > max_grade) continue;
        moves.push_back({OrbitElement(d, 2 * m, m, kk), OrbitElement(d, 0, tmu, tk)});
      }
    }
  }
  std::sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) { return a.target < b.target; });
  return moves;
}

void run_second_level(const NFProblem& p, NFReport& rep) {
  LieComb v = rep.levels_done >= 2 ? rep.level2 : rep.level1;
  if (!rep.leading.leading) {  // nothing nonlinear: clean no-op
    rep.level2 = v;
    rep.levels_done = std::max(rep.levels_done, 2);
    return;
  }
  const LieComb input = v;
  const OrbitElement lead = *rep.leading.leading;
  const std::vector<Move> moves = second_level_moves(v.dim(), lead, p.max_grade);
  // a move's exact delta corrections can land on other targets, so sweep to a
  // fixed point (ascending order makes each pass monotone)
  const int max_passes = static_cast<int>(moves.size()) + p.max_grade + 2;
  for (int pass = 0; pass <= max_passes; ++pass) {
    bool changed = false;
    for (const Move& mv : moves) {
      if (const_coeff(v, mv.target).is_zero()) continue;
      LieComb kern(v.dim());
      kern.add_term(mv.kernel, ParamPoly(Rational(1)));
      changed = remove_slot_via(v, kern, mv.target, p.max_grade, rep.generators2) || changed;
    }
    if (!changed) break;
  }
  for (const Move& mv : moves) {
    if (!const_coeff(input, mv.target).is_zero() && const_coeff(v, mv.target).is_zero() &&
        std::find(rep.removed2.begin(), rep.removed2.end(), mv.target) == rep.removed2.end())
      rep.removed2.push_back(mv.target);
  }
  rep.level2 = v;
  rep.levels_done = std::max(rep.levels_done, 2);
}

}  // namespace

void second_level(const NFProblem& p, NFReport& rep) {
  if (p.mode != NFMode::numeric) throw std::invalid_argument("second_level: numeric mode required");
  if (rep.levels_done < 1) throw std::invalid_argument("second_level: run first_level first");
  run_second_level(p, rep);
}

void third_level(const NFProblem& p, NFReport& rep) {
  if (p.mode != NFMode::numeric) throw std::invalid_argument("third_level: numeric mode required");
  if (rep.levels_done < 2) throw std::invalid_argument("third_level: run second_level first");
  LieComb v = rep.level2;
  LeadingInfo info = detect_leading(v);
  rep.leading = info;
  if (!info.leading || !info.second) {  // already unique
    rep.level3 = v;
    rep.levels_done = 3;
    return;
  }
  const OrbitElement lead = *info.leading;
  const OrbitElement second = *info.second;
  const Dim d = v.dim();
  const int r = lead.mu, s = lead.k;

  // The exact kernel of X = N + a A^0_lead: A^{nu1}_{nu1} in 2D; in 3D every
  // A^{2m1}_{m1,kk} with delta0 equality m1 + 2 kk = r + 2s. Each is one
  // independent dial, anchored on the second surviving term.
  std::vector<Move> moves;
  if (d == Dim::d2) {
    int nu1 = r, nu2 = second.mu;
    int tgt = nu1 + nu2 + nu1 * nu1;
    if (tgt <= p.max_grade) moves.push_back({OrbitElement(d, nu1, nu1), OrbitElement(d, 0, tgt)});
  } else {
    for (int kk = 0; 2 * kk <= r + 2 * s; ++kk) {
      int m1 = r + 2 * (s - kk);
      if (m1 < 1) continue;
      int tmu = m1 + second.mu + 2 * m1 * r;
      int tk = kk + second.k + 2 * m1 * s;
      if (tmu + 2 * tk > p.max_grade) continue;
      moves.push_back({OrbitElement(d, 2 * m1, m1, kk), OrbitElement(d, 0, tmu, tk)});
    }
    std::sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) { return a.target < b.target; });
  }
  for (const Move& mv : moves) {
    if (const_coeff(v, mv.target).is_zero()) continue;
    LieComb kern(d);
    kern.add_term(mv.kernel, ParamPoly(Rational(1)));
    remove_slot_via(v, kern, mv.target, p.max_grade, rep.generators3);
  }
  // kernel moves repollute higher level-2 targets; sweep them again
  NFReport tmp;
  tmp.problem = rep.problem;
  tmp.level1 = v;
  tmp.levels_done = 1;
  tmp.leading = detect_leading(v);
  tmp.generators2.swap(rep.generators3);  // append into the level-3 record
  run_second_level(p, tmp);
  tmp.generators2.swap(rep.generators3);
  rep.level3 = tmp.level2;
  rep.levels_done = 3;
  // removed at this level = first-level slots that went from nonzero to zero
  for (const auto& [e, c] : rep.level2.terms())
    if (e.l == 0 && rep.level3.coeff(e).is_zero()) rep.removed3.push_back(e);
}

NFReport normal_form(const NFProblem& p, int levels) {
  NFReport rep = first_level(p);
  if (levels >= 2 && p.mode == NFMode::numeric) second_level(p, rep);
  if (levels >= 3 && p.mode == NFMode::numeric) third_level(p, rep);
  return rep;
}

}  // namespace nilnorm
