#include "nilnorm/liealg.hpp"

#include <json.hpp>

namespace nilnorm {

std::string OrbitElement::str() const {
  if (dim == Dim::d2) return "A[" + std::to_string(l) + "," + std::to_string(mu) + "]";
  return "A[" + std::to_string(l) + "," + std::to_string(mu) + "," + std::to_string(k) + "]";
}

OrbitElement OrbitElement::parse(Dim d, std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("OrbitElement::parse: bad input '" + std::string(text) + "'"); };
  size_t open = text.find('[');
  if (open == std::string_view::npos || text.substr(0, open) != "A" || text.back() != ']') fail();
  std::string inner(text.substr(open + 1, text.size() - open - 2));
  std::vector<int> nums;
  size_t pos = 0;
  while (pos <= inner.size()) {
    size_t comma = inner.find(',', pos);
    std::string tok = inner.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty()) fail();
    nums.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (d == Dim::d2 && nums.size() == 2) return OrbitElement(d, nums[0], nums[1]);
  if (d == Dim::d3 && nums.size() == 3) return OrbitElement(d, nums[0], nums[1], nums[2]);
  fail();
  return OrbitElement();
}

void LieComb::add_term(const OrbitElement& e, const ParamPoly& c) {
  if (e.dim != dim_) throw std::invalid_argument("LieComb: dimension mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LieComb::set_term(const OrbitElement& e, const ParamPoly& c) {
  if (e.dim != dim_) throw std::invalid_argument("LieComb: dimension mismatch");
  if (c.is_zero())
    terms_.erase(e);
  else
    terms_[e] = c;
}

LieComb LieComb::operator-() const {
  LieComb r(dim_, n_flag_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LieComb& LieComb::operator+=(const LieComb& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("LieComb: dimension mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LieComb& LieComb::operator-=(const LieComb& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("LieComb: dimension mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LieComb LieComb::scaled(const ParamPoly& c) const {
  LieComb r(dim_, n_flag_);
  if (c.is_zero()) return LieComb(dim_, n_flag_);
  for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
  return r;
}

LieComb LieComb::truncated(int gmax) const {
  LieComb r(dim_, n_flag_);
  for (const auto& [e, c] : terms_)
    if (e.delta0() <= gmax) r.terms_.emplace(e, c);
  return r;
}

int LieComb::max_delta0() const {
  int g = 0;
  for (const auto& [e, c] : terms_) g = std::max(g, e.delta0());
  return g;
}

std::string LieComb::str() const {
  std::string out;
  if (n_flag_) out = "N";
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string cs = c.str();
    if (cs == "1")
      out += e.str();
    else if (c.is_constant() || c.terms().size() == 1)
      out += cs + " * " + e.str();
    else
      out += "(" + cs + ") * " + e.str();
  }
  return out.empty() ? "0" : out;
}

std::string LieComb::json() const {
  nlohmann::json j;
  j["dim"] = dim_count(dim_);
  j["N"] = n_flag_;
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : terms_) {
    nlohmann::json t;
    t["l"] = e.l;
    t["mu"] = e.mu;
    t["k"] = e.k;
    t["coeff"] = c.str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

LieComb LieComb::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  int d = j.at("dim").get<int>();
  if (d != 2 && d != 3) throw std::invalid_argument("LieComb::from_json: dim must be 2 or 3");
  LieComb out(d == 2 ? Dim::d2 : Dim::d3, j.value("N", false));
  for (const auto& t : j.at("terms")) {
    OrbitElement e(out.dim(), t.at("l").get<int>(), t.at("mu").get<int>(), t.value("k", 0));
    out.add_term(e, ParamPoly::parse(t.at("coeff").get<std::string>()));
  }
  return out;
}

LieComb bracket(const OrbitElement& e1, const OrbitElement& e2) {
  if (e1.dim != e2.dim) throw std::invalid_argument("bracket: dimension mismatch");
  LieComb out(e1.dim);
  const int dfac = e2.delta0() - e1.delta0();
  if (dfac == 0) return out;
  for (const auto& [of, c] : product_orbit(e1.dim, e1.function(), e2.function())) {
    OrbitElement e(e1.dim, static_cast<int>(of.l), static_cast<int>(of.base.mu), static_cast<int>(of.base.k));
    out.add_term(e, ParamPoly(c * Rational(dfac)));
  }
  return out;
}

LieComb bracket_filtered(const OrbitElement& e1, const OrbitElement& e2, int kmax) {
  if (e1.dim != Dim::d3) throw std::invalid_argument("bracket_filtered: 3D only");
  LieComb full = bracket(e1, e2);
  LieComb out(e1.dim);
  for (const auto& [e, c] : full.terms())
    if (e.k <= kmax) out.add_term(e, c);
  return out;
}

LieComb comb_bracket(const LieComb& u, const LieComb& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("comb_bracket: dimension mismatch");
  LieComb out(u.dim());
  auto raise = [&](const LieComb& w, const Rational& sign) {
    // sign * [N, w]
    for (const auto& [e, c] : w.terms()) {
      if (e.l + 1 > e.orbit_top()) continue;
      out.add_term(OrbitElement(e.dim, e.l + 1, e.mu, e.k), c.scaled(sign));
    }
  };
  if (u.n_flag()) raise(v, Rational(1));
  if (v.n_flag()) raise(u, Rational(-1));
  for (const auto& [e1, c1] : u.terms()) {
    for (const auto& [e2, c2] : v.terms()) {
      LieComb b = bracket(e1, e2);
      for (const auto& [e, c] : b.terms()) out.add_term(e, c * c1 * c2);
    }
  }
  return out;
}

VectorField comb_to_vectorfield(const LieComb& u) {
  CoordPoly f(u.dim());
  for (const auto& [e, c] : u.terms()) f += realize(e.function()).scaled(c);
  VectorField v = euler_field(f);
  if (u.n_flag()) v += field_N(u.dim());
  return v;
}

LieComb vectorfield_to_comb(const VectorField& v, bool expect_n) {
  VectorField w = v;
  if (expect_n) w -= field_N(v.dim);
  auto f = euler_factor(w);
  if (!f.has_value()) throw std::invalid_argument("vectorfield_to_comb: not an Euler-type field");
  LieComb out(v.dim, expect_n);
  for (const auto& [of, c] : to_orbit_coords(*f)) {
    OrbitElement e(v.dim, static_cast<int>(of.l), static_cast<int>(of.base.mu), static_cast<int>(of.base.k));
    out.add_term(e, c);
  }
  return out;
}

}  // namespace nilnorm
