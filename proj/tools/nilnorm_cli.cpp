#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include "nilnorm/normalform.hpp"
#include "nilnorm/verify.hpp"

using namespace nilnorm;

namespace {

struct Options {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

std::vector<std::pair<OrbitElement, Rational>> sorted_terms(const LieComb& c) {
  std::vector<std::pair<OrbitElement, Rational>> out;
  for (const auto& [e, v] : c.terms()) out.emplace_back(e, v.constant_value());
  // (mu, k, l) order, largest mu first: matches the display convention of the
  // closed-form bracket listings
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tuple(a.first.mu, a.first.k, a.first.l) > std::tuple(b.first.mu, b.first.k, b.first.l);
  });
  return out;
}

void print_comb(const LieComb& c, const Options& opt) {
  if (opt.json()) {
    std::cout << c.json() << "\n";
    return;
  }
  auto terms = sorted_terms(c);
  if (terms.empty() && !c.n_flag()) {
    std::cout << "0\n";
    return;
  }
  for (const auto& [e, v] : terms) std::cout << v.str() << " * " << e.str() << "\n";
}

unsigned thread_cap() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("NILNORM_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
  }
  return hw;
}

std::vector<OrbitElement> elements_up_to_grade(Dim d, int bound) {
  std::vector<OrbitElement> out;
  for (int mu = 0; mu <= bound; ++mu)
    for (int k = 0; d == Dim::d3 ? (mu + 2 * k <= bound) : (k == 0); ++k) {
      if (mu + 2 * k < 1) continue;
      int top = d == Dim::d3 ? 2 * mu : mu;
      for (int l = 0; l <= top; ++l) out.emplace_back(d, l, mu, k);
    }
  return out;
}

int run_table(Dim d, int bound, const Options& opt) {
  std::vector<OrbitElement> elems = elements_up_to_grade(d, bound);
  std::vector<std::pair<OrbitElement, OrbitElement>> pairs;
  for (const auto& e1 : elems)
    for (const auto& e2 : elems)
      if (e1.delta0() + e2.delta0() <= bound) pairs.emplace_back(e1, e2);
  std::vector<nlohmann::json> rows(pairs.size());
  unsigned workers = std::min<size_t>(thread_cap(), pairs.size() ? pairs.size() : 1);
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next.fetch_add(1); i < pairs.size(); i = next.fetch_add(1)) {
      LieComb b = bracket(pairs[i].first, pairs[i].second);
      nlohmann::json row;
      row["lhs"] = pairs[i].first.str();
      row["rhs"] = pairs[i].second.str();
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& [e, v] : sorted_terms(b)) terms.push_back({{"elem", e.str()}, {"coeff", v.str()}});
      row["terms"] = std::move(terms);
      rows[i] = std::move(row);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  nlohmann::json out = nlohmann::json::array();
  for (auto& r : rows) out.push_back(std::move(r));
  std::cout << out.dump(opt.json() ? -1 : 2) << "\n";
  return 0;
}

int run_verify(const VerifyRanges& ranges) {
  bool all_pass = true;
  for (const CheckResult& r : run_verification(ranges)) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.pass) std::cout << "  (" << r.detail << ")";
    std::cout << "\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact structure constants and normal forms for Euler-family vector fields with nilpotent linear part"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global flags after the subcommand name
  Options opt;
  app.add_option("--format", opt.format, "Output format: text or json")->check(CLI::IsMember({"text", "json"}));

  int m = 0, n = 0, p = 0, i = 0, j = 0, k = 0;
  auto* c_cgc = app.add_subcommand("cgc", "Rational Clebsch-Gordan coefficient (3j-symbol)");
  c_cgc->add_option("--m", m)->required();
  c_cgc->add_option("--n", n)->required();
  c_cgc->add_option("--p", p)->required();
  c_cgc->add_option("--i", i)->required();
  c_cgc->add_option("--j", j)->required();
  c_cgc->add_option("--k", k)->required();

  int tm = 0, tn = 0, tp = 0, tk = 0;
  auto* c_tv = app.add_subcommand("transvectant", "Transvectant expansion in divided-power coordinates");
  c_tv->add_option("--m", tm)->required();
  c_tv->add_option("--n", tn)->required();
  c_tv->add_option("--p", tp)->required();
  c_tv->add_option("--k", tk, "Orbit raising steps (default 0)");

  int l1 = 0, mu1 = 0, l2 = 0, mu2 = 0, rho = 0;
  auto* c_lam = app.add_subcommand("lambda", "Product-formula coefficient lambda");
  c_lam->add_option("--l1", l1)->required();
  c_lam->add_option("--mu1", mu1)->required();
  c_lam->add_option("--l2", l2)->required();
  c_lam->add_option("--mu2", mu2)->required();
  c_lam->add_option("--rho", rho)->required();

  int dim_flag = 3;
  std::string elem1, elem2;
  auto* c_prod = app.add_subcommand("product", "Orbit expansion of a product of two orbit functions");
  c_prod->add_option("--dim", dim_flag)->check(CLI::IsMember({2, 3}));
  c_prod->add_option("elem1", elem1, "A[l,mu,k] or A[l,m]")->required();
  c_prod->add_option("elem2", elem2)->required();

  int dim_b = 3, kmax = -1;
  std::string belem1, belem2;
  auto* c_br = app.add_subcommand("bracket", "Structure constants of a basis bracket");
  c_br->add_option("--dim", dim_b)->check(CLI::IsMember({2, 3}));
  c_br->add_option("--kmax", kmax, "Truncate to delta powers <= kmax (3D)");
  c_br->add_option("elem1", belem1)->required();
  c_br->add_option("elem2", belem2)->required();

  int dim_t = 3, bound = 3;
  auto* c_tab = app.add_subcommand("table", "All brackets with delta0 grade sum <= bound, as JSON");
  c_tab->add_option("--dim", dim_t)->check(CLI::IsMember({2, 3}));
  c_tab->add_option("--bound", bound)->required();

  std::string input_path;
  int max_grade = 3, levels = 3;
  std::string mode = "numeric";
  auto* c_nf = app.add_subcommand("normalform", "Multi-level normal form of N + (Euler input)");
  c_nf->add_option("--input", input_path, "Path to a LieComb JSON file")->required();
  c_nf->add_option("--max-grade", max_grade)->required();
  c_nf->add_option("--levels", levels)->check(CLI::Range(1, 3));
  c_nf->add_option("--mode", mode)->check(CLI::IsMember({"numeric", "symbolic"}));

  bool quick = false;
  VerifyRanges ranges;
  auto* c_ver = app.add_subcommand("verify", "Run the closed-form-vs-oracle identity suite");
  c_ver->add_flag("--quick", quick, "Smaller ranges");
  c_ver->add_option("--max-mn", ranges.max_mn, "Tensor-weight grid bound (orthogonality, inversion)");
  c_ver->add_option("--max-mu", ranges.max_mu, "3D product/bracket grid bound");
  c_ver->add_option("--max-mu-2d", ranges.max_mu_2d, "2D grid bound");
  c_ver->add_option("--trials", ranges.trials, "Randomized identity trials");

  CLI11_PARSE(app, argc, argv);

  auto print_scalar = [&](const Rational& r) {
    if (opt.json())
      std::cout << nlohmann::json(r.str()).dump() << "\n";
    else
      std::cout << r.str() << "\n";
  };

  try {
    if (*c_cgc) {
      print_scalar(cgc_3j(m, n, p, i, j, k));
    } else if (*c_tv) {
      TensorExpansion t = tk == 0 ? transvectant(tm, tn, tp) : orbit_transvectant(tm, tn, tp, tk);
      if (opt.json()) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& [ij, c] : t.terms) out.push_back({{"i", ij.first}, {"j", ij.second}, {"coeff", c.str()}});
        std::cout << out.dump() << "\n";
      } else {
        for (const auto& [ij, c] : t.terms)
          std::cout << c.str() << " * T[" << ij.first << "," << ij.second << "]\n";
      }
    } else if (*c_lam) {
      print_scalar(lambda_coeff(l1, mu1, l2, mu2, rho));
    } else if (*c_prod) {
      Dim d = dim_flag == 2 ? Dim::d2 : Dim::d3;
      OrbitElement e1 = OrbitElement::parse(d, elem1), e2 = OrbitElement::parse(d, elem2);
      LieComb out(d);
      for (const auto& [of, c] : product_orbit(d, e1.function(), e2.function()))
        out.add_term(OrbitElement(d, static_cast<int>(of.l), static_cast<int>(of.base.mu), static_cast<int>(of.base.k)),
                     ParamPoly(c));
      print_comb(out, opt);
    } else if (*c_br) {
      Dim d = dim_b == 2 ? Dim::d2 : Dim::d3;
      OrbitElement e1 = OrbitElement::parse(d, belem1), e2 = OrbitElement::parse(d, belem2);
      LieComb out = kmax >= 0 ? bracket_filtered(e1, e2, kmax) : bracket(e1, e2);
      print_comb(out, opt);
    } else if (*c_tab) {
      return run_table(dim_t == 2 ? Dim::d2 : Dim::d3, bound, opt);
    } else if (*c_nf) {
      std::ifstream in(input_path);
      if (!in) throw std::invalid_argument("cannot open input file: " + input_path);
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      NFProblem prob{LieComb::from_json(text), max_grade,
                     mode == "symbolic" ? NFMode::symbolic : NFMode::numeric};
      prob.validate();
      NFReport rep = normal_form(prob, levels);
      std::cout << rep.json() << "\n";
    } else if (*c_ver) {
      return run_verify(quick ? VerifyRanges::quick() : ranges);
    }
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
