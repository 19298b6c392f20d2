// lca: command-line front end. See README.md for the command reference.
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lca/characters.hpp"
#include "lca/checks.hpp"
#include "lca/conformal.hpp"
#include "lca/diffops.hpp"
#include "lca/glinf.hpp"
#include "lca/parse.hpp"
#include "lca/schur_weyl.hpp"

using json = nlohmann::ordered_json;
using namespace lca;

namespace {

struct Global {
  int N = 12;
  std::uint64_t seed = RunConfig{}.seed;
  int samples = RunConfig{}.samples;
  std::string format = "json";
};

// Input errors are reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json series_json(const QSeries& s) {
  json a = json::array();
  for (const auto& c : s.coeffs()) {
    if (is_integer(c)) {
      a.push_back(to_long(c));
    } else {
      a.push_back(c.get_str());
    }
  }
  return a;
}

// Flat table rendering: scalars as "key: value", arrays of scalars as an
// aligned index/value table, arrays of objects one row per object.
void print_table(const json& j, const std::string& indent = "") {
  for (const auto& [key, value] : j.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      std::cout << indent << key << ":\n";
      for (const auto& row : value) {
        std::cout << indent << "  -";
        for (const auto& [k, v] : row.items()) std::cout << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
        std::cout << "\n";
      }
    } else if (value.is_array() && !value.empty() && !value.front().is_array()) {
      std::cout << indent << key << ":\n";
      std::size_t width = 1;
      for (const auto& v : value) width = std::max(width, (v.is_string() ? v.get<std::string>() : v.dump()).size());
      for (std::size_t i = 0; i < value.size(); ++i) {
        std::string cell = value[i].is_string() ? value[i].get<std::string>() : value[i].dump();
        std::cout << indent << "  " << std::setw(4) << i << "  " << std::setw(static_cast<int>(width)) << cell << "\n";
      }
    } else if (value.is_object()) {
      std::cout << indent << key << ":\n";
      print_table(value, indent + "  ");
    } else {
      std::cout << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

void emit(const Global& g, const json& j) {
  if (g.format == "table") {
    print_table(j);
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

Partition partition_arg(const std::string& text) {
  std::vector<long> parts = parse_int_list(text);
  return Partition(parts);
}

// Par⁻ input "0,-1,-2" (non-increasing, non-positive) to its mirror partition.
Partition mirror_arg(const std::string& text) {
  std::vector<long> parts = parse_int_list(text);
  std::vector<long> mirror;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] > 0) throw UsageError("negative partition entries must be <= 0");
    if (i > 0 && parts[i] > parts[i - 1]) throw UsageError("negative partition must be non-increasing");
  }
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) mirror.push_back(-*it);
  return Partition(mirror);
}

std::string minus_string(const Partition& mirror) {
  std::string s;
  for (auto it = mirror.parts().rbegin(); it != mirror.parts().rend(); ++it) {
    s += (s.empty() ? "" : ",") + std::to_string(-*it);
  }
  return s;
}

GcElement gc_arg(const std::string& text) { return {parse_bivar(text)}; }

json check_json(const CheckResult& r) {
  return {{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"formula", r.formula}};
}

int cmd_bracket(const Global& g, const std::string& a_text, const std::string& b_text, const std::string& sub) {
  GcElement a = gc_arg(a_text), b = gc_arg(b_text);
  json j{{"a", a.poly.to_string()}, {"b", b.poly.to_string()}};
  Poly<LDX> br = lambda_bracket(a, b);
  j["bracket"] = render_grouped(br);
  j["formula"] = "[a_l b] = a(-l, l+d+x) b(l+d, x) - b(l+d, -l+x) a(-l, x)";
  int code = 0;
  if (!sub.empty()) {
    SubalgebraTag tag = parse_subalgebra_tag(sub);
    bool closed = closure_check(tag, a, b);
    j["subalgebra"] = std::string(to_string(tag));
    j["closed"] = closed;
    code = closed ? 0 : 1;
  }
  if (g.format == "table") {
    std::cout << j["bracket"].get<std::string>() << "\n";
    if (j.contains("closed")) std::cout << "closed in " << sub << ": " << (code == 0 ? "true" : "false") << "\n";
  } else {
    emit(g, j);
  }
  return code;
}

int cmd_selftest(const Global& g, const std::vector<std::string>& suites) {
  RunConfig cfg{g.N, g.seed, g.samples};
  json out{{"config", {{"N", g.N}, {"seed", g.seed}, {"samples", g.samples}}}};
  json groups = json::array();
  bool all = true;
  for (const auto& name : suites.empty() ? suite_names() : suites) {
    auto results = run_suite(name, cfg);
    json checks = json::array();
    bool ok = true;
    for (const auto& r : results) {
      checks.push_back(check_json(r));
      ok = ok && r.passed;
    }
    all = all && ok;
    groups.push_back({{"suite", name}, {"passed", ok}, {"checks", checks}});
  }
  out["suites"] = groups;
  out["passed"] = all;
  if (g.format == "table") {
    for (const auto& s : out["suites"]) {
      for (const auto& c : s["checks"]) {
        std::printf("%-12s %-4s %s: %s\n", s["suite"].get<std::string>().c_str(),
                    c["passed"].get<bool>() ? "ok" : "FAIL", c["name"].get<std::string>().c_str(),
                    c["detail"].get<std::string>().c_str());
      }
    }
    std::printf("overall: %s\n", all ? "pass" : "fail");
  } else {
    emit(g, out);
  }
  return all ? 0 : 1;
}

int cmd_char(const Global& g, const std::string& plus, const std::string& minus, const std::string& bc,
             bool oracle) {
  json j;
  int code = 0;
  if (!bc.empty()) {
    BCWeight w = parse_bcweight(bc);
    if (!w.is_dominant_integral()) throw UsageError("weight " + w.to_string() + " is not dominant integral");
    const auto& sel = selected_convention(w.family);
    QSeries s = w.family == BCFamily::B ? ch_binf(w, g.N) : ch_cinf(w, g.N);
    j["weight"] = w.to_string();
    j["N"] = g.N;
    j["character"] = series_json(s);
    j["convention"] = sel.convention.describe();
    j["printed_convention_matches"] = sel.printed_matches;
    j["degree_one_count"] = degree_one_count(w);
    j["formula"] = "closed product formula, index convention fixed by the coroot product";
    if (oracle) {
      QSeries o = ch_bc_coroot_oracle(w, g.N);
      j["oracle"] = series_json(o);
      j["matches_oracle"] = o == s;
      code = o == s ? 0 : 1;
    }
  } else {
    if (plus.empty() && minus.empty()) throw UsageError("char needs --plus, --minus or --bc");
    Partition p = plus.empty() ? Partition() : partition_arg(plus);
    Partition m = minus.empty() ? Partition() : mirror_arg(minus);
    QSeries s = ch_Lplus(p, g.N) * ch_Lminus(m, g.N);
    j["lambda_plus"] = p.to_string();
    j["lambda_minus"] = minus_string(m);
    j["N"] = g.N;
    j["character"] = series_json(s);
    j["formula"] = "prod_{i<j} (1-q^{l_i-l_j+j-i})/(1-q^{j-i}) / prod_j (1-q^j)^{l_{d-j+1}}_q";
    if (oracle) {
      QSeries o = ch_ssyt_oracle(p, g.N) * ch_ssyt_oracle(m, g.N);
      j["oracle"] = series_json(o);
      j["matches_oracle"] = o == s;
      code = o == s ? 0 : 1;
    }
  }
  emit(g, j);
  return code;
}

int cmd_growth(const Global& g, const std::string& plus, const std::string& weight) {
  json j;
  GenWeight w;
  if (!plus.empty()) {
    Partition p = partition_arg(plus);
    w = GenWeight::from_list(std::vector<Rat>(p.parts().begin(), p.parts().end()));
    j["lambda"] = p.to_string();
    j["estimate"] = growth_estimate(ch_Lplus(p, g.N));
    j["estimate_N"] = g.N;
  } else if (!weight.empty()) {
    w = GenWeight::from_list(parse_rat_list(weight));
    j["lambda"] = weight;
  } else {
    throw UsageError("growth needs --plus or --weight");
  }
  auto exact = growth_exact(w);
  j["growth"] = exact ? json(*exact) : json("infinite");
  j["formula"] = "growth = |lambda| on non-increasing non-negative integer labels, infinite otherwise";
  if (g.format == "table") {
    std::cout << (exact ? std::to_string(*exact) : std::string("infinite")) << "\n";
  } else {
    emit(g, j);
  }
  return 0;
}

int cmd_span(const Global& g, const std::string& plus, const std::string& minus, const std::string& set_name) {
  Partition p = plus.empty() ? Partition() : partition_arg(plus);
  Partition m = minus.empty() ? Partition() : mirror_arg(minus);
  if (p.size() == 0 && m.size() == 0) throw UsageError("span needs a nonempty --plus or --minus");
  GeneratorSet set = parse_generator_set(set_name);
  QSeries dims = cyclic_span_dims(p, m, g.N, set);
  QSeries expected = ch_Lplus(p, g.N) * ch_Lminus(m, g.N);
  json j{{"lambda_plus", p.to_string()},
         {"lambda_minus", minus_string(m)},
         {"generator_set", std::string(to_string(set))},
         {"N", g.N},
         {"dims", series_json(dims)},
         {"character", series_json(expected)},
         {"matches_character", dims == expected},
         {"formula", "graded dimensions of the cyclic span of the highest weight vector"}};
  emit(g, j);
  return dims == expected ? 0 : 1;
}

int cmd_cocycle(const Global& g, const std::string& a_text, const std::string& b_text) {
  DiffOp a = parse_diffop(a_text), b = parse_diffop(b_text);
  json j{{"a", a.to_string()},
         {"b", b.to_string()},
         {"bracket", diffop_bracket(a, b).to_string()},
         {"psi", cocycle_psi(a, b).get_str()},
         {"psi_unnormalized", cocycle_psi_unnormalized(a, b).get_str()},
         {"a_in_Dminus", in_Dminus(a)},
         {"b_in_Dminus", in_Dminus(b)},
         {"formula", "Psi(f d^m, g d^n) = m! n!/(m+n+1)! Res f^(n+1) g^(m)"}};
  emit(g, j);
  return 0;
}

int cmd_phi(const Global& g, const std::string& a_text, const std::string& s_text, int m, int lo, int hi, bool hat,
            const std::string& b_text) {
  DiffOp a = parse_diffop(a_text);
  Rat s = parse_rat(s_text);
  if (m < 0) throw UsageError("--m must be >= 0");
  if (lo > hi) throw UsageError("empty window");
  BandedMat mat = hat ? phi_hat(s, m, a) : phi_s_m(s, m, a);
  json entries = json::array();
  for (const auto& [i, jj, e] : mat.window(lo, hi)) entries.push_back({{"i", i}, {"j", jj}, {"entry", to_string(e)}});
  json j{{"a", a.to_string()}, {"s", s.get_str()}, {"m", m}, {"hat", hat}, {"window", {lo, hi}}, {"entries", entries}};
  j["central"] = to_string(mat.central());
  j["in_binf"] = in_binf(mat);
  j["in_cinf"] = in_cinf(mat);
  j["in_dinf"] = in_dinf(mat);
  j["formula"] = "phi_s(t^k f(D)) = sum_j f(-j+s+u) E_{j-k,j}";
  int code = 0;
  if (!b_text.empty()) {
    DiffOp b = parse_diffop(b_text);
    bool ok = homomorphism_check(s, m, a, b);
    j["b"] = b.to_string();
    j["homomorphism"] = ok;
    code = ok ? 0 : 1;
  }
  emit(g, j);
  return code;
}

int cmd_schurweyl(const Global& g, int M, int Mp) {
  if (M < 0 || Mp < 0) throw UsageError("tensor powers must be >= 0");
  bool ok = Mp == 0 ? cauchy_check(M, g.N) : mixed_cauchy_check(M, Mp, g.N);
  json terms = json::array();
  for (const auto& p : partitions_of(M)) {
    terms.push_back({{"lambda_plus", p.to_string()}, {"multiplicity", dim_U(p)}, {"offset", p.n()}});
  }
  json j{{"M", M}, {"M_prime", Mp}, {"N", g.N}, {"terms", terms}, {"holds", ok}};
  j["formula"] = "sum f^{l+} f^{l-} q^{n(l+)+n(l-)} ch L+ ch L- = (1-q)^{-(M+M')}";
  if (g.format == "table") {
    std::cout << "identity holds: " << (ok ? "true" : "false") << "\n";
  } else {
    emit(g, j);
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with conformal algebras, differential operators and their representations"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("-N,--truncate", g.N, "truncation order")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--samples", g.samples, "random samples per property")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "table"}));

  std::string a_text, b_text, sub, plus, minus, bc, weight, set_name = "Dminus", s_text = "0";
  std::vector<std::string> suites;
  bool oracle = false, hat = false;
  int m = 0, lo = -3, hi = 3, M = 1, Mp = 0;

  auto* bracket = app.add_subcommand("bracket", "lambda-bracket of two elements of gc1");
  bracket->add_option("a", a_text, "polynomial in d, x")->required();
  bracket->add_option("b", b_text, "polynomial in d, x")->required();
  bracket->add_option("--subalgebra", sub, "also check closure in gc1x, oc1 or spc1");

  auto* selftest = app.add_subcommand("selftest", "run the invariant suites");
  selftest->add_option("--suite", suites, "restrict to these suites");

  auto* chr = app.add_subcommand("char", "q-character of a highest weight module");
  chr->add_option("--plus", plus, "partition, e.g. 2,1");
  chr->add_option("--minus", minus, "negative partition, e.g. 0,-1");
  chr->add_option("--bc", bc, "b/c weight, e.g. \"B c=1 l=1,0\"");
  chr->add_flag("--oracle", oracle, "compare with the independent oracle");

  auto* growth = app.add_subcommand("growth", "growth of L(lambda)");
  growth->add_option("--plus", plus, "partition");
  growth->add_option("--weight", weight, "rational labels, e.g. 1,1/2");

  auto* span = app.add_subcommand("span", "graded dimensions of the cyclic span of a highest weight vector");
  span->add_option("--plus", plus, "partition");
  span->add_option("--minus", minus, "negative partition");
  span->add_option("--set", set_name, "Dminus, D0minus, Dsigma_minus or D0sigmabar_minus");

  auto* cocycle = app.add_subcommand("cocycle", "commutator and cocycle of two differential operators");
  cocycle->add_option("a", a_text, "operator, e.g. t^-1*(D^2-D)")->required();
  cocycle->add_option("b", b_text, "operator")->required();

  auto* phi = app.add_subcommand("phi", "matrix image of a differential operator");
  phi->add_option("a", a_text, "operator")->required();
  phi->add_option("--s", s_text, "shift s, rational");
  phi->add_option("--m", m, "nilpotency order of u");
  phi->add_option("--lo", lo, "window start");
  phi->add_option("--hi", hi, "window end");
  phi->add_flag("--hat", hat, "apply the central correction");
  phi->add_option("--check-with", b_text, "second operator for the homomorphism check");

  auto* sw = app.add_subcommand("schurweyl", "character identity of T^M(V) (x) T^M'(V')");
  sw->add_option("--M", M, "tensor power of V");
  sw->add_option("--Mprime", Mp, "tensor power of V'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*bracket) return cmd_bracket(g, a_text, b_text, sub);
    if (*selftest) return cmd_selftest(g, suites);
    if (*chr) return cmd_char(g, plus, minus, bc, oracle);
    if (*growth) return cmd_growth(g, plus, weight);
    if (*span) return cmd_span(g, plus, minus, set_name);
    if (*cocycle) return cmd_cocycle(g, a_text, b_text);
    if (*phi) return cmd_phi(g, a_text, s_text, m, lo, hi, hat, b_text);
    if (*sw) return cmd_schurweyl(g, M, Mp);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
