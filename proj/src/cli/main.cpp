#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sft/cobordism.hpp"
#include "sft/gw.hpp"
#include "sft/grading.hpp"
#include "sft/homology.hpp"
#include "sft/laws.hpp"
#include "sft/modelfile.hpp"
#include "sft/models.hpp"
#include "sft/monomial.hpp"
#include "sft/poisson.hpp"
#include "sft/weyl.hpp"

using json = nlohmann::json;
using namespace sft;

namespace {

std::string clip(std::string s, size_t cap = 240) {
  if (s.size() > cap) {
    s.resize(cap);
    s += " ...";
  }
  return s;
}

LoadedModel load_model_arg(const std::string& arg, long weight) {
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open model file " + arg);
    std::stringstream buf;
    buf << in.rdbuf();
    LoadedModel lm = load_model_file(buf.str());
    if (weight > 0) lm.policy.max_weight = weight;
    return lm;
  }
  return load_builtin(arg, weight > 0 ? weight : 6);
}

// Files land in SFT_OUTPUT_DIR unless the path is absolute or "-".
std::string resolve_output(const std::string& path) {
  if (path == "-" || path.empty()) return path;
  if (std::filesystem::path(path).is_absolute()) return path;
  const char* dir = std::getenv("SFT_OUTPUT_DIR");
  if (!dir || !*dir) return path;
  return (std::filesystem::path(dir) / path).string();
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::string full = resolve_output(path);
  std::ofstream out(full);
  if (!out) throw std::invalid_argument("cannot write " + full);
  out << content;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

// "pass" or the first monomial off the expected degree. With no expected
// value the element only has to be homogeneous.
std::string degree_report(const SuperElement& body, std::optional<Rat> expect) {
  const VariableTable& tab = body.table();
  for (const auto& [mono, c] : body.terms()) {
    Rat d = monomial_degree(tab, mono);
    if (!expect) expect = d;
    if (d != *expect)
      return monomial_str(tab, mono) + " has degree " + rat_str(d) + ", expected " +
             rat_str(*expect);
  }
  return "pass";
}

long slice_weight(const TruncationPolicy& pol) {
  return pol.max_weight >= 0 ? pol.max_weight : 6;
}

int cmd_verify(const std::string& model_arg, long weight) {
  LoadedModel lm = load_model_arg(model_arg, weight);
  TruncationPolicy pol = lm.policy;
  if (pol.max_weight < 0) pol.max_weight = 6;

  json rep;
  rep["model"] = lm.name;
  rep["kind"] = lm.kind;
  rep["weight"] = pol.max_weight;
  int rc = 0;

  if (lm.kind == "hamiltonian") {
    const Model& m = *lm.hamiltonian;
    SuperElement res = m.ham.level == Level::Quantum
                           ? weyl_commutator(m.ham.body, m.ham.body, m.hbar, pol)
                           : poisson_bracket(m.ham.body, m.ham.body, m.ham.pairing, pol);
    if (res.is_zero()) {
      rep["hh_residual"] = "zero";
    } else {
      rep["hh_residual"] = clip(res.str());
      rc = 3;
    }

    std::optional<Rat> expect;
    if (m.ham.level == Level::Quantum)
      expect = Rat(-1);
    else if (m.ham.level == Level::Rational)
      expect = Rat(2 * (m.ham.dimension_n - 3) - 1);
    std::string deg = degree_report(m.ham.body, expect);
    rep["degree_check"] = deg;
    if (deg != "pass") rc = 3;

    try {
      DGA dga = classical_dga(m);
      build_slice(dga, slice_weight(pol));
      rep["d_squared"] = "pass";
    } catch (const SquareError& e) {
      rep["d_squared"] = clip(e.what());
      rc = 3;
    }
  } else if (lm.kind == "differential") {
    rep["hh_residual"] = "not applicable";
    rep["degree_check"] = "pass";
    try {
      build_slice(*lm.dga, slice_weight(pol));
      rep["d_squared"] = "pass";
    } catch (const SquareError& e) {
      rep["d_squared"] = clip(e.what());
      rc = 3;
    }
  } else if (lm.kind == "floer") {
    // Construction already squares the differential; loading is the proof.
    rep["hh_residual"] = "not applicable";
    rep["degree_check"] = "pass";
    rep["d_squared"] = "pass";
  } else {
    rep["hh_residual"] = "not applicable";
    rep["degree_check"] = degree_report(lm.potential->body,
                                        Rat(2 * (lm.potential->dimension_n - 3)));
    rep["d_squared"] = "not applicable";
    if (rep["degree_check"] != "pass") rc = 3;
  }

  emit(rep);
  return rc;
}

int cmd_homology(const std::string& model_arg, long weight, const std::string& degrees,
                 bool tau_zero) {
  LoadedModel lm = load_model_arg(model_arg, weight);

  std::optional<Rat> lo, hi;
  if (!degrees.empty()) {
    auto dots = degrees.find("..");
    if (dots == std::string::npos)
      throw std::invalid_argument("--degrees wants the form a..b");
    lo = rat_parse(degrees.substr(0, dots));
    hi = rat_parse(degrees.substr(dots + 2));
  }

  json rep;
  rep["model"] = lm.name;
  rep["kind"] = lm.kind;

  std::map<Rat, long> table;
  if (lm.kind == "floer") {
    if (tau_zero) throw std::invalid_argument("--tau-zero needs a differential model");
    table = floer_betti(*lm.floer);
  } else {
    DGA dga;
    if (lm.kind == "hamiltonian")
      dga = classical_dga(*lm.hamiltonian);
    else if (lm.kind == "differential")
      dga = *lm.dga;
    else
      throw std::invalid_argument("homology needs a hamiltonian, differential, or floer model");
    if (tau_zero) dga = free_quotient(dga);
    long w = weight > 0 ? weight : slice_weight(lm.policy);
    rep["weight"] = w;
    ChainComplexSlice slice = build_slice(dga, w);
    table = betti_table(slice);

    if (!lm.cycles.empty()) {
      json cy;
      for (const auto& [label, elem] : lm.cycles) cy[label] = is_cycle(dga, elem);
      rep["cycles"] = cy;
    }
  }
  rep["tau_zero"] = tau_zero;

  json rows = json::array();
  for (const auto& [deg, b] : table) {
    if (lo && deg < *lo) continue;
    if (hi && deg > *hi) continue;
    rows.push_back({rat_str(deg), b});
  }
  rep["betti"] = rows;

  emit(rep);
  return 0;
}

int cmd_gw(int n, long order, bool oracle, const std::string& json_path,
           const std::string& csv_path) {
  if (n < 1) throw std::invalid_argument("--n must be >= 1");
  if (order < 1) throw std::invalid_argument("--order must be >= 1");
  if (oracle && n < 2) throw std::invalid_argument("--oracle needs --n >= 2");

  BootstrapResult res = bootstrap(n, std::vector<long>(n, order));

  json rep;
  rep["n"] = n;
  rep["order"] = order;
  json stages = json::array();
  for (size_t k = 0; k < res.stages.size(); ++k) {
    const BootstrapStage& st = res.stages[k];
    const VariableTable& tab = *st.f_cone.tab;
    std::string tname = tab.name(st.f_cone.evolution);
    std::cout << "stage " << (k + 1) << ": cone potential in " << tname << ", "
              << st.f_cone.body.num_terms() << " terms; closed, "
              << st.f_closed.body.num_terms() << " terms\n";
    json head;
    long cap = std::min<long>(order, 4);
    for (long j = 1; j <= cap; ++j) {
      SuperElement c = st.f_cone.body.coefficient_of(st.f_cone.evolution, j);
      if (c.is_zero()) continue;
      std::string s = c.str();
      std::cout << "  " << tname << "^" << j << ": " << s << "\n";
      head[tname + "^" + std::to_string(j)] = s;
    }
    stages.push_back({{"stage", k + 1},
                      {"cone_terms", st.f_cone.body.num_terms()},
                      {"closed_terms", st.f_closed.body.num_terms()},
                      {"head", head}});
  }
  rep["stages"] = stages;

  int rc = 0;
  std::string csv;
  if (!res.nd.entries.empty()) {
    NdTable orc;
    if (oracle) orc = kontsevich_oracle(res.nd.entries.rbegin()->first);
    json nd, oracle_tab;
    csv = oracle ? "d,N_d,oracle,agree\n" : "d,N_d\n";
    std::cout << (oracle ? "d  N_d  oracle  agree\n" : "d  N_d\n");
    for (const auto& [d, v] : res.nd.entries) {
      nd[std::to_string(d)] = v.get_str();
      std::cout << d << "  " << v.get_str();
      csv += std::to_string(d) + "," + v.get_str();
      if (oracle) {
        const Int& o = orc.entries.at(d);
        bool agree = o == v;
        if (!agree) rc = 3;
        oracle_tab[std::to_string(d)] = o.get_str();
        std::cout << "  " << o.get_str() << "  " << (agree ? "yes" : "NO");
        csv += "," + o.get_str() + "," + (agree ? std::string("yes") : std::string("no"));
      }
      std::cout << "\n";
      csv += "\n";
    }
    rep["nd"] = nd;
    if (oracle) {
      rep["oracle"] = oracle_tab;
      rep["oracle_agrees"] = (rc == 0);
    }
  }

  if (!json_path.empty()) write_output(json_path, rep.dump(2) + "\n");
  if (!csv_path.empty()) write_output(csv_path, csv);
  return rc;
}

int cmd_satellite(long g, long n, long K) {
  SatelliteModel sat = circle_satellite(g, n, K);
  const VariableTable& tab = *sat.tab;
  json rep;
  rep["g"] = g;
  rep["n"] = n;
  rep["K"] = K;
  json rows = json::array();
  for (const auto& [mono, c] : sat.form.terms())
    rows.push_back({monomial_str(tab, mono), rat_str(c)});
  rep["terms"] = rows;
  emit(rep);
  return 0;
}

int cmd_laws(unsigned long seed, int cases, int pairs) {
  LawReport r = run_law_suite(seed, cases, pairs);
  json rep;
  rep["seed"] = seed;
  rep["cases_per_law"] = r.cases_per_law;
  rep["hbar_pairs"] = r.hbar_pairs;
  json fails = json::array();
  for (const auto& f : r.failures) fails.push_back({{"law", f.law}, {"detail", clip(f.detail)}});
  rep["failures"] = fails;
  rep["ok"] = r.ok();
  emit(rep);
  return r.ok() ? 0 : 3;
}

std::vector<long> parse_long_list(const std::string& s) {
  std::vector<long> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact graded-algebra toolkit for contact homology models"};
  app.require_subcommand(1);

  std::string model_arg;
  long weight = 0;

  auto* verify = app.add_subcommand("verify", "master equation, degree, and d^2 checks");
  verify->add_option("--model", model_arg, "builtin name or model file path")->required();
  verify->add_option("--weight", weight, "truncation weight override");

  std::string degrees;
  bool tau_zero = false;
  auto* homology = app.add_subcommand("homology", "Betti table of a model's differential");
  homology->add_option("--model", model_arg, "builtin name or model file path")->required();
  homology->add_option("--weight", weight, "slice weight cap");
  homology->add_option("--degrees", degrees, "degree range a..b");
  homology->add_flag("--tau-zero", tau_zero, "pass to the free quotient at tau = 0");

  int gw_n = 2;
  long gw_order = 6;
  bool gw_oracle = false;
  std::string gw_json, gw_csv;
  auto* gw = app.add_subcommand("gw", "potential bootstrap and curve counts");
  gw->add_option("--n", gw_n, "highest bootstrap stage");
  gw->add_option("--order", gw_order, "evolution order of the last stage");
  gw->add_flag("--oracle", gw_oracle, "compare counts against the independent recursion");
  gw->add_option("--json", gw_json, "write the JSON report here ('-' for stdout)");
  gw->add_option("--csv", gw_csv, "write the count table as CSV here");

  auto* grading = app.add_subcommand("grading", "index and degree evaluators");
  grading->require_subcommand(1);
  std::string cz_plus, cz_minus;
  long gr_g = 0, gr_r = 0, gr_c1 = 0;
  int gr_n = 2;
  auto* dim = grading->add_subcommand("dim", "expected moduli dimension");
  dim->add_option("--cz-plus", cz_plus, "comma list of positive-end indices");
  dim->add_option("--cz-minus", cz_minus, "comma list of negative-end indices");
  dim->add_option("--g", gr_g, "genus");
  dim->add_option("--r", gr_r, "marked points");
  dim->add_option("--c1", gr_c1, "first Chern number of the class");
  dim->add_option("--n", gr_n, "ambient dimension parameter")->required();

  std::string cz_str = "0", delta_deg = "0";
  auto* pq = grading->add_subcommand("pq", "orbit variable degrees");
  pq->add_option("--cz", cz_str, "Conley-Zehnder index")->required();
  pq->add_option("--n", gr_n, "ambient dimension parameter")->required();

  long bt_k = 1, bt_c1 = 2, bt_l = 1;
  auto* bott = grading->add_subcommand("bott", "degrees in a fibered family");
  bott->add_option("--k", bt_k, "multiplicity")->required();
  bott->add_option("--delta-deg", delta_deg, "degree of the base class");
  bott->add_option("--c1", bt_c1, "first Chern number of the fiber class")->required();
  bott->add_option("--l", bt_l, "fiber order");

  long fr_cz = 0, fr_2m = 0, fr_l = 1;
  auto* fractional = grading->add_subcommand("fractional", "torsion-corrected degree");
  fractional->add_option("--cz", fr_cz, "index in the chosen frame")->required();
  fractional->add_option("--two-m", fr_2m, "transported correction 2m")->required();
  fractional->add_option("--l", fr_l, "torsion order")->required();

  int det_sign = 1;
  long neg_eigen = -1, multiple = 0;
  auto* parity = grading->add_subcommand("parity", "index parity and bad-orbit test");
  parity->add_option("--n", gr_n, "ambient dimension parameter")->required();
  parity->add_option("--det-sign", det_sign, "sign of det(I - A), +1 or -1")->required();
  parity->add_option("--neg-eigen", neg_eigen,
                     "return-map eigenvalue count in (-1,0), enables the bad-orbit test");
  parity->add_option("--multiple", multiple, "the multiple to test");

  long bk_p = 9, bk_n = 5, bk_kmax = 20;
  auto* brieskorn = grading->add_subcommand("brieskorn", "homology ranks of the exotic spheres");
  brieskorn->add_option("--p", bk_p, "first exponent, 1 mod 8")->required();
  brieskorn->add_option("--n", bk_n, "complex dimension, odd")->required();
  brieskorn->add_option("--k-max", bk_kmax, "table cap");

  long yau_imax = 5;
  std::string yau_gens = "pt:0";
  auto* yau = grading->add_subcommand("yau", "subcritical generator degrees");
  yau->add_option("--n", gr_n, "ambient dimension parameter")->required();
  yau->add_option("--i-max", yau_imax, "orbit index cap");
  yau->add_option("--generators", yau_gens, "comma list label:dim of homology classes");

  long sat_g = 0, sat_n = 2, sat_K = 4;
  auto* satellite = app.add_subcommand("satellite", "marked-point forms over the circle");
  satellite->add_option("--g", sat_g, "genus")->required();
  satellite->add_option("--n", sat_n, "free slots")->required();
  satellite->add_option("--K", sat_K, "orbit multiplicity cap");

  unsigned long seed = 20260822;
  int law_cases = 100, law_pairs = 20;
  auto* laws = app.add_subcommand("laws", "randomized structure-law suite");
  laws->add_option("--seed", seed, "RNG seed");
  laws->add_option("--cases", law_cases, "cases per law");
  laws->add_option("--hbar-pairs", law_pairs, "leading-order commutator pairs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(model_arg, weight);
    if (homology->parsed()) return cmd_homology(model_arg, weight, degrees, tau_zero);
    if (gw->parsed()) return cmd_gw(gw_n, gw_order, gw_oracle, gw_json, gw_csv);
    if (satellite->parsed()) return cmd_satellite(sat_g, sat_n, sat_K);
    if (laws->parsed()) return cmd_laws(seed, law_cases, law_pairs);
    if (grading->parsed()) {
      json rep;
      if (dim->parsed()) {
        rep["dim"] = moduli_dim(parse_long_list(cz_plus), parse_long_list(cz_minus), gr_g,
                                gr_r, gr_c1, gr_n);
      } else if (pq->parsed()) {
        auto [dp, dq] = degrees_pq(rat_parse(cz_str), gr_n);
        rep["deg_p"] = rat_str(dp);
        rep["deg_q"] = rat_str(dq);
      } else if (bott->parsed()) {
        BottDegrees b = bott_degrees(bt_k, rat_parse(delta_deg), bt_c1, bt_l);
        rep["p"] = rat_str(b.p);
        rep["q"] = rat_str(b.q);
        rep["t"] = rat_str(b.t);
        rep["tau"] = rat_str(b.tau);
      } else if (fractional->parsed()) {
        rep["degree"] = rat_str(fractional_degree(fr_cz, fr_2m, fr_l));
      } else if (parity->parsed()) {
        rep["parity"] =
            parity_from_return_map(gr_n, det_sign) == Parity::Odd ? "odd" : "even";
        if (neg_eigen >= 0) {
          OrbitGradingData data;
          data.n = gr_n;
          data.return_map_neg_eigen_mult = neg_eigen;
          rep["bad"] = is_bad_even_multiple(data, multiple);
        }
      } else if (brieskorn->parsed()) {
        json rows = json::array();
        for (long k = 0; k <= bk_kmax; ++k) {
          long c = brieskorn_ck(bk_p, bk_n, k);
          if (c != 0) rows.push_back({k, c});
        }
        rep["c"] = rows;
      } else if (yau->parsed()) {
        std::vector<std::pair<std::string, long>> gens;
        std::stringstream ss(yau_gens);
        std::string item;
        while (std::getline(ss, item, ',')) {
          auto colon = item.find(':');
          if (colon == std::string::npos)
            throw std::invalid_argument("--generators wants label:dim pairs");
          gens.emplace_back(item.substr(0, colon), std::stol(item.substr(colon + 1)));
        }
        json rows = json::array();
        for (const auto& [label, deg] : yau_generators(gr_n, gens, yau_imax))
          rows.push_back({label, rat_str(deg)});
        rep["generators"] = rows;
      }
      emit(rep);
      return 0;
    }
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
