#include "sft/modelfile.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace sft {
namespace {

using nlohmann::json;

Rat rat_from_json(const json& v, const std::string& where) {
  if (v.is_string()) return rat_parse(v.get<std::string>());
  if (v.is_number_integer()) return Rat(v.get<long>());
  throw std::invalid_argument("expected rational (string or integer) at " + where);
}

long long_from_json(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw std::invalid_argument("expected integer at " + where);
  return v.get<long>();
}

std::string int_str_from_json(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long>());
  throw std::invalid_argument("expected integer (string or number) at " + where);
}

Rat term_coeff(const json& t, const std::string& where) {
  Int num, den;
  if (num.set_str(int_str_from_json(t.at("coeff_num"), where + ".coeff_num"), 10) != 0)
    throw std::invalid_argument("bad coeff_num at " + where);
  if (t.contains("coeff_den")) {
    if (den.set_str(int_str_from_json(t.at("coeff_den"), where + ".coeff_den"), 10) != 0)
      throw std::invalid_argument("bad coeff_den at " + where);
  } else {
    den = 1;
  }
  if (den == 0) throw std::invalid_argument("zero coeff_den at " + where);
  Rat c(num);
  c /= Rat(den);
  return c;
}

SuperElement element_from_terms(const VariableTable& tab, const json& arr,
                                const std::string& where) {
  if (!arr.is_array()) throw std::invalid_argument("expected term list at " + where);
  SuperElement e(tab);
  for (size_t i = 0; i < arr.size(); ++i) {
    const json& t = arr[i];
    std::string here = where + "[" + std::to_string(i) + "]";
    std::vector<Factor> word;
    if (t.contains("factors")) {
      for (const json& f : t.at("factors")) {
        std::string vname = f.at("var").get<std::string>();
        auto v = tab.find(vname);
        if (!v) throw std::invalid_argument("unknown variable '" + vname + "' at " + here);
        long exp = f.contains("exp") ? long_from_json(f.at("exp"), here + ".exp") : 1;
        if (exp == 0) continue;
        if (tab.is_odd(*v) && (exp > 1 || exp < 0))
          throw std::invalid_argument("odd variable '" + vname + "' with exponent " +
                                      std::to_string(exp) + " at " + here);
        word.push_back({*v, exp});
      }
    }
    e.add_word(std::move(word), term_coeff(t, here));
  }
  return e;
}

json terms_to_json(const SuperElement& e) {
  json arr = json::array();
  for (const auto& [m, c] : e.terms()) {
    json t;
    t["coeff_num"] = c.get_num().get_str();
    t["coeff_den"] = c.get_den().get_str();
    json factors = json::array();
    for (const Factor& f : m.factors) {
      json fj;
      fj["var"] = e.table().name(f.v);
      fj["exp"] = f.e;
      factors.push_back(fj);
    }
    t["factors"] = factors;
    arr.push_back(t);
  }
  return arr;
}

json rat_to_json(const Rat& r) { return rat_str(r); }

// "t<digits>" -> degree index; everything else is not a t-variable.
std::optional<long> t_pattern_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 't') return std::nullopt;
  for (size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
  return std::stol(name.substr(1));
}

void register_scalar(VariableTable& tab, const std::string& name, int n) {
  if (tab.find(name)) return;
  VariableSpec s;
  s.name = name;
  if (auto i = t_pattern_index(name)) {
    s.kind = Kind::T;
    s.degree = Rat(*i - 2);
    s.parity = (*i % 2 != 0) ? Parity::Odd : Parity::Even;
  } else if (name == "tau") {
    s.kind = Kind::TAU;
    s.parity = Parity::Odd;
    s.degree = Rat(2 * n - 3);
  } else if (name == "hbar") {
    s.kind = Kind::HBAR;
    s.degree = Rat(2 * (n - 3));
  } else if (name == "z") {
    s.kind = Kind::Z;
    s.degree = Rat(-2 * (n + 1));
  } else {
    throw std::invalid_argument("unknown variable '" + name + "'");
  }
  tab.add(s);
}

void collect_term_vars(const json& arr, std::set<std::string>* names) {
  for (const json& t : arr)
    if (t.contains("factors"))
      for (const json& f : t.at("factors")) names->insert(f.at("var").get<std::string>());
}

Parity parity_from_json(const json& v, const std::string& where) {
  std::string s = v.get<std::string>();
  if (s == "even") return Parity::Even;
  if (s == "odd") return Parity::Odd;
  throw std::invalid_argument("parity must be \"even\" or \"odd\" at " + where);
}

struct OrbitRow {
  std::string label;
  long kappa = 1;
  Rat cz = 0;
  long winding = 0;
  int base_index = -1;
  std::optional<Parity> parity;
  std::string h1_class;
};

std::vector<OrbitRow> parse_orbits(const json& doc) {
  std::vector<OrbitRow> rows;
  if (!doc.contains("orbits")) return rows;
  std::set<std::string> seen;
  const json& arr = doc.at("orbits");
  if (!arr.is_array()) throw std::invalid_argument("orbits must be an array");
  for (size_t i = 0; i < arr.size(); ++i) {
    const json& o = arr[i];
    std::string where = "orbits[" + std::to_string(i) + "]";
    OrbitRow r;
    r.label = o.at("label").get<std::string>();
    if (r.label.empty()) throw std::invalid_argument("empty label at " + where);
    if (!seen.insert(r.label).second)
      throw std::invalid_argument("duplicate orbit label '" + r.label + "'");
    if (o.contains("kappa")) r.kappa = long_from_json(o.at("kappa"), where + ".kappa");
    if (r.kappa < 1) throw std::invalid_argument("kappa must be >= 1 at " + where);
    r.cz = rat_from_json(o.at("cz"), where + ".cz");
    if (o.contains("winding")) r.winding = long_from_json(o.at("winding"), where + ".winding");
    if (o.contains("base_index"))
      r.base_index = static_cast<int>(long_from_json(o.at("base_index"), where + ".base_index"));
    if (o.contains("parity")) r.parity = parity_from_json(o.at("parity"), where + ".parity");
    if (o.contains("h1_class")) r.h1_class = o.at("h1_class").get<std::string>();
    rows.push_back(std::move(r));
  }
  return rows;
}

// Parity default: read off the integer degree, or even when the degree is
// fractional (fractional gradings carry their parity separately).
Parity default_parity(const Rat& q_degree) {
  if (!rat_is_integer(q_degree)) return Parity::Even;
  return (rat_to_long(q_degree) % 2 != 0) ? Parity::Odd : Parity::Even;
}

void register_orbits(VariableTable& tab, const std::vector<OrbitRow>& rows, int n) {
  for (const OrbitRow& r : rows) {
    Rat qdeg = r.cz + Rat(n - 3);
    Rat pdeg = -r.cz + Rat(n - 3);
    Parity par = r.parity ? *r.parity : default_parity(qdeg);
    VariableSpec p, q;
    p.name = "p_" + r.label;
    p.kind = Kind::P;
    p.parity = par;
    p.degree = pdeg;
    p.kappa = r.kappa;
    p.winding = r.winding;
    p.base_index = r.base_index;
    q = p;
    q.name = "q_" + r.label;
    q.kind = Kind::Q;
    q.degree = qdeg;
    q.winding = -r.winding;
    tab.add_pair(p, q);
  }
}

Pairing pairing_from_json(const VariableTable& tab, const json& doc) {
  if (!doc.contains("pairing")) return Pairing::conjugate(tab);
  const json& mat = doc.at("pairing");
  if (!mat.is_array()) throw std::invalid_argument("pairing must be a matrix");
  std::vector<std::vector<Rat>> eta;
  for (size_t i = 0; i < mat.size(); ++i) {
    std::vector<Rat> row;
    for (size_t j = 0; j < mat[i].size(); ++j)
      row.push_back(rat_from_json(mat[i][j], "pairing[" + std::to_string(i) + "][" +
                                                 std::to_string(j) + "]"));
    if (row.size() != mat.size()) throw std::invalid_argument("pairing matrix must be square");
    eta.push_back(std::move(row));
  }
  for (VarId p : tab.of_kind(Kind::P))
    if (tab.spec(p).base_index < 0 || tab.spec(p).base_index >= static_cast<int>(eta.size()))
      throw std::invalid_argument("orbit '" + tab.name(p) +
                                  "' has no base_index inside the pairing matrix");
  return Pairing::intersection_form(tab, eta);
}

TruncationPolicy policy_from_json(const json& doc) {
  TruncationPolicy pol = TruncationPolicy::none();
  if (!doc.contains("truncation")) return pol;
  const json& t = doc.at("truncation");
  if (t.contains("weight")) pol.max_weight = long_from_json(t.at("weight"), "truncation.weight");
  if (t.contains("t_powers"))
    pol.max_t_power = long_from_json(t.at("t_powers"), "truncation.t_powers");
  if (t.contains("z_degree"))
    pol.max_z_degree = long_from_json(t.at("z_degree"), "truncation.z_degree");
  return pol;
}

json policy_to_json(const TruncationPolicy& pol) {
  json t = json::object();
  if (pol.max_weight >= 0) t["weight"] = pol.max_weight;
  if (pol.max_t_power >= 0) t["t_powers"] = pol.max_t_power;
  if (pol.max_z_degree >= 0) t["z_degree"] = pol.max_z_degree;
  return t;
}

Level level_from_json(const json& doc, bool has_hbar) {
  if (doc.contains("level")) {
    std::string s = doc.at("level").get<std::string>();
    if (s == "quantum") return Level::Quantum;
    if (s == "rational") return Level::Rational;
    if (s == "classical") return Level::Classical;
    throw std::invalid_argument("level must be quantum, rational, or classical");
  }
  return has_hbar ? Level::Quantum : Level::Rational;
}

// Orbit rows back out of a frozen table, one per conjugate pair.
json orbits_to_json(const VariableTable& tab, int n, bool with_h1 = false) {
  json arr = json::array();
  for (VarId q : tab.of_kind(Kind::Q)) {
    const VariableSpec& qs = tab.spec(q);
    if (qs.conjugate == kNoVar) continue;
    const VariableSpec& ps = tab.spec(qs.conjugate);
    json o;
    if (qs.name.rfind("q_", 0) != 0)
      throw std::logic_error("orbit variable '" + qs.name + "' not named q_<label>");
    o["label"] = qs.name.substr(2);
    o["kappa"] = qs.kappa;
    o["cz"] = rat_to_json(qs.degree - Rat(n - 3));
    o["winding"] = ps.winding;
    if (qs.base_index >= 0) o["base_index"] = qs.base_index;
    o["parity"] = qs.parity == Parity::Odd ? "odd" : "even";
    if (with_h1) o["h1_class"] = "";
    arr.push_back(o);
  }
  return arr;
}

// The pairing key is omitted when the entries are exactly the conjugate
// pairing; otherwise the intersection form is rebuilt from base indices.
void pairing_to_json(json* doc, const VariableTable& tab, const Pairing& pairing) {
  bool conj = true;
  for (const auto& e : pairing.entries)
    if (tab.spec(e.p).conjugate != e.q || e.weight != Rat(tab.spec(e.p).kappa)) {
      conj = false;
      break;
    }
  if (conj && pairing.entries.size() == tab.of_kind(Kind::P).size()) return;
  int dim = 0;
  for (const auto& e : pairing.entries)
    dim = std::max({dim, tab.spec(e.p).base_index + 1, tab.spec(e.q).base_index + 1});
  std::vector<std::vector<Rat>> eta(dim, std::vector<Rat>(dim, Rat(0)));
  for (const auto& e : pairing.entries) {
    int i = tab.spec(e.p).base_index;
    int j = tab.spec(e.q).base_index;
    if (i < 0 || j < 0)
      throw std::logic_error("pairing entry without base_index cannot be serialized");
    Rat v = e.weight / Rat(tab.spec(e.p).kappa);
    if (eta[i][j] != 0 && eta[i][j] != v)
      throw std::logic_error("pairing entries disagree across orbits");
    eta[i][j] = v;
  }
  json mat = json::array();
  for (const auto& row : eta) {
    json r = json::array();
    for (const Rat& v : row) r.push_back(rat_to_json(v));
    mat.push_back(r);
  }
  (*doc)["pairing"] = mat;
}

LoadedModel load_floer(const json& doc, const std::string& name) {
  FloerComplexSpec spec;
  spec.name = name;
  spec.dimension_n = static_cast<int>(long_from_json(doc.at("dimension_n"), "dimension_n"));
  if (doc.contains("c1")) spec.c1 = rat_from_json(doc.at("c1"), "c1");
  for (const OrbitRow& r : parse_orbits(doc))
    spec.orbits.push_back({r.label, r.kappa, r.cz, r.h1_class});
  for (const json& c : doc.at("floer_counts")) {
    FloerCount fc;
    fc.from = c.at("from").get<std::string>();
    fc.to = c.at("to").get<std::string>();
    fc.d = long_from_json(c.at("d"), "floer_counts.d");
    fc.n = long_from_json(c.at("n"), "floer_counts.n");
    spec.counts.push_back(std::move(fc));
  }
  LoadedModel out;
  out.kind = "floer";
  out.name = name;
  out.floer = floer_complex(spec);
  out.policy = policy_from_json(doc);
  return out;
}

void check_homogeneous(const SuperElement& e, Parity expected_parity, const char* what) {
  if (e.is_zero()) return;
  auto par = e.homogeneous_parity();
  if (!par || *par != expected_parity)
    throw std::invalid_argument(std::string(what) + " must be homogeneous of parity " +
                                (expected_parity == Parity::Odd ? "odd" : "even"));
  if (!e.homogeneous_degree())
    throw std::invalid_argument(std::string(what) + " mixes total degrees");
}

}  // namespace

LoadedModel load_model_file(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("model file is not valid JSON: ") + ex.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("model"))
      throw std::invalid_argument("model file needs a top-level \"model\" key");
    std::string model = doc.at("model").get<std::string>();
    int payloads = doc.contains("hamiltonian") + doc.contains("differential") +
                   doc.contains("base_potential") + doc.contains("floer_counts");
    if (model != "custom") {
      if (payloads != 0)
        throw std::invalid_argument("builtin model reference cannot carry inline data");
      TruncationPolicy pol = policy_from_json(doc);
      return load_builtin(model, pol.max_weight >= 0 ? pol.max_weight : 6);
    }
    if (payloads != 1)
      throw std::invalid_argument(
          "custom model needs exactly one of hamiltonian, differential, base_potential, "
          "floer_counts");
    std::string name = doc.contains("name") ? doc.at("name").get<std::string>() : "custom";
    if (doc.contains("floer_counts")) return load_floer(doc, name);

    int n = static_cast<int>(long_from_json(doc.at("dimension_n"), "dimension_n"));
    auto tab = std::make_shared<VariableTable>();
    auto rows = parse_orbits(doc);
    register_orbits(*tab, rows, n);

    std::set<std::string> scalar_names;
    if (doc.contains("hamiltonian")) collect_term_vars(doc.at("hamiltonian"), &scalar_names);
    if (doc.contains("base_potential"))
      collect_term_vars(doc.at("base_potential"), &scalar_names);
    if (doc.contains("differential"))
      for (const auto& [gen, terms] : doc.at("differential").items()) {
        scalar_names.insert(gen);
        collect_term_vars(terms, &scalar_names);
      }
    if (doc.contains("evolution")) scalar_names.insert(doc.at("evolution").get<std::string>());
    for (const std::string& s : scalar_names)
      if (!tab->find(s)) register_scalar(*tab, s, n);
    tab->freeze();

    LoadedModel out;
    out.name = name;
    out.policy = policy_from_json(doc);

    if (doc.contains("hamiltonian")) {
      out.kind = "hamiltonian";
      Model m;
      m.tab = tab;
      m.name = name;
      if (auto h = tab->find("hbar")) m.hbar = *h;
      if (auto t = tab->find("tau")) m.tau = *t;
      m.weight_cap = out.policy.max_weight >= 0 ? out.policy.max_weight : 0;
      m.ham.body = element_from_terms(*tab, doc.at("hamiltonian"), "hamiltonian");
      m.ham.dimension_n = n;
      m.ham.level = level_from_json(doc, m.hbar != kNoVar);
      if (m.ham.level == Level::Quantum && m.hbar == kNoVar)
        throw std::invalid_argument("quantum model without an hbar variable");
      m.ham.pairing = pairing_from_json(*tab, doc);
      check_homogeneous(m.ham.body, Parity::Odd, "hamiltonian");
      out.hamiltonian = std::move(m);
      return out;
    }

    if (doc.contains("base_potential")) {
      out.kind = "potential";
      PotentialModel pm;
      pm.tab = tab;
      pm.dimension_n = n;
      pm.body = element_from_terms(*tab, doc.at("base_potential"), "base_potential");
      if (auto z = tab->find("z")) pm.zvar = *z;
      if (doc.contains("evolution"))
        pm.evolution = tab->require(doc.at("evolution").get<std::string>());
      pm.pairing = pairing_from_json(*tab, doc);
      check_homogeneous(pm.body, Parity::Even, "base_potential");
      if (!pm.body.is_zero() && *pm.body.homogeneous_degree() != Rat(2 * (n - 3)))
        throw std::invalid_argument("base_potential degree is not 2(n-3)");
      out.potential = std::move(pm);
      return out;
    }

    out.kind = "differential";
    DGA dga;
    dga.tab = tab;
    std::vector<VarId> gens;
    for (const auto& [gen, terms] : doc.at("differential").items()) {
      VarId g = tab->require(gen);
      Kind k = tab->spec(g).kind;
      if (k != Kind::Q && k != Kind::TAU)
        throw std::invalid_argument("differential generator '" + gen +
                                    "' is not a q or tau variable");
      gens.push_back(g);
      SuperElement img = element_from_terms(*tab, terms, "differential." + gen);
      if (!img.is_zero()) {
        auto par = img.homogeneous_parity();
        if (!par || *par == tab->spec(g).parity)
          throw std::invalid_argument("differential of '" + gen +
                                      "' does not flip parity");
        auto deg = img.homogeneous_degree();
        if (!deg || *deg != tab->spec(g).degree - 1)
          throw std::invalid_argument("differential of '" + gen +
                                      "' does not lower degree by 1");
        dga.diff[g] = std::move(img);
      }
    }
    std::sort(gens.begin(), gens.end(),
              [&](VarId a, VarId b) { return tab->rank(a) < tab->rank(b); });
    dga.generators = std::move(gens);
    out.dga = std::move(dga);
    if (doc.contains("cycles"))
      for (const auto& [label, terms] : doc.at("cycles").items())
        out.cycles[label] = element_from_terms(*tab, terms, "cycles." + label);
    return out;
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("malformed model file: ") + ex.what());
  }
}

LoadedModel load_builtin(const std::string& name, long weight) {
  if (weight < 1) throw std::invalid_argument("weight must be >= 1");
  LoadedModel out;
  out.name = name;
  out.policy = TruncationPolicy::weight(weight);
  auto colon_arg = [&](const char* prefix) -> std::optional<long> {
    std::string p(prefix);
    if (name.rfind(p, 0) != 0) return std::nullopt;
    try {
      size_t used = 0;
      long v = std::stol(name.substr(p.size()), &used);
      if (used != name.size() - p.size()) return std::nullopt;
      return v;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  if (name == "circle") {
    out.kind = "hamiltonian";
    out.hamiltonian = circle_model(weight);
    return out;
  }
  if (name == "sphere3") {
    out.kind = "hamiltonian";
    out.hamiltonian = sphere3_model(weight);
    return out;
  }
  if (auto l = colon_arg("lens:")) {
    if (*l < 1) throw std::invalid_argument("lens order must be >= 1");
    out.kind = "hamiltonian";
    out.hamiltonian = lens_model(*l, weight);
    return out;
  }
  if (auto n = colon_arg("ellipsoid:")) {
    if (*n < 1) throw std::invalid_argument("ellipsoid dimension must be >= 1");
    out.kind = "floer";
    out.floer = floer_complex(ellipsoid_spec(static_cast<int>(*n), weight));
    return out;
  }
  if (name == "cp1") {
    out.kind = "potential";
    out.potential = cp1_potential(weight);
    return out;
  }
  if (auto l = colon_arg("fibered:")) {
    if (*l < 1) throw std::invalid_argument("fiber order must be >= 1");
    out.kind = "hamiltonian";
    out.hamiltonian = prequantization_h1(cp1_potential(weight), *l, 2, weight);
    return out;
  }
  throw std::invalid_argument(
      "unknown builtin model '" + name +
      "' (try circle, sphere3, lens:<l>, ellipsoid:<n>, cp1, fibered:<l>)");
}

std::string model_file_json(const Model& m, const TruncationPolicy& policy) {
  json doc;
  doc["model"] = "custom";
  doc["name"] = m.name;
  doc["dimension_n"] = m.ham.dimension_n;
  doc["level"] = level_name(m.ham.level);
  doc["orbits"] = orbits_to_json(*m.tab, m.ham.dimension_n);
  pairing_to_json(&doc, *m.tab, m.ham.pairing);
  doc["hamiltonian"] = terms_to_json(m.ham.body);
  json t = policy_to_json(policy);
  if (!t.empty()) doc["truncation"] = t;
  return doc.dump(2) + "\n";
}

std::string dga_file_json(const DGA& dga, int dimension_n, const TruncationPolicy& policy) {
  json doc;
  doc["model"] = "custom";
  doc["dimension_n"] = dimension_n;
  doc["orbits"] = orbits_to_json(*dga.tab, dimension_n);
  json d = json::object();
  for (VarId g : dga.generators) {
    auto it = dga.diff.find(g);
    d[dga.tab->name(g)] =
        it == dga.diff.end() ? json::array() : terms_to_json(it->second);
  }
  doc["differential"] = d;
  json t = policy_to_json(policy);
  if (!t.empty()) doc["truncation"] = t;
  return doc.dump(2) + "\n";
}

std::string potential_file_json(const PotentialModel& pm, const TruncationPolicy& policy) {
  json doc;
  doc["model"] = "custom";
  doc["dimension_n"] = pm.dimension_n;
  json orbs = orbits_to_json(*pm.tab, pm.dimension_n);
  if (!orbs.empty()) {
    doc["orbits"] = orbs;
    pairing_to_json(&doc, *pm.tab, pm.pairing);
  }
  doc["base_potential"] = terms_to_json(pm.body);
  if (pm.evolution != kNoVar) doc["evolution"] = pm.tab->name(pm.evolution);
  json t = policy_to_json(policy);
  if (!t.empty()) doc["truncation"] = t;
  return doc.dump(2) + "\n";
}

std::string floer_file_json(const FloerComplexSpec& spec) {
  json doc;
  doc["model"] = "custom";
  doc["name"] = spec.name;
  doc["dimension_n"] = spec.dimension_n;
  doc["c1"] = rat_to_json(spec.c1);
  json orbs = json::array();
  for (const FloerOrbit& o : spec.orbits) {
    json oj;
    oj["label"] = o.label;
    oj["kappa"] = o.kappa;
    oj["cz"] = rat_to_json(o.cz);
    if (!o.h1_class.empty()) oj["h1_class"] = o.h1_class;
    orbs.push_back(oj);
  }
  doc["orbits"] = orbs;
  json counts = json::array();
  for (const FloerCount& c : spec.counts) {
    json cj;
    cj["from"] = c.from;
    cj["to"] = c.to;
    cj["d"] = c.d;
    cj["n"] = c.n;
    counts.push_back(cj);
  }
  doc["floer_counts"] = counts;
  return doc.dump(2) + "\n";
}

}  // namespace sft
