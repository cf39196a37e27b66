#include "qloop/api.hpp"

#include <sstream>

#include "qloop/engine.hpp"
#include "qloop/error.hpp"
#include "qloop/format.hpp"
#include "qloop/preproj.hpp"
#include "qloop/sl2.hpp"

namespace qloop::api {

namespace {

Rational parse_rational(const std::string& s) {
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) throw InvalidInput("cannot parse rational number '" + s + "'");
  r.canonicalize();
  return r;
}

json root_json(const std::vector<int>& r) { return r; }

json report_json(const Report& rep) {
  json entries = json::array();
  for (const auto& e : rep.entries) {
    json j{{"case", e.name}, {"pass", e.pass}, {"lhs", to_json(e.lhs)}, {"rhs", to_json(e.rhs)}};
    if (!e.detail.empty()) j["detail"] = e.detail;
    entries.push_back(std::move(j));
  }
  return {{"pass", rep.pass()}, {"entries", entries}};
}

void check_length(const CartanData& c, const std::vector<int>& v, const char* what) {
  if (static_cast<int>(v.size()) != c.rank())
    throw InvalidInput(std::string(what) + " needs " + std::to_string(c.rank()) + " entries for " + c.label());
}

}  // namespace

std::vector<int> parse_csv_ints(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int x = 0;
    try {
      x = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw InvalidInput("cannot parse integer list '" + csv + "'");
    }
    if (pos != item.size()) throw InvalidInput("cannot parse integer list '" + csv + "'");
    out.push_back(x);
  }
  if (out.empty()) throw InvalidInput("empty integer list");
  return out;
}

json sl2_kr(int k, int s) {
  const YPolynomial p = kr_qchar_sl2(k, s);
  return {{"k", k}, {"s", s}, {"qchar", to_json(p)}, {"dimension", integer_to_json(p.coefficient_sum())}};
}

json sl2_factor(const json& monomial) {
  const YMonomial m = monomial_from_json(monomial);
  json segs = json::array();
  for (const Segment& s : canonical_segments(m)) segs.push_back({{"origin", s.origin}, {"length", s.length}});
  const YPolynomial p = simple_qchar_sl2(m);
  return {{"segments", segs}, {"qchar", to_json(p)}, {"dimension", integer_to_json(p.coefficient_sum())}};
}

json sl2_ybe(const std::string& u, const std::string& v, const std::string& q) {
  const Rational ru = parse_rational(u), rv = parse_rational(v), rq = parse_rational(q);
  const bool ok = verify_yang_baxter(ru, rv, rq);
  return {{"u", ru.get_str()}, {"v", rv.get_str()}, {"q", rq.get_str()}, {"pass", ok}};
}

json rep_roots(const std::string& type) {
  const CartanData c = CartanData::from_label(type);
  json roots = json::array();
  for (const auto& r : positive_roots(c)) roots.push_back(root_json(r));
  return {{"type", c.label()}, {"count", roots.size()}, {"roots", roots}};
}

json rep_euler(const std::string& type, const std::vector<int>& beta, const std::vector<int>& nu) {
  const CartanData c = CartanData::from_label(type);
  check_length(c, beta, "--beta");
  check_length(c, nu, "--nu");
  const Quiver q = Quiver::sink_source(c);
  if (!is_positive_root(q, beta)) throw InvalidInput("--beta is not a positive root");
  const QuiverRep m = indecomposable_rep(q, beta);
  for (std::size_t i = 0; i < nu.size(); ++i)
    if (nu[i] < 0 || nu[i] > beta[i]) throw InvalidInput("--nu must satisfy 0 <= nu <= beta");
  const GrassmannianCensus census = grassmannian_census(m);
  json counts = json::array(), poly = json::array();
  Integer chi = 0;
  for (std::size_t k = 0; k < census.nus.size(); ++k)
    if (census.nus[k] == nu) {
      for (std::size_t p = 0; p < census.primes.size(); ++p)
        counts.push_back({{"p", census.primes[p]}, {"count", integer_to_json(census.counts[k][p])}});
      for (const auto& x : census.polynomials[k]) poly.push_back(integer_to_json(x));
      chi = census.euler[k];
    }
  if (counts.empty())
    for (auto p : census.primes) counts.push_back({{"p", p}, {"count", 0}});
  return {{"type", c.label()}, {"beta", beta}, {"nu", nu}, {"euler", integer_to_json(chi)},
          {"point_counts", counts}, {"count_polynomial", poly}};
}

json qchar_fundamental(const std::string& type, int node, int shift) {
  const CartanData c = CartanData::from_label(type);
  const YPolynomial p = fundamental_qchar(c, node, shift);
  return {{"type", c.label()}, {"node", node}, {"shift", shift}, {"qchar", to_json(p)},
          {"terms", p.size()}, {"dimension", integer_to_json(p.coefficient_sum())}};
}

json qchar_standard(const std::string& type, const json& w) {
  const CartanData c = CartanData::from_label(type);
  if (!w.is_array()) throw InvalidInput("--w is a JSON array of [i,r,mult] triples");
  GradedW gw;
  for (const auto& t : w) {
    if (!t.is_array() || t.size() != 3) throw InvalidInput("--w is a JSON array of [i,r,mult] triples");
    gw[{t[0].get<int>(), t[1].get<int>()}] += t[2].get<int>();
  }
  const YPolynomial p = standard_qchar(c, gw);
  return {{"type", c.label()}, {"qchar", to_json(p)}, {"terms", p.size()},
          {"dimension", integer_to_json(p.coefficient_sum())}};
}

json qchar_kr(const std::string& type, int node, int k, int shift) {
  const CartanData c = CartanData::from_label(type);
  const YPolynomial p = kr_qchar(c, node, k, shift);
  return {{"type", c.label()}, {"node", node}, {"k", k}, {"shift", shift}, {"qchar", to_json(p)},
          {"terms", p.size()}, {"dimension", integer_to_json(p.coefficient_sum())}};
}

json qchar_truncated_root(const std::string& type, const std::vector<int>& beta) {
  const CartanData c = CartanData::from_label(type);
  check_length(c, beta, "--beta");
  const YPolynomial p = simple_trunc_qchar_c1(c, beta);
  return {{"type", c.label()}, {"beta", beta}, {"alpha", reflect_i1(c, beta)}, {"qchar", to_json(p)},
          {"terms", p.size()}};
}

json qchar_truncated_monomial(const std::string& type, const json& monomial) {
  const CartanData c = CartanData::from_label(type);
  const Level1Data data(c);
  const YMonomial m = monomial_from_json(monomial);
  const YPolynomial p = level1_trunc_qchar(data, m);
  const YPolynomial g = level1_trunc_qchar_generic(data, m);
  if (!(p == g)) throw ConsistencyError("truncated q-character differs between factors and generic representation");
  return {{"type", c.label()}, {"monomial", monomial_to_json(m)}, {"qchar", to_json(p)}, {"terms", p.size()}};
}

json cluster_enumerate(const std::string& type, int level, std::size_t cap) {
  const CartanData c = CartanData::from_label(type);
  const Seed seed = gamma_seed(c, level);
  const ExchangeGraph g = enumerate_exchange_graph(seed, cap);
  json vars = json::array();
  for (std::size_t id = 0; id < g.variables.size(); ++id) {
    const FGData fg = f_polynomial_and_gvector(g, static_cast<int>(id));
    vars.push_back({{"id", id}, {"denominator", denominator_vector(seed, g.variables[id])}, {"F", to_json(fg.f)},
                    {"g", fg.g}});
  }
  json labels = json::array();
  for (int v = 0; v < seed.size(); ++v)
    labels.push_back({{"vertex", v}, {"node", seed.labels[v].node}, {"shift", seed.labels[v].shift},
                      {"frozen", v >= seed.mutable_count}});
  return {{"type", c.label()}, {"level", level}, {"vertices", labels}, {"cluster_count", g.clusters.size()},
          {"variable_count", g.variables.size()}, {"frozen_count", seed.frozen_count()},
          {"clusters", g.clusters}, {"variables", vars}};
}

json cluster_fpoly(const std::string& type, const std::vector<int>& beta, std::size_t cap) {
  const CartanData c = CartanData::from_label(type);
  check_length(c, beta, "--beta");
  const Level1Data data(c, cap);
  const int id = variable_by_denominator(data.graph, beta);
  const FGData fg = f_polynomial_and_gvector(data.graph, id);
  return {{"type", c.label()}, {"beta", beta}, {"F", to_json(fg.f)}, {"g", fg.g},
          {"monomial", monomial_to_json(data.monomials[id])}};
}

json cluster_classify(const std::string& type, int level, std::size_t cap) {
  const CartanData c = CartanData::from_label(type);
  const Classification cl = classify_finite_type(c, level, cap);
  return {{"type", c.label()}, {"level", level}, {"cluster_type", cl.label}, {"rank", cl.rank},
          {"variables", cl.variables}, {"clusters", cl.clusters}};
}

json cluster_factor(const std::string& type, const json& monomial, std::size_t cap) {
  const CartanData c = CartanData::from_label(type);
  const Level1Data data(c, cap);
  const YMonomial m = monomial_from_json(monomial);
  json factors = json::array();
  for (const Factor& f : factor_simple_c1(data, m)) {
    if (f.kind == Factor::Kind::Frozen)
      factors.push_back({{"kind", "frozen"}, {"node", f.node}, {"monomial", monomial_to_json(f.monomial)}});
    else
      factors.push_back({{"kind", "variable"}, {"root", f.root}, {"monomial", monomial_to_json(f.monomial)}});
  }
  return {{"type", c.label()}, {"monomial", monomial_to_json(m)}, {"factors", factors}};
}

json verify_l1(const std::string& type) {
  const CartanData c = CartanData::from_label(type);
  json j = report_json(qloop::verify_l1(c));
  j["type"] = c.label();
  return j;
}

json verify_tsystem(const std::string& type, int kmax) {
  const CartanData c = CartanData::from_label(type);
  if (kmax < 1) throw InvalidInput("--kmax must be >= 1");
  KRCalculator kr(c);
  Report rep;
  for (int i = 1; i <= c.rank(); ++i)
    for (int k = 1; k <= kmax; ++k)
      for (int s : {c.xi(i), c.xi(i) + 1}) {
        const TSystemCheck t = qloop::verify_tsystem(kr, i, k, s);
        ReportEntry e{"i=" + std::to_string(i) + ",k=" + std::to_string(k) + ",s=" + std::to_string(s), t.pass(),
                      t.lhs, t.rhs, ""};
        if (!t.positive) e.detail += "non-positive coefficients; ";
        if (!t.minuscule) e.detail += "more than one dominant monomial; ";
        rep.entries.push_back(std::move(e));
      }
  json j = report_json(rep);
  j["type"] = c.label();
  return j;
}

json verify_iota(const std::string& type, int level, std::size_t cap) {
  const CartanData c = CartanData::from_label(type);
  json j = report_json(qloop::verify_iota(c, level, cap));
  j["type"] = c.label();
  j["level"] = level;
  return j;
}

namespace {

bool is_polynomial_json(const json& j) {
  return j.is_object() && j.size() == 1 && j.contains("terms") && j["terms"].is_array();
}

std::string poly_text(const json& j, bool latex) {
  const auto& terms = j["terms"];
  if (!terms.empty() && terms[0].contains("v")) {
    ClusterLaurent f;
    for (const auto& t : terms) {
      std::vector<ClusterLaurent::Mono::Entry> es;
      for (const auto& ve : t["v"]) es.emplace_back(ve[0].get<int>() - 1, ve[1].get<int>());
      f.add_term(ClusterLaurent::Mono::from_entries(std::move(es)), integer_from_json(t["c"]));
    }
    return to_text(f);
  }
  const YPolynomial p = polynomial_from_json(j);
  return latex ? to_latex(p) : to_text(p);
}

void render(const json& j, const std::string& indent, std::ostringstream& os, bool latex) {
  std::size_t index = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++index) {
    const json& v = it.value();
    const std::string key = j.is_object() ? it.key() : "[" + std::to_string(index) + "]";
    if (is_polynomial_json(v)) {
      os << indent << key << ": " << poly_text(v, latex) << "\n";
    } else if (v.is_object() || (v.is_array() && !v.empty() && v[0].is_object())) {
      os << indent << key << ":\n";
      render(v, indent + "  ", os, latex);
    } else if (v.is_string()) {
      os << indent << key << ": " << v.get<std::string>() << "\n";
    } else {
      os << indent << key << ": " << v.dump() << "\n";
    }
  }
}

}  // namespace

std::string render_text(const json& j) {
  std::ostringstream os;
  render(j, "", os, false);
  return os.str();
}

std::string render_latex(const json& j) {
  std::ostringstream os;
  render(j, "", os, true);
  return os.str();
}

}  // namespace qloop::api
