#include "qloop/format.hpp"

#include <algorithm>
#include <sstream>

#include "qloop/error.hpp"

namespace qloop {

OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::Json;
  if (s == "latex") return OutputFormat::Latex;
  throw InvalidInput("unknown output format '" + s + "' (expected json, text or latex)");
}

nlohmann::json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw InvalidInput("expected an integer coefficient");
}

nlohmann::json monomial_to_json(const YMonomial& m) {
  auto arr = nlohmann::json::array();
  for (const auto& [k, e] : m.entries()) arr.push_back({k.node, k.shift, e});
  return arr;
}

YMonomial monomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidInput("a monomial is a JSON array of [i,s,e] triples");
  std::vector<YMonomial::Entry> es;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer() ||
        !t[2].is_number_integer())
      throw InvalidInput("a monomial is a JSON array of [i,s,e] triples");
    es.push_back({{t[0].get<int>(), t[1].get<int>()}, t[2].get<int>()});
  }
  return YMonomial::from_entries(std::move(es));
}

nlohmann::json to_json(const YPolynomial& p) {
  std::vector<std::pair<YMonomial, Integer>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  auto arr = nlohmann::json::array();
  for (const auto& [m, c] : terms) arr.push_back({{"Y", monomial_to_json(m)}, {"c", integer_to_json(c)}});
  return {{"terms", arr}};
}

YPolynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw InvalidInput("a polynomial is {\"terms\":[...]}");
  YPolynomial p;
  for (const auto& t : j["terms"]) p.add_term(monomial_from_json(t.at("Y")), integer_from_json(t.at("c")));
  return p;
}

namespace {

template <class M, class VarText>
std::string poly_text(const std::vector<std::pair<M, Integer>>& terms, VarText mono_text) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Integer a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    const std::string mt = mono_text(m);
    if (mt == "1")
      os << a.get_str();
    else if (a == 1)
      os << mt;
    else
      os << a.get_str() << " " << mt;
  }
  return os.str();
}

template <class P>
std::vector<std::pair<typename P::Mono, Integer>> sorted_terms(const P& p) {
  std::vector<std::pair<typename P::Mono, Integer>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return terms;
}

}  // namespace

std::string to_text(const YMonomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, e] : m.entries()) {
    if (!first) os << " ";
    first = false;
    os << "Y[" << k.node << "," << k.shift << "]";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::string to_text(const YPolynomial& p) {
  return poly_text(sorted_terms(p), [](const YMonomial& m) { return to_text(m); });
}

std::string to_latex(const YMonomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, e] : m.entries()) {
    if (!first) os << " ";
    first = false;
    os << "Y_{" << k.node << ",q^{" << k.shift << "}}";
    if (e != 1) os << "^{" << e << "}";
  }
  return os.str();
}

std::string to_latex(const YPolynomial& p) {
  return poly_text(sorted_terms(p), [](const YMonomial& m) { return to_latex(m); });
}

std::string render(const YPolynomial& p, OutputFormat f) {
  switch (f) {
    case OutputFormat::Json:
      return to_json(p).dump();
    case OutputFormat::Latex:
      return to_latex(p);
    case OutputFormat::Text:
      break;
  }
  return to_text(p);
}

nlohmann::json to_json(const VPolynomial& p) {
  auto arr = nlohmann::json::array();
  for (const auto& [m, c] : sorted_terms(p)) {
    auto mono = nlohmann::json::array();
    for (const auto& [k, e] : m.entries()) mono.push_back({k + 1, e});
    arr.push_back({{"v", mono}, {"c", integer_to_json(c)}});
  }
  return {{"terms", arr}};
}

std::string to_text(const VPolynomial& p) {
  return poly_text(sorted_terms(p), [](const Monomial<int>& m) {
    if (m.is_one()) return std::string("1");
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, e] : m.entries()) {
      if (!first) os << " ";
      first = false;
      os << "v" << k + 1;
      if (e != 1) os << "^" << e;
    }
    return os.str();
  });
}

}  // namespace qloop
