#pragma once

// Canonical JSON, plain text and LaTeX renderings.
//
// JSON form of a polynomial: {"terms":[{"Y":[[i,s,e],...],"c":coeff},...]}
// with Y-triples sorted by (i,s) and terms sorted by their triple lists.

#include <string>

#include "json.hpp"
#include "qloop/ymono.hpp"

namespace qloop {

enum class OutputFormat { Text, Json, Latex };
OutputFormat parse_format(const std::string& s);

nlohmann::json integer_to_json(const Integer& x);
Integer integer_from_json(const nlohmann::json& j);

nlohmann::json monomial_to_json(const YMonomial& m);
YMonomial monomial_from_json(const nlohmann::json& j);
nlohmann::json to_json(const YPolynomial& p);
YPolynomial polynomial_from_json(const nlohmann::json& j);

std::string to_text(const YMonomial& m);
std::string to_text(const YPolynomial& p);
std::string to_latex(const YMonomial& m);
std::string to_latex(const YPolynomial& p);
std::string render(const YPolynomial& p, OutputFormat f);

// Polynomials in v_1..v_n (variable k means v_{k+1}).
using VPolynomial = Laurent<int>;
nlohmann::json to_json(const VPolynomial& p);
std::string to_text(const VPolynomial& p);

}  // namespace qloop
