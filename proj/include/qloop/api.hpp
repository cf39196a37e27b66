#pragma once

// JSON-returning entry points shared by the command-line tool and the Python
// module. Inputs are validated here; errors surface as qloop exceptions.

#include <string>
#include <vector>

#include "json.hpp"

namespace qloop::api {

using nlohmann::json;

std::vector<int> parse_csv_ints(const std::string& csv);

json sl2_kr(int k, int s);
json sl2_factor(const json& monomial);
json sl2_ybe(const std::string& u, const std::string& v, const std::string& q);

json rep_roots(const std::string& type);
json rep_euler(const std::string& type, const std::vector<int>& beta, const std::vector<int>& nu);

json qchar_fundamental(const std::string& type, int node, int shift);
json qchar_standard(const std::string& type, const json& w);
json qchar_kr(const std::string& type, int node, int k, int shift);
json qchar_truncated_root(const std::string& type, const std::vector<int>& beta);
json qchar_truncated_monomial(const std::string& type, const json& monomial);

json cluster_enumerate(const std::string& type, int level, std::size_t cap);
json cluster_fpoly(const std::string& type, const std::vector<int>& beta, std::size_t cap);
json cluster_classify(const std::string& type, int level, std::size_t cap);
json cluster_factor(const std::string& type, const json& monomial, std::size_t cap);

// Reports carry a top-level "pass" flag.
json verify_l1(const std::string& type);
json verify_tsystem(const std::string& type, int kmax);
json verify_iota(const std::string& type, int level, std::size_t cap);

// Plain-text and LaTeX renderings of any result above.
std::string render_text(const json& j);
std::string render_latex(const json& j);

}  // namespace qloop::api
