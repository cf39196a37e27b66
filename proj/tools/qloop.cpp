// Command-line front end: qloop <group> <command> [flags].
// Exit status: 0 success, 1 verification failure, 2 invalid input.

#include <iostream>

#include "CLI11.hpp"
#include "qloop/api.hpp"
#include "qloop/error.hpp"
#include "qloop/format.hpp"

using nlohmann::json;
namespace api = qloop::api;

namespace {

json parse_json_arg(const std::string& s, const char* flag) {
  try {
    return json::parse(s);
  } catch (const json::parse_error&) {
    throw qloop::InvalidInput(std::string(flag) + " is not valid JSON");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum loop algebra q-characters, quiver Grassmannians and cluster algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::size_t cap = 100000;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text", "latex"}));
  app.add_option("--seed-cap", cap, "Maximal number of clusters explored during enumeration");

  std::function<json()> action;
  auto bind = [&action](CLI::App* cmd, std::function<json()> f) { cmd->callback([&action, f] { action = f; }); };

  std::string type;
  int node = 0, shift = 0, k = 0, s = 0, level = 1, kmax = 3;
  std::string monomial, w, beta, nu, u, v, q;

  auto* sl2 = app.add_subcommand("sl2", "Closed forms for U_q(L sl2)")->require_subcommand(1);
  auto* sl2_kr = sl2->add_subcommand("kr", "KR q-character W_{k,q^s}");
  sl2_kr->add_option("--k", k)->required();
  sl2_kr->add_option("--s", s)->required();
  bind(sl2_kr, [&] { return api::sl2_kr(k, s); });
  auto* sl2_factor = sl2->add_subcommand("factor", "q-segment factorization of a dominant monomial");
  sl2_factor->add_option("--monomial", monomial, "JSON [[1,s,e],...]")->required();
  bind(sl2_factor, [&] { return api::sl2_factor(parse_json_arg(monomial, "--monomial")); });
  auto* sl2_ybe = sl2->add_subcommand("ybe", "Check the Yang-Baxter equation at rational (u, v, q)");
  sl2_ybe->add_option("--u", u)->required();
  sl2_ybe->add_option("--v", v)->required();
  sl2_ybe->add_option("--q", q)->required();
  bind(sl2_ybe, [&] { return api::sl2_ybe(u, v, q); });

  auto* rep = app.add_subcommand("rep", "Quiver representations")->require_subcommand(1);
  auto* rep_roots = rep->add_subcommand("roots", "Positive roots");
  rep_roots->add_option("--type", type)->required();
  bind(rep_roots, [&] { return api::rep_roots(type); });
  auto* rep_euler = rep->add_subcommand("euler", "Euler characteristic of Gr_nu(M[beta])");
  rep_euler->add_option("--type", type)->required();
  rep_euler->add_option("--beta", beta, "CSV")->required();
  rep_euler->add_option("--nu", nu, "CSV")->required();
  bind(rep_euler, [&] { return api::rep_euler(type, api::parse_csv_ints(beta), api::parse_csv_ints(nu)); });

  auto* qc = app.add_subcommand("qchar", "q-characters")->require_subcommand(1);
  auto* qc_fund = qc->add_subcommand("fundamental", "Fundamental module L(Y_{i,q^r})");
  qc_fund->add_option("--type", type)->required();
  qc_fund->add_option("--node", node)->required();
  qc_fund->add_option("--shift", shift)->required();
  bind(qc_fund, [&] { return api::qchar_fundamental(type, node, shift); });
  auto* qc_std = qc->add_subcommand("standard", "Standard module for a graded W");
  qc_std->add_option("--type", type)->required();
  qc_std->add_option("--w", w, "JSON [[i,r,mult],...]")->required();
  bind(qc_std, [&] { return api::qchar_standard(type, parse_json_arg(w, "--w")); });
  auto* qc_kr = qc->add_subcommand("kr", "Kirillov-Reshetikhin module via the T-system");
  qc_kr->add_option("--type", type)->required();
  qc_kr->add_option("--node", node)->required();
  qc_kr->add_option("--k", k)->required();
  qc_kr->add_option("--shift", shift)->required();
  bind(qc_kr, [&] { return api::qchar_kr(type, node, k, shift); });
  auto* qc_trunc = qc->add_subcommand("truncated", "Truncated q-character of a level-1 simple module");
  qc_trunc->add_option("--type", type)->required();
  auto* beta_opt = qc_trunc->add_option("--beta", beta, "positive root, CSV");
  auto* mono_opt = qc_trunc->add_option("--monomial", monomial, "dominant monomial, JSON");
  beta_opt->excludes(mono_opt);
  bind(qc_trunc, [&] {
    if (beta.empty() && monomial.empty()) throw qloop::InvalidInput("one of --beta or --monomial is required");
    if (!beta.empty()) return api::qchar_truncated_root(type, api::parse_csv_ints(beta));
    return api::qchar_truncated_monomial(type, parse_json_arg(monomial, "--monomial"));
  });

  auto* cl = app.add_subcommand("cluster", "Cluster algebras of level ell")->require_subcommand(1);
  auto* cl_enum = cl->add_subcommand("enumerate", "Exchange graph");
  cl_enum->add_option("--type", type)->required();
  cl_enum->add_option("--level", level)->required();
  cl_enum->add_option("--cap", cap, "same as --seed-cap");
  bind(cl_enum, [&] { return api::cluster_enumerate(type, level, cap); });
  auto* cl_fpoly = cl->add_subcommand("fpoly", "F-polynomial and g-vector of z[beta]");
  cl_fpoly->add_option("--type", type)->required();
  cl_fpoly->add_option("--level", level)->check(CLI::IsMember({1}));
  cl_fpoly->add_option("--beta", beta, "almost positive root, CSV")->required();
  bind(cl_fpoly, [&] { return api::cluster_fpoly(type, api::parse_csv_ints(beta), cap); });
  auto* cl_class = cl->add_subcommand("classify", "Finite cluster type by fingerprint");
  cl_class->add_option("--type", type)->required();
  cl_class->add_option("--level", level)->required();
  bind(cl_class, [&] { return api::cluster_classify(type, level, cap); });
  auto* cl_factor = cl->add_subcommand("factor", "Prime factorization of a level-1 simple module");
  cl_factor->add_option("--type", type)->required();
  cl_factor->add_option("--monomial", monomial, "JSON [[i,s,e],...]")->required();
  bind(cl_factor, [&] { return api::cluster_factor(type, parse_json_arg(monomial, "--monomial"), cap); });

  auto* ver = app.add_subcommand("verify", "Cross-checks between the pipelines")->require_subcommand(1);
  auto* ver_l1 = ver->add_subcommand("l1", "F-polynomials against quiver Grassmannians at level 1");
  ver_l1->add_option("--type", type)->required();
  bind(ver_l1, [&] { return api::verify_l1(type); });
  auto* ver_t = ver->add_subcommand("tsystem", "T-system identities");
  ver_t->add_option("--type", type)->required();
  ver_t->add_option("--kmax", kmax);
  bind(ver_t, [&] { return api::verify_tsystem(type, kmax); });
  auto* ver_iota = ver->add_subcommand("iota", "Level-ell initial seed bookkeeping (experimental)");
  ver_iota->add_option("--type", type)->required();
  ver_iota->add_option("--level", level)->required();
  bind(ver_iota, [&] { return api::verify_iota(type, level, cap); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const json result = action();
    if (format == "json")
      std::cout << result.dump() << "\n";
    else if (format == "latex")
      std::cout << api::render_latex(result);
    else
      std::cout << api::render_text(result);
    if (result.is_object() && result.contains("pass") && !result["pass"].get<bool>()) return 1;
    return 0;
  } catch (const qloop::CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (" << e.clusters_seen() << " clusters, " << e.variables_seen()
              << " variables seen)\n";
    return 2;
  } catch (const qloop::ConsistencyError& e) {
    std::cerr << "consistency check failed: " << e.what() << "\n";
    return 1;
  } catch (const qloop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed JSON argument: " << e.what() << "\n";
    return 2;
  }
}
