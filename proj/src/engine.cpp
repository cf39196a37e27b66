#include "qloop/engine.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "qloop/error.hpp"
#include "qloop/linalg.hpp"
#include "qloop/preproj.hpp"

namespace qloop {

YMonomial kr_monomial(int node, int k, int s) {
  std::vector<YMonomial::Entry> es;
  for (int j = 0; j < k; ++j) es.push_back({{node, s + 2 * j}, 1});
  return YMonomial::from_entries(std::move(es));
}

const YPolynomial& KRCalculator::canonical(int node, int k) {
  c_.check_node(node);
  if (k < 0) throw InvalidInput("KR module needs k >= 0");
  if (auto it = cache_.find({node, k}); it != cache_.end()) return it->second;
  const int s = c_.xi(node);
  YPolynomial out;
  if (k == 0) {
    out = YPolynomial(1L);
  } else if (k == 1) {
    out = fundamental_qchar(c_, node, s);
  } else {
    // T-system at length k - 1.
    const int m = k - 1;
    YPolynomial num = kr(node, m, s) * kr(node, m, s + 2);
    YPolynomial prod(1L);
    for (int j : c_.neighbors(node)) prod *= kr(j, m, s + 1);
    num -= prod;
    auto q = num.divide_exact(kr(node, m - 1, s + 2));
    if (!q)
      throw ConsistencyError("T-system division is not exact for node " + std::to_string(node) + ", k = " +
                             std::to_string(k));
    out = std::move(*q);
  }
  return cache_.emplace(std::make_pair(node, k), std::move(out)).first->second;
}

YPolynomial KRCalculator::kr(int node, int k, int s) {
  const YPolynomial& base = canonical(node, k);
  return shift(base, s - c_.xi(node));
}

YPolynomial kr_qchar(const CartanData& c, int node, int k, int s) {
  KRCalculator calc(c);
  return calc.kr(node, k, s);
}

TSystemCheck verify_tsystem(KRCalculator& kr, int node, int k, int s) {
  const CartanData& c = kr.cartan();
  c.check_node(node);
  if (k < 1) throw InvalidInput("T-system check needs k >= 1");
  std::vector<YPolynomial> classes{kr.kr(node, k, s), kr.kr(node, k, s + 2), kr.kr(node, k + 1, s),
                                   kr.kr(node, k - 1, s + 2)};
  YPolynomial prod(1L);
  for (int j : c.neighbors(node)) {
    classes.push_back(kr.kr(j, k, s + 1));
    prod *= classes.back();
  }
  TSystemCheck out;
  out.lhs = classes[0] * classes[1];
  out.rhs = classes[2] * classes[3] + prod;
  out.equal = out.lhs == out.rhs;
  out.positive = std::all_of(classes.begin(), classes.end(), [](const YPolynomial& p) { return p.has_positive_coefficients(); });
  out.minuscule = std::all_of(classes.begin(), classes.end(), [](const YPolynomial& p) { return count_dominant(p) == 1; });
  return out;
}

bool verify_tsystem(const CartanData& c, int node, int k, int s) {
  KRCalculator calc(c);
  return verify_tsystem(calc, node, k, s).pass();
}

YMonomial y_alpha(const CartanData& c, const std::vector<int>& alpha) {
  const int n = c.rank();
  if (static_cast<int>(alpha.size()) != n) throw InvalidInput("root has the wrong length");
  int negatives = 0, neg_node = 0, nonzero = 0;
  for (int i = 0; i < n; ++i) {
    if (alpha[i] != 0) ++nonzero;
    if (alpha[i] < 0) {
      ++negatives;
      neg_node = i + 1;
    }
  }
  if (negatives == 0) {
    const auto roots = positive_roots(c);
    if (std::find(roots.begin(), roots.end(), alpha) == roots.end()) throw InvalidInput("not a positive root");
    std::vector<YMonomial::Entry> es;
    for (int i = 1; i <= n; ++i) es.push_back({{i, 3 * c.xi(i)}, alpha[i - 1]});
    return YMonomial::from_entries(std::move(es));
  }
  if (negatives == 1 && nonzero == 1 && alpha[neg_node - 1] == -1) {
    if (c.in_i0(neg_node))
      throw InvalidInput("-alpha_" + std::to_string(neg_node) + " with the node in I0 does not arise here");
    return y_var(neg_node, 2 - c.xi(neg_node));
  }
  throw InvalidInput("expected a positive root or a negative simple root");
}

ClusterLaurent grassmannian_polynomial(const QuiverRep& m) {
  const GrassmannianCensus census = grassmannian_census(m);
  ClusterLaurent f;
  for (std::size_t k = 0; k < census.nus.size(); ++k) {
    std::vector<ClusterLaurent::Mono::Entry> es;
    for (std::size_t i = 0; i < census.nus[k].size(); ++i) es.emplace_back(static_cast<int>(i), census.nus[k][i]);
    f.add_term(ClusterLaurent::Mono::from_entries(std::move(es)), census.euler[k]);
  }
  return f;
}

YPolynomial substitute_v(const CartanData& c, const ClusterLaurent& f) {
  return f.transform([&c](const ClusterLaurent::Mono& m) {
    YMonomial out;
    for (const auto& [k, e] : m.entries()) out *= a_monomial(c, k + 1, c.xi(k + 1) + 1).pow(-e);
    return out;
  });
}

YPolynomial simple_trunc_qchar_c1(const CartanData& c, const std::vector<int>& beta) {
  const Quiver q = Quiver::sink_source(c);
  if (!is_positive_root(q, beta)) throw InvalidInput("not a positive root");
  const QuiverRep m = indecomposable_rep(q, beta);
  return substitute_v(c, grassmannian_polynomial(m)).times(y_alpha(c, reflect_i1(c, beta)));
}

Level1Data::Level1Data(const CartanData& c, std::size_t cap)
    : cartan(c), quiver(Quiver::sink_source(c)), graph(enumerate_exchange_graph(gamma_seed(c, 1), cap)) {
  const int n = c.rank();
  const auto pos = positive_roots(c);
  for (std::size_t id = 0; id < graph.variables.size(); ++id) {
    std::vector<int> d = denominator_vector(graph.initial, graph.variables[id]);
    const auto neg = std::find_if(d.begin(), d.end(), [](int x) { return x < 0; });
    if (neg != d.end()) {
      const int i = static_cast<int>(neg - d.begin()) + 1;
      if (d != [&] { std::vector<int> e(n, 0); e[i - 1] = -1; return e; }())
        throw ConsistencyError("denominator vector is not an almost positive root");
      monomials.push_back(y_var(i, c.xi(i) + 2));
    } else {
      if (std::find(pos.begin(), pos.end(), d) == pos.end())
        throw ConsistencyError("denominator vector is not an almost positive root");
      monomials.push_back(y_alpha(c, reflect_i1(c, d)));
    }
    roots.push_back(std::move(d));
  }
  const std::size_t nv = graph.variables.size();
  compatible.assign(nv, std::vector<bool>(nv, false));
  for (const auto& cl : graph.clusters)
    for (int a : cl)
      for (int b : cl) compatible[a][b] = true;
  for (std::size_t a = 0; a < nv; ++a) compatible[a][a] = true;
}

int Level1Data::id_of_root(const std::vector<int>& root) const {
  for (std::size_t id = 0; id < roots.size(); ++id)
    if (roots[id] == root) return static_cast<int>(id);
  throw InvalidInput("no cluster variable for this root");
}

YMonomial Level1Data::frozen_monomial(int node) const {
  return kr_monomial(node, 2, cartan.xi(node));
}

std::vector<Factor> factor_simple_c1(const Level1Data& data, const YMonomial& m) {
  const CartanData& c = data.cartan;
  if (!is_dominant(m) || !in_level(c, m, 1)) throw InvalidInput("monomial is not a dominant monomial of level 1");
  std::vector<Factor> cands;
  for (int i = 1; i <= c.rank(); ++i) cands.push_back({Factor::Kind::Frozen, i, -1, {}, data.frozen_monomial(i)});
  for (std::size_t id = 0; id < data.monomials.size(); ++id)
    cands.push_back({Factor::Kind::Variable, 0, static_cast<int>(id), data.roots[id], data.monomials[id]});

  std::vector<std::vector<Factor>> solutions;
  std::vector<Factor> chosen;
  YMonomial rest = m;
  std::function<void(std::size_t)> dfs = [&](std::size_t start) {
    if (solutions.size() > 1) return;
    if (rest.is_one()) {
      solutions.push_back(chosen);
      return;
    }
    for (std::size_t k = start; k < cands.size(); ++k) {
      const Factor& f = cands[k];
      bool fits = true;
      for (const auto& [key, e] : f.monomial.entries()) fits = fits && rest.exponent(key) >= e;
      if (!fits) continue;
      if (f.kind == Factor::Kind::Variable)
        for (const Factor& g : chosen)
          if (g.kind == Factor::Kind::Variable && !data.compatible[g.variable_id][f.variable_id]) fits = false;
      if (!fits) continue;
      chosen.push_back(f);
      rest = rest / f.monomial;
      dfs(k);
      rest = rest * f.monomial;
      chosen.pop_back();
    }
  };
  dfs(0);
  if (solutions.size() != 1)
    throw ConsistencyError(solutions.empty() ? "monomial has no factorization into compatible cluster monomials"
                                             : "monomial has several factorizations into compatible cluster monomials");
  std::vector<Factor> out = solutions.front();

  DimVec d(c.rank(), 0);
  std::vector<DimVec> pos;
  for (const Factor& f : out)
    if (f.kind == Factor::Kind::Variable && std::all_of(f.root.begin(), f.root.end(), [](int x) { return x >= 0; })) {
      pos.push_back(f.root);
      for (int i = 0; i < c.rank(); ++i) d[i] += f.root[i];
    }
  if (!pos.empty()) {
    auto gen = generic_decomposition(data.quiver, d);
    std::sort(gen.begin(), gen.end());
    std::sort(pos.begin(), pos.end());
    if (gen != pos) throw ConsistencyError("factorization disagrees with the generic decomposition");
  }
  return out;
}

namespace {

YPolynomial frozen_or_initial_trunc(const Level1Data& data, const Factor& f, KRCalculator& kr) {
  const CartanData& c = data.cartan;
  if (f.kind == Factor::Kind::Frozen)
    return truncate_c1(c, kr.kr(f.node, 2, c.xi(f.node)), f.monomial);
  const int i = static_cast<int>(std::find(f.root.begin(), f.root.end(), -1) - f.root.begin()) + 1;
  return truncate_c1(c, kr.kr(i, 1, c.xi(i) + 2), f.monomial);
}

bool is_initial(const Factor& f) {
  return f.kind == Factor::Kind::Variable && std::any_of(f.root.begin(), f.root.end(), [](int x) { return x < 0; });
}

}  // namespace

YPolynomial level1_trunc_qchar(const Level1Data& data, const YMonomial& m) {
  KRCalculator kr(data.cartan);
  YPolynomial out(1L);
  for (const Factor& f : factor_simple_c1(data, m)) {
    if (f.kind == Factor::Kind::Frozen || is_initial(f))
      out *= frozen_or_initial_trunc(data, f, kr);
    else
      out *= simple_trunc_qchar_c1(data.cartan, f.root);
  }
  return out;
}

YPolynomial level1_trunc_qchar_generic(const Level1Data& data, const YMonomial& m) {
  const CartanData& c = data.cartan;
  KRCalculator kr(c);
  YPolynomial out(1L);
  DimVec d(c.rank(), 0);
  for (const Factor& f : factor_simple_c1(data, m)) {
    if (f.kind == Factor::Kind::Frozen || is_initial(f)) {
      out *= frozen_or_initial_trunc(data, f, kr);
    } else {
      for (int i = 0; i < c.rank(); ++i) d[i] += f.root[i];
    }
  }
  if (height(d) == 0) return out;
  // Small generic representations are counted directly; larger ones use
  // chi(Gr(M + N)) = sum chi(Gr(M)) chi(Gr(N)) (torus fixed points).
  const bool direct = height(d) <= 10 && *std::max_element(d.begin(), d.end()) <= 3;
  const auto parts = generic_decomposition(data.quiver, d);
  QuiverRep generic = zero_rep(data.quiver);
  ClusterLaurent product(1L);
  YMonomial top;
  for (const DimVec& beta : parts) {
    const QuiverRep ind = indecomposable_rep(data.quiver, beta);
    top *= y_alpha(c, reflect_i1(c, beta));
    if (direct)
      generic = direct_sum(generic, ind);
    else
      product *= grassmannian_polynomial(ind);
  }
  if (direct) product = grassmannian_polynomial(generic);
  return out * substitute_v(c, product).times(top);
}

bool Report::pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const ReportEntry& e) { return e.pass; });
}

namespace {

std::string vec_text(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

Report verify_l1(const CartanData& c) {
  Report rep;
  const Level1Data data(c);
  const auto pos = positive_roots(c);

  for (const DimVec& beta : pos) {
    const int id = data.id_of_root(beta);
    const FGData fg = f_polynomial_and_gvector(data.graph, id);
    const ClusterLaurent gr = grassmannian_polynomial(indecomposable_rep(data.quiver, beta));
    const YMonomial top = y_alpha(c, reflect_i1(c, beta));
    ReportEntry e;
    e.name = "beta=" + vec_text(beta);
    e.lhs = substitute_v(c, fg.f).times(top);
    e.rhs = substitute_v(c, gr).times(top);
    e.pass = fg.f == gr && e.lhs == e.rhs;
    rep.entries.push_back(std::move(e));
  }

  {
    ReportEntry e;
    e.name = "variable-count";
    const std::size_t expected = static_cast<std::size_t>(c.rank()) + pos.size();
    e.pass = data.graph.variables.size() == expected;
    e.detail = std::to_string(data.graph.variables.size()) + " variables, expected " + std::to_string(expected);
    rep.entries.push_back(std::move(e));
  }
  {
    ReportEntry e;
    e.name = "distinct-dominant-monomials";
    std::set<std::vector<YMonomial::Entry>> seen;
    bool ok = true;
    for (const YMonomial& m : data.monomials) {
      ok = ok && is_dominant(m) && in_level(c, m, 1);
      ok = seen.insert(m.entries()).second && ok;
      e.lhs.add_term(m, 1);
    }
    e.pass = ok;
    e.detail = std::to_string(seen.size()) + " distinct monomials";
    rep.entries.push_back(std::move(e));
  }
  KRCalculator kr(c);
  for (int i = 1; i <= c.rank(); ++i) {
    DimVec beta = unit_vector(c.rank(), i - 1);
    if (c.in_i0(i))
      for (int j : c.neighbors(i)) beta[j - 1] = 1;
    ReportEntry e;
    e.name = "fundamental[" + std::to_string(i) + "]";
    const YMonomial top = y_var(i, c.xi(i));
    e.lhs = truncate_c1(c, kr.kr(i, 1, c.xi(i)), top);
    e.rhs = simple_trunc_qchar_c1(c, beta);
    e.pass = e.lhs == e.rhs;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

std::string expected_cluster_type(const CartanData& c, int ell) {
  if (ell < 1) return "";
  if (ell == 1) return c.label();
  if (c.label() == "A1") return "A" + std::to_string(ell);
  if (c.label() == "A2" && ell == 2) return "D4";
  if (c.label() == "A2" && ell == 3) return "E6";
  if (c.label() == "A2" && ell == 4) return "E8";
  if (c.label() == "A3" && ell == 2) return "E6";
  if (c.label() == "A4" && ell == 2) return "E8";
  return "";
}

Report verify_iota(const CartanData& c, int ell, std::size_t cap) {
  if (ell < 1) throw InvalidInput("level must be >= 1");
  Report rep;
  const Seed seed = gamma_seed(c, ell);
  std::vector<YMonomial> images;
  for (const YKey& v : seed.labels) {
    const int k = (v.shift - c.xi(v.node)) / 2;
    images.push_back(kr_monomial(v.node, ell + 1 - k, v.shift));
  }
  {
    ReportEntry e;
    e.name = "images-in-level";
    e.pass = std::all_of(images.begin(), images.end(),
                         [&](const YMonomial& m) { return is_dominant(m) && in_level(c, m, ell); });
    for (const YMonomial& m : images) e.lhs.add_term(m, 1);
    rep.entries.push_back(std::move(e));
  }
  {
    ReportEntry e;
    e.name = "images-independent";
    std::vector<YKey> keys;
    for (const YMonomial& m : images)
      for (const auto& [key, x] : m.entries()) keys.push_back(key);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    QMatrix exps(static_cast<int>(images.size()), static_cast<int>(keys.size()));
    for (std::size_t r = 0; r < images.size(); ++r)
      for (std::size_t k = 0; k < keys.size(); ++k) exps.at(static_cast<int>(r), static_cast<int>(k)) = images[r].exponent(keys[k]);
    const int rk = rank(exps);
    e.pass = rk == static_cast<int>(images.size());
    e.detail = "exponent matrix rank " + std::to_string(rk) + " of " + std::to_string(images.size());
    rep.entries.push_back(std::move(e));
  }
  {
    ReportEntry e;
    e.name = "cluster-type";
    const Classification cl = classify_seed(seed, cap);
    const std::string expected = expected_cluster_type(c, ell);
    e.pass = expected.empty() ? cl.label == "infinite-or-large" : cl.label == expected;
    e.detail = cl.label + " (" + std::to_string(cl.variables) + " variables, " + std::to_string(cl.clusters) +
               " clusters" + (expected.empty() ? ", no finite type expected)" : ", expected " + expected + ")");
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace qloop
