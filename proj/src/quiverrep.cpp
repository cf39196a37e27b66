#include "qloop/quiverrep.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "qloop/error.hpp"

namespace qloop {

Quiver::Quiver(int vertices, std::vector<Arrow> arrows) : n_(vertices), arrows_(std::move(arrows)) {
  for (const Arrow& a : arrows_)
    if (a.source < 0 || a.source >= n_ || a.target < 0 || a.target >= n_ || a.source == a.target)
      throw InvalidInput("arrow endpoints out of range");
}

Quiver Quiver::sink_source(const CartanData& c) {
  std::vector<Arrow> arrows;
  for (int i : c.i1())
    for (int j : c.neighbors(i)) arrows.push_back({i - 1, j - 1});
  return Quiver(c.rank(), std::move(arrows));
}

long long Quiver::euler_form(const DimVec& d, const DimVec& e) const {
  long long s = 0;
  for (int i = 0; i < n_; ++i) s += static_cast<long long>(d[i]) * e[i];
  for (const Arrow& a : arrows_) s -= static_cast<long long>(d[a.source]) * e[a.target];
  return s;
}

long long Quiver::symmetric_form(const DimVec& d, const DimVec& e) const {
  return euler_form(d, e) + euler_form(e, d);
}

std::vector<int> Quiver::sinks_first_order() const {
  std::vector<int> out_degree(n_, 0), order;
  std::vector<std::vector<int>> preds(n_);
  for (const Arrow& a : arrows_) {
    ++out_degree[a.source];
    preds[a.target].push_back(a.source);
  }
  std::vector<int> ready;
  for (int v = n_ - 1; v >= 0; --v)
    if (out_degree[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (int u : preds[v])
      if (--out_degree[u] == 0) ready.push_back(u);
    std::sort(ready.rbegin(), ready.rend());
  }
  if (static_cast<int>(order.size()) != n_) throw InvalidInput("quiver has an oriented cycle");
  return order;
}

Quiver Quiver::reversed_at(int k) const {
  Quiver q = *this;
  for (Arrow& a : q.arrows_)
    if (a.source == k || a.target == k) std::swap(a.source, a.target);
  return q;
}

void QuiverRep::validate() const {
  if (static_cast<int>(dims.size()) != quiver.num_vertices() || maps.size() != quiver.arrows().size())
    throw InvalidInput("representation does not match its quiver");
  for (std::size_t a = 0; a < maps.size(); ++a) {
    const Arrow& ar = quiver.arrows()[a];
    if (maps[a].rows() != dims[ar.target] || maps[a].cols() != dims[ar.source])
      throw InvalidInput("arrow matrix has the wrong shape");
  }
}

int QuiverRep::total_dimension() const {
  int s = 0;
  for (int d : dims) s += d;
  return s;
}

std::optional<FpQuiverRep> reduce_rep(const QuiverRep& m, std::uint32_t p) {
  FpQuiverRep r{m.quiver, m.dims, {}, p};
  for (const QMatrix& a : m.maps) {
    auto red = reduce_mod(a, p);
    if (!red || rank(*red) != rank(a)) return std::nullopt;
    r.maps.push_back(std::move(*red));
  }
  return r;
}

QuiverRep zero_rep(const Quiver& q) {
  QuiverRep m{q, DimVec(q.num_vertices(), 0), {}};
  m.maps.assign(q.arrows().size(), QMatrix(0, 0));
  return m;
}

QuiverRep simple_rep(const Quiver& q, int vertex) {
  QuiverRep m{q, unit_vector(q.num_vertices(), vertex), {}};
  for (const Arrow& a : q.arrows()) m.maps.emplace_back(m.dims[a.target], m.dims[a.source]);
  return m;
}

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b) {
  if (!(a.quiver == b.quiver)) throw InvalidInput("direct sum of representations of different quivers");
  QuiverRep s{a.quiver, a.dims, {}};
  for (std::size_t i = 0; i < s.dims.size(); ++i) s.dims[i] += b.dims[i];
  for (std::size_t k = 0; k < a.maps.size(); ++k) {
    const Arrow& ar = a.quiver.arrows()[k];
    QMatrix m(s.dims[ar.target], s.dims[ar.source]);
    for (int r = 0; r < a.maps[k].rows(); ++r)
      for (int c = 0; c < a.maps[k].cols(); ++c) m.at(r, c) = a.maps[k].at(r, c);
    const int r0 = a.dims[ar.target], c0 = a.dims[ar.source];
    for (int r = 0; r < b.maps[k].rows(); ++r)
      for (int c = 0; c < b.maps[k].cols(); ++c) m.at(r0 + r, c0 + c) = b.maps[k].at(r, c);
    s.maps.push_back(std::move(m));
  }
  return s;
}

int height(const DimVec& d) {
  int h = 0;
  for (int x : d) h += x;
  return h;
}

DimVec unit_vector(int n, int i) {
  DimVec e(n, 0);
  e[i] = 1;
  return e;
}

std::vector<DimVec> positive_roots(const Quiver& q) {
  const int n = q.num_vertices();
  std::set<DimVec> seen;
  std::vector<DimVec> todo;
  for (int i = 0; i < n; ++i) {
    seen.insert(unit_vector(n, i));
    todo.push_back(unit_vector(n, i));
  }
  while (!todo.empty()) {
    DimVec b = todo.back();
    todo.pop_back();
    for (int k = 0; k < n; ++k) {
      DimVec r = b;
      r[k] -= static_cast<int>(q.symmetric_form(b, unit_vector(n, k)));
      if (r[k] < 0 || seen.count(r)) continue;
      if (seen.size() > 100000) throw InvalidInput("quiver is not of finite type");
      seen.insert(r);
      todo.push_back(r);
    }
  }
  std::vector<DimVec> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const DimVec& a, const DimVec& b) { return height(a) < height(b); });
  return out;
}

std::vector<DimVec> positive_roots(const CartanData& c) { return positive_roots(Quiver::sink_source(c)); }

bool is_positive_root(const Quiver& q, const DimVec& d) {
  const auto roots = positive_roots(q);
  return std::find(roots.begin(), roots.end(), d) != roots.end();
}

namespace {

// Reflection functor at a source k: V_k is replaced by the cokernel of
// V_k -> (+)_{k -> j} V_j and the arrows at k are reversed.
QuiverRep reflect_at_source(const QuiverRep& m, int k) {
  const auto& arrows = m.quiver.arrows();
  std::vector<int> out_arrows;
  int total = 0;
  for (std::size_t a = 0; a < arrows.size(); ++a)
    if (arrows[a].source == k) {
      out_arrows.push_back(static_cast<int>(a));
      total += m.dims[arrows[a].target];
    } else if (arrows[a].target == k) {
      throw ConsistencyError("reflection functor applied at a vertex that is not a source");
    }
  QMatrix f(total, m.dims[k]);
  int row = 0;
  for (int a : out_arrows) {
    const QMatrix& ma = m.maps[a];
    for (int r = 0; r < ma.rows(); ++r)
      for (int c = 0; c < ma.cols(); ++c) f.at(row + r, c) = ma.at(r, c);
    row += ma.rows();
  }
  // Rows of the cokernel projection span the left null space of f.
  const Nullspace ns = nullspace(f.transpose());
  std::vector<std::vector<Rational>> coker;
  for (const auto& v : ns.basis) coker.push_back(primitive_integer_vector(v));
  QuiverRep r = m;
  r.quiver = m.quiver.reversed_at(k);
  r.dims[k] = static_cast<int>(coker.size());
  int col = 0;
  for (int a : out_arrows) {
    const int dj = m.dims[arrows[a].target];
    QMatrix na(r.dims[k], dj);
    for (int i = 0; i < r.dims[k]; ++i)
      for (int c = 0; c < dj; ++c) na.at(i, c) = coker[i][col + c];
    r.maps[a] = std::move(na);
    col += dj;
  }
  return r;
}

}  // namespace

QuiverRep indecomposable_rep(const Quiver& q, const DimVec& beta) {
  const int n = q.num_vertices();
  if (static_cast<int>(beta.size()) != n) throw InvalidInput("dimension vector has the wrong length");
  if (std::any_of(beta.begin(), beta.end(), [](int x) { return x < 0; }) || height(beta) == 0)
    throw InvalidInput("not a positive root");
  const std::vector<int> order = q.sinks_first_order();
  std::vector<int> steps;
  Quiver cur = q;
  DimVec b = beta;
  for (int t = 0;; ++t) {
    if (t > 64 * n * n + 64) throw InvalidInput("not a positive root");
    const int k = order[t % n];
    if (b == unit_vector(n, k)) break;
    b[k] -= static_cast<int>(cur.symmetric_form(b, unit_vector(n, k)));
    if (b[k] < 0) throw InvalidInput("not a positive root");
    cur = cur.reversed_at(k);
    steps.push_back(k);
  }
  QuiverRep m = simple_rep(cur, order[steps.size() % n]);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) m = reflect_at_source(m, *it);
  if (!(m.quiver == q) || m.dims != beta) throw ConsistencyError("reflection functors produced a wrong module");
  if (hom_dim(m, m) != 1) throw ConsistencyError("reflection functors produced a decomposable module");
  return m;
}

int hom_dim(const QuiverRep& m, const QuiverRep& n) {
  if (!(m.quiver == n.quiver)) throw InvalidInput("Hom between representations of different quivers");
  const int nv = m.quiver.num_vertices();
  std::vector<int> off(nv + 1, 0);
  for (int i = 0; i < nv; ++i) off[i + 1] = off[i] + n.dims[i] * m.dims[i];
  const int vars = off[nv];
  if (vars == 0) return 0;
  int eqs = 0;
  for (const Arrow& a : m.quiver.arrows()) eqs += n.dims[a.target] * m.dims[a.source];
  QMatrix sys(eqs, vars);
  int row = 0;
  const auto& arrows = m.quiver.arrows();
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const int i = arrows[k].source, j = arrows[k].target;
    // N_a phi_i - phi_j M_a = 0, an (n_j x m_i) system.
    for (int r = 0; r < n.dims[j]; ++r)
      for (int c = 0; c < m.dims[i]; ++c, ++row) {
        for (int l = 0; l < n.dims[i]; ++l) sys.at(row, off[i] + l * m.dims[i] + c) += n.maps[k].at(r, l);
        for (int l = 0; l < m.dims[j]; ++l) sys.at(row, off[j] + r * m.dims[j] + l) -= m.maps[k].at(l, c);
      }
  }
  return vars - rank(sys);
}

int ext1_dim(const QuiverRep& m, const QuiverRep& n) {
  return hom_dim(m, n) - static_cast<int>(m.quiver.euler_form(m.dims, n.dims));
}

std::vector<DimVec> generic_decomposition(const Quiver& q, const DimVec& d) {
  const int n = q.num_vertices();
  if (static_cast<int>(d.size()) != n || std::any_of(d.begin(), d.end(), [](int x) { return x < 0; }))
    throw InvalidInput("dimension vector must be nonnegative with one entry per vertex");
  std::vector<DimVec> roots;
  for (const DimVec& r : positive_roots(q)) {
    bool fits = true;
    for (int i = 0; i < n; ++i) fits = fits && r[i] <= d[i];
    if (fits) roots.push_back(r);
  }
  std::stable_sort(roots.begin(), roots.end(), [](const DimVec& a, const DimVec& b) { return height(a) > height(b); });
  std::vector<QuiverRep> reps;
  for (const DimVec& r : roots) reps.push_back(indecomposable_rep(q, r));
  const std::size_t nr = roots.size();
  std::vector<std::vector<bool>> orth(nr, std::vector<bool>(nr));
  for (std::size_t a = 0; a < nr; ++a)
    for (std::size_t b = a; b < nr; ++b)
      orth[a][b] = orth[b][a] = ext1_dim(reps[a], reps[b]) == 0 && ext1_dim(reps[b], reps[a]) == 0;

  std::vector<std::vector<DimVec>> solutions;
  std::vector<std::size_t> chosen;
  DimVec rest = d;
  std::function<void(std::size_t)> dfs = [&](std::size_t start) {
    if (height(rest) == 0) {
      std::vector<DimVec> sol;
      for (std::size_t c : chosen) sol.push_back(roots[c]);
      solutions.push_back(std::move(sol));
      return;
    }
    for (std::size_t k = start; k < nr; ++k) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) ok = roots[k][i] <= rest[i];
      for (std::size_t c : chosen) ok = ok && orth[c][k];
      if (!ok) continue;
      for (int i = 0; i < n; ++i) rest[i] -= roots[k][i];
      chosen.push_back(k);
      dfs(k);
      chosen.pop_back();
      for (int i = 0; i < n; ++i) rest[i] += roots[k][i];
    }
  };
  dfs(0);
  if (solutions.size() != 1)
    throw ConsistencyError("generic decomposition is not unique (" + std::to_string(solutions.size()) +
                           " candidates)");
  return solutions.front();
}

namespace {

// Depth-first enumeration of subrepresentations, targets before sources.
// A vertex without incoming arrows never constrains later choices, so its
// subspaces are only counted (Gaussian binomials), not enumerated.
std::map<DimVec, Integer> count_subreps(const FpQuiverRep& m, const DimVec* only) {
  const int n = m.quiver.num_vertices();
  const std::uint32_t p = m.prime;
  const auto& arrows = m.quiver.arrows();
  const std::vector<int> order = m.quiver.sinks_first_order();
  std::vector<bool> has_in(n, false);
  std::vector<std::vector<int>> out_arrows(n);
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    has_in[arrows[a].target] = true;
    out_arrows[arrows[a].source].push_back(static_cast<int>(a));
  }
  std::vector<FpMatrix> ann(n);  // x in X_v  <=>  ann[v] x = 0
  DimVec nu(n, 0);
  std::map<DimVec, Integer> counts;

  std::function<void(int, const Integer&)> dfs = [&](int idx, const Integer& weight) {
    if (idx == n) {
      counts[nu] += weight;
      return;
    }
    const int u = order[idx];
    const int du = m.dims[u];
    FpMatrix cons(0, du, p);
    for (int a : out_arrows[u]) cons = FpMatrix::stack(cons, ann[arrows[a].target] * m.maps[a]);
    const FpMatrix kernel = nullspace_rows(cons, du);
    const int k = kernel.rows();
    if (!has_in[u]) {
      for (int r = 0; r <= k; ++r) {
        if (only && (*only)[u] != r) continue;
        nu[u] = r;
        dfs(idx + 1, weight * gaussian_binomial(k, r, p));
      }
      nu[u] = 0;
      return;
    }
    for_each_subspace(k, p, [&](const FpMatrix& b) {
      if (only && (*only)[u] != b.rows()) return;
      nu[u] = b.rows();
      ann[u] = nullspace_rows(b * kernel, du);
      dfs(idx + 1, weight);
    });
    nu[u] = 0;
  };
  dfs(0, Integer(1));
  return counts;
}

int degree_bound(const DimVec& d, const DimVec& nu) {
  int s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) s += nu[i] * (d[i] - nu[i]);
  return s;
}

std::vector<std::uint32_t> good_primes(const QuiverRep& m, int how_many, std::vector<FpQuiverRep>& reduced) {
  std::vector<std::uint32_t> primes;
  for (std::uint32_t p = 2; static_cast<int>(primes.size()) < how_many; ++p) {
    if (!is_prime(p)) continue;
    if (auto r = reduce_rep(m, p)) {
      primes.push_back(p);
      reduced.push_back(std::move(*r));
    }
  }
  return primes;
}

}  // namespace

std::map<DimVec, Integer> subrep_counts(const FpQuiverRep& m) { return count_subreps(m, nullptr); }

Integer grassmannian_count_fq(const FpQuiverRep& m, const DimVec& nu) {
  if (nu.size() != m.dims.size()) throw InvalidInput("dimension vector has the wrong length");
  for (std::size_t i = 0; i < nu.size(); ++i)
    if (nu[i] < 0 || nu[i] > m.dims[i]) throw InvalidInput("nu must satisfy 0 <= nu <= dim M");
  auto counts = count_subreps(m, &nu);
  auto it = counts.find(nu);
  return it == counts.end() ? Integer(0) : it->second;
}

Integer count_subrepresentations(const FpQuiverRep& m) {
  Integer s = 0;
  for (const auto& [nu, c] : subrep_counts(m)) s += c;
  return s;
}

GrassmannianCensus grassmannian_census(const QuiverRep& m) {
  m.validate();
  DimVec half(m.dims.size());
  for (std::size_t i = 0; i < half.size(); ++i) half[i] = m.dims[i] / 2;
  const int dmax = degree_bound(m.dims, half);
  GrassmannianCensus out;
  std::vector<FpQuiverRep> reduced;
  out.primes = good_primes(m, dmax + 2, reduced);
  std::vector<std::map<DimVec, Integer>> per_prime;
  std::set<DimVec> all;
  for (const auto& r : reduced) {
    per_prime.push_back(subrep_counts(r));
    for (const auto& [nu, c] : per_prime.back()) all.insert(nu);
  }
  std::vector<Integer> xs(out.primes.begin(), out.primes.end());
  for (const DimVec& nu : all) {
    std::vector<Integer> ys;
    for (const auto& pp : per_prime) {
      auto it = pp.find(nu);
      ys.push_back(it == pp.end() ? Integer(0) : it->second);
    }
    const int deg = degree_bound(m.dims, nu);
    auto poly = fit_integer_polynomial(xs, ys, deg);
    if (!poly) throw ConsistencyError("quiver Grassmannian point counts are not polynomial in q");
    Integer chi = 0;
    for (const auto& c : *poly) chi += c;
    out.nus.push_back(nu);
    out.degree_bounds.push_back(deg);
    out.counts.push_back(std::move(ys));
    out.polynomials.push_back(std::move(*poly));
    out.euler.push_back(chi);
  }
  return out;
}

Integer grassmannian_euler(const QuiverRep& m, const DimVec& nu) {
  m.validate();
  if (nu.size() != m.dims.size()) throw InvalidInput("dimension vector has the wrong length");
  for (std::size_t i = 0; i < nu.size(); ++i)
    if (nu[i] < 0 || nu[i] > m.dims[i]) throw InvalidInput("nu must satisfy 0 <= nu <= dim M");
  const int deg = degree_bound(m.dims, nu);
  std::vector<FpQuiverRep> reduced;
  const auto primes = good_primes(m, deg + 2, reduced);
  std::vector<Integer> xs(primes.begin(), primes.end()), ys;
  for (const auto& r : reduced) ys.push_back(grassmannian_count_fq(r, nu));
  auto poly = fit_integer_polynomial(xs, ys, deg);
  if (!poly) throw ConsistencyError("quiver Grassmannian point counts are not polynomial in q");
  Integer chi = 0;
  for (const auto& c : *poly) chi += c;
  return chi;
}

std::vector<int> reflect_i1(const CartanData& c, const std::vector<int>& beta) {
  if (static_cast<int>(beta.size()) != c.rank()) throw InvalidInput("root has the wrong length");
  std::vector<int> b = beta;
  for (int i : c.i1()) {
    int pairing = 0;
    for (int j = 1; j <= c.rank(); ++j) pairing += beta[j - 1] * c.entry(i, j);
    b[i - 1] -= pairing;
  }
  return b;
}

}  // namespace qloop
