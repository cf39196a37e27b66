#include "qloop/cluster.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <random>

#include "qloop/error.hpp"

namespace qloop {

Seed make_seed(const ExchangeMatrix& b, int mutable_count) {
  const int n = static_cast<int>(b.size());
  if (mutable_count < 0 || mutable_count > n) throw InvalidInput("mutable count out of range");
  for (const auto& row : b)
    if (static_cast<int>(row.size()) != n) throw InvalidInput("exchange matrix must be square");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (b[i][j] != -b[j][i]) throw InvalidInput("exchange matrix must be skew-symmetric");
  Seed s;
  s.mutable_count = mutable_count;
  s.b = b;
  for (int i = 0; i < n; ++i) s.vars.emplace_back(ClusterLaurent::Mono::variable(i));
  return s;
}

Seed gamma_seed(const CartanData& c, int ell) {
  if (ell < 0) throw InvalidInput("level must be >= 0");
  std::vector<YKey> labels;
  for (int k = 1; k <= ell; ++k)
    for (int i = 1; i <= c.rank(); ++i) labels.push_back({i, c.xi(i) + 2 * k});
  const int m = static_cast<int>(labels.size());
  for (int i = 1; i <= c.rank(); ++i) labels.push_back({i, c.xi(i)});
  std::map<YKey, int> index;
  for (std::size_t v = 0; v < labels.size(); ++v) index[labels[v]] = static_cast<int>(v);
  const int n = static_cast<int>(labels.size());
  ExchangeMatrix b(n, std::vector<int>(n, 0));
  auto add_arrow = [&](int from, int to) {
    b[from][to] += 1;
    b[to][from] -= 1;
  };
  for (const YKey& v : labels) {
    const int from = index.at(v);
    for (int j : c.neighbors(v.node))
      if (auto it = index.find({j, v.shift - 1}); it != index.end()) add_arrow(from, it->second);
    if (auto it = index.find({v.node, v.shift + 2}); it != index.end()) add_arrow(from, it->second);
  }
  Seed s = make_seed(b, m);
  s.labels = std::move(labels);
  return s;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k) {
  const int n = static_cast<int>(b.size());
  ExchangeMatrix out = b;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out[i][j] = -b[i][j];
      } else {
        out[i][j] = b[i][j] + std::max(b[i][k], 0) * std::max(b[k][j], 0) -
                    std::max(-b[i][k], 0) * std::max(-b[k][j], 0);
      }
    }
  return out;
}

namespace {

// The two monomials of the exchange relation at k.
std::pair<ClusterLaurent, ClusterLaurent> exchange_terms(const ExchangeMatrix& b, int k,
                                                         const std::vector<const ClusterLaurent*>& x) {
  ClusterLaurent plus(1L), minus(1L);
  for (std::size_t i = 0; i < b.size(); ++i) {
    const int e = b[i][k];
    if (e > 0) plus *= x[i]->pow(static_cast<unsigned>(e));
    if (e < 0) minus *= x[i]->pow(static_cast<unsigned>(-e));
  }
  return {plus, minus};
}

}  // namespace

Seed mutate(const Seed& s, int k) {
  if (k < 0 || k >= s.mutable_count) throw InvalidInput("vertex " + std::to_string(k) + " is not mutable");
  std::vector<const ClusterLaurent*> x;
  for (const auto& v : s.vars) x.push_back(&v);
  auto [plus, minus] = exchange_terms(s.b, k, x);
  auto q = (plus + minus).divide_exact(s.vars[k]);
  if (!q) throw ConsistencyError("exchange relation is not Laurent in the initial cluster");
  Seed out = s;
  out.b = mutate_matrix(s.b, k);
  out.vars[k] = std::move(*q);
  return out;
}

namespace {

// Arithmetic modulo the Mersenne prime 2^61 - 1, used to fingerprint cluster
// variables by evaluation at random points.
constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;
using Fingerprint = std::array<std::uint64_t, 2>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(p & kMod) + static_cast<std::uint64_t>(p >> 61);
  if (r >= kMod) r -= kMod;
  return r;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

Fingerprint fp_mul(const Fingerprint& a, const Fingerprint& b) { return {mulmod(a[0], b[0]), mulmod(a[1], b[1])}; }
Fingerprint fp_add(const Fingerprint& a, const Fingerprint& b) {
  return {(a[0] + b[0]) % kMod, (a[1] + b[1]) % kMod};
}
Fingerprint fp_inv(const Fingerprint& a) { return {powmod(a[0], kMod - 2), powmod(a[1], kMod - 2)}; }
Fingerprint fp_pow(const Fingerprint& a, int e) {
  return {powmod(a[0], static_cast<std::uint64_t>(e)), powmod(a[1], static_cast<std::uint64_t>(e))};
}

struct BfsState {
  ExchangeMatrix b;
  std::vector<int> ids;  // variable id per mutable vertex
  std::vector<int> path;
};

}  // namespace

ExchangeGraph enumerate_exchange_graph(const Seed& s, std::size_t cap) {
  const int m = s.mutable_count, n = s.size();
  ExchangeGraph g;
  g.initial = s;

  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::uint64_t> dist(1, kMod - 1);
  std::vector<Fingerprint> frozen_fp;
  std::vector<Fingerprint> var_fp;
  std::map<Fingerprint, int> by_fp;
  for (int i = 0; i < n; ++i) {
    Fingerprint f{dist(rng), dist(rng)};
    if (i < m) {
      by_fp[f] = i;
      var_fp.push_back(f);
      g.variables.push_back(s.vars[i]);
      g.path_of.push_back({});
      g.vertex_of.push_back(i);
    } else {
      frozen_fp.push_back(f);
    }
  }

  std::map<std::vector<int>, int> cluster_index;
  std::deque<std::pair<int, BfsState>> queue;
  BfsState init{s.b, {}, {}};
  for (int i = 0; i < m; ++i) init.ids.push_back(i);
  g.clusters.push_back(init.ids);
  g.neighbors.emplace_back();
  cluster_index[init.ids] = 0;
  queue.emplace_back(0, std::move(init));

  while (!queue.empty()) {
    auto [cidx, st] = std::move(queue.front());
    queue.pop_front();
    std::vector<int> nbrs(m, -1);
    for (int k = 0; k < m; ++k) {
      Fingerprint plus{1, 1}, minus{1, 1};
      for (int i = 0; i < n; ++i) {
        const int e = st.b[i][k];
        if (e == 0) continue;
        const Fingerprint& xi = i < m ? var_fp[st.ids[i]] : frozen_fp[i - m];
        if (e > 0) plus = fp_mul(plus, fp_pow(xi, e));
        if (e < 0) minus = fp_mul(minus, fp_pow(xi, -e));
      }
      const Fingerprint value = fp_mul(fp_add(plus, minus), fp_inv(var_fp[st.ids[k]]));

      std::vector<const ClusterLaurent*> x;
      for (int i = 0; i < n; ++i) x.push_back(i < m ? &g.variables[st.ids[i]] : &s.vars[i]);
      auto [p1, p2] = exchange_terms(st.b, k, x);
      const ClusterLaurent numerator = p1 + p2;

      int id;
      if (auto it = by_fp.find(value); it != by_fp.end()) {
        id = it->second;
        if (!(g.variables[id] * g.variables[st.ids[k]] == numerator))
          throw ConsistencyError("cluster variable fingerprint collision");
      } else {
        auto q = numerator.divide_exact(g.variables[st.ids[k]]);
        if (!q) throw ConsistencyError("exchange relation is not Laurent in the initial cluster");
        id = static_cast<int>(g.variables.size());
        by_fp[value] = id;
        var_fp.push_back(value);
        g.variables.push_back(std::move(*q));
        std::vector<int> path = st.path;
        path.push_back(k);
        g.path_of.push_back(std::move(path));
        g.vertex_of.push_back(k);
      }

      BfsState next{mutate_matrix(st.b, k), st.ids, st.path};
      next.ids[k] = id;
      next.path.push_back(k);
      std::vector<int> key = next.ids;
      std::sort(key.begin(), key.end());
      auto [it, inserted] = cluster_index.try_emplace(key, static_cast<int>(g.clusters.size()));
      if (inserted) {
        if (g.clusters.size() >= cap)
          throw CapExceeded("exchange graph exceeds the cap of " + std::to_string(cap) + " clusters",
                            g.clusters.size(), g.variables.size());
        g.clusters.push_back(key);
        g.neighbors.emplace_back();
        queue.emplace_back(it->second, std::move(next));
      }
      nbrs[k] = it->second;
    }
    g.neighbors[cidx] = std::move(nbrs);
  }
  return g;
}

FGData f_polynomial_and_gvector(const Seed& s0, const std::vector<int>& path, int vertex) {
  const int m = s0.mutable_count;
  if (vertex < 0 || vertex >= m) throw InvalidInput("vertex is not mutable");
  // Principal framing: an extra frozen vertex m + k with an arrow k -> m + k.
  ExchangeMatrix b(2 * m, std::vector<int>(2 * m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) b[i][j] = s0.b[i][j];
  for (int k = 0; k < m; ++k) {
    b[k][m + k] = 1;
    b[m + k][k] = -1;
  }
  Seed s = make_seed(b, m);
  for (int k : path) s = mutate(s, k);
  const ClusterLaurent& x = s.vars[vertex];

  FGData out;
  out.g.assign(m, 0);
  int y_free = 0;
  for (const auto& [mono, c] : x.terms()) {
    bool has_y = false;
    for (const auto& [v, e] : mono.entries()) has_y = has_y || v >= m;
    if (has_y) continue;
    ++y_free;
    if (c != 1) throw ConsistencyError("principal-coefficient variable has a y-free term with coefficient != 1");
    for (const auto& [v, e] : mono.entries()) out.g[v] = e;
  }
  if (y_free != 1) throw ConsistencyError("principal-coefficient variable does not have a unique y-free term");
  out.f = x.transform([m](const ClusterLaurent::Mono& mono) {
    std::vector<ClusterLaurent::Mono::Entry> es;
    for (const auto& [v, e] : mono.entries())
      if (v >= m) es.emplace_back(v - m, e);
    return ClusterLaurent::Mono::from_entries(std::move(es));
  });
  if (out.f.coefficient({}) != 1) throw ConsistencyError("F-polynomial does not have constant term 1");
  return out;
}

FGData f_polynomial_and_gvector(const ExchangeGraph& g, int id) {
  if (id < 0 || id >= static_cast<int>(g.variables.size())) throw InvalidInput("unknown cluster variable id");
  return f_polynomial_and_gvector(g.initial, g.path_of[id], g.vertex_of[id]);
}

std::vector<int> denominator_vector(const Seed& s0, const ClusterLaurent& x) {
  std::vector<int> d(s0.mutable_count, 0);
  if (x.is_zero()) return d;
  for (int i = 0; i < s0.mutable_count; ++i) {
    int low = x.terms().begin()->first.exponent(i);
    for (const auto& [mono, c] : x.terms()) low = std::min(low, mono.exponent(i));
    d[i] = -low;
  }
  return d;
}

int variable_by_denominator(const ExchangeGraph& g, const std::vector<int>& beta) {
  if (static_cast<int>(beta.size()) != g.initial.mutable_count)
    throw InvalidInput("denominator vector has the wrong length");
  int found = -1;
  for (std::size_t id = 0; id < g.variables.size(); ++id)
    if (denominator_vector(g.initial, g.variables[id]) == beta) {
      if (found >= 0) throw ConsistencyError("two cluster variables share a denominator vector");
      found = static_cast<int>(id);
    }
  if (found < 0) throw ConsistencyError("no cluster variable has this denominator vector");
  return found;
}

namespace {

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

struct Fingerprint3 {
  const char* family;
  int rank;
  Integer variables, clusters;
};

std::vector<Fingerprint3> known_types(int n) {
  std::vector<Fingerprint3> out;
  if (n >= 1) out.push_back({"A", n, Integer(n * (n + 3) / 2), binomial(2 * n + 2, n + 1) / (n + 2)});
  if (n >= 4) out.push_back({"D", n, Integer(n * n), Integer(3 * n - 2) * binomial(2 * n - 2, n - 1) / n});
  if (n == 6) out.push_back({"E", 6, 42, 833});
  if (n == 7) out.push_back({"E", 7, 70, 4160});
  if (n == 8) out.push_back({"E", 8, 128, 25080});
  return out;
}

}  // namespace

Classification classify_seed(const Seed& s, std::size_t cap) {
  Classification out;
  out.rank = s.mutable_count;
  if (s.mutable_count == 0) {
    out.label = "trivial";
    out.clusters = 1;
    return out;
  }
  try {
    const ExchangeGraph g = enumerate_exchange_graph(s, cap);
    out.clusters = g.clusters.size();
    out.variables = g.variables.size();
  } catch (const CapExceeded& e) {
    out.clusters = e.clusters_seen();
    out.variables = e.variables_seen();
    out.label = "infinite-or-large";
    return out;
  }
  out.label = "unknown";
  for (const auto& t : known_types(out.rank))
    if (t.variables == static_cast<unsigned long>(out.variables) && t.clusters == static_cast<unsigned long>(out.clusters)) {
      out.label = std::string(t.family) + std::to_string(t.rank);
      break;
    }
  return out;
}

Classification classify_finite_type(const CartanData& c, int ell, std::size_t cap) {
  if (ell < 1) throw InvalidInput("classification needs level >= 1");
  return classify_seed(gamma_seed(c, ell), cap);
}

}  // namespace qloop
