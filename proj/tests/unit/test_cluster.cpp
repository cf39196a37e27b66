#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "qloop/cluster.hpp"
#include "qloop/quiverrep.hpp"

using namespace qloop;

namespace {

int vertex_of(const Seed& s, const YKey& k) {
  for (int v = 0; v < s.size(); ++v)
    if (s.labels[v] == k) return v;
  return -1;
}

ClusterLaurent v(int k) { return ClusterLaurent(Monomial<int>::variable(k)); }

bool skew(const ExchangeMatrix& b) {
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[i][j] != -b[j][i]) return false;
  return true;
}

int id_of(const ExchangeGraph& g, const ClusterLaurent& x) {
  for (std::size_t i = 0; i < g.variables.size(); ++i)
    if (g.variables[i] == x) return static_cast<int>(i);
  return -1;
}

void check_f_shape(const ClusterLaurent& f) {
  CHECK(f.coefficient(Monomial<int>{}) == 1);
  CHECK(f.has_positive_coefficients());
  int maximal = 0;
  for (const auto& [m, c] : f.terms()) {
    bool above_all = true;
    for (const auto& [m2, c2] : f.terms())
      if (!(m / m2).is_polynomial()) above_all = false;
    maximal += above_all;
  }
  CHECK(maximal == 1);
}

}  // namespace

TEST_CASE("the level-2 A3 quiver") {
  auto a3 = CartanData::from_label("A3");
  Seed s = gamma_seed(a3, 2);
  CHECK(s.size() == 9);
  CHECK(s.mutable_count == 6);
  for (int k = s.mutable_count; k < s.size(); ++k) CHECK(s.labels[k].shift == a3.xi(s.labels[k].node));
  const std::vector<std::pair<YKey, YKey>> arrows{
      {{2, 5}, {1, 4}}, {{2, 5}, {3, 4}}, {{1, 4}, {2, 3}}, {{3, 4}, {2, 3}}, {{2, 3}, {1, 2}}, {{2, 3}, {3, 2}},
      {{1, 2}, {2, 1}}, {{3, 2}, {2, 1}}, {{2, 1}, {1, 0}}, {{2, 1}, {3, 0}}, {{2, 3}, {2, 5}}, {{1, 2}, {1, 4}},
      {{3, 2}, {3, 4}}, {{2, 1}, {2, 3}}, {{1, 0}, {1, 2}}, {{3, 0}, {3, 2}}};
  ExchangeMatrix want(9, std::vector<int>(9, 0));
  for (const auto& [a, b] : arrows) {
    const int i = vertex_of(s, a), j = vertex_of(s, b);
    REQUIRE(i >= 0);
    REQUIRE(j >= 0);
    want[i][j] += 1;
    want[j][i] -= 1;
  }
  // Arrows between two frozen vertices carry no information.
  for (int i = s.mutable_count; i < 9; ++i)
    for (int j = s.mutable_count; j < 9; ++j) want[i][j] = s.b[i][j];
  CHECK(s.b == want);
}

TEST_CASE("degenerate levels and type A1") {
  auto d4 = CartanData::from_label("D4");
  Seed s0 = gamma_seed(d4, 0);
  CHECK(s0.size() == 4);
  CHECK(s0.mutable_count == 0);
  CHECK_THROWS_AS(gamma_seed(d4, -1), InvalidInput);
  auto a1 = CartanData::from_label("A1");
  for (int ell = 1; ell <= 4; ++ell) {
    Seed s = gamma_seed(a1, ell);
    CHECK(s.frozen_count() == 1);
    int arrows = 0;
    for (int i = 0; i < s.size(); ++i)
      for (int j = 0; j < s.size(); ++j)
        if (s.b[i][j] > 0) {
          ++arrows;
          CHECK(s.labels[j].shift == s.labels[i].shift + 2);
        }
    CHECK(arrows == ell);
  }
}

TEST_CASE("mutation rules") {
  Seed s = gamma_seed(CartanData::from_label("A1"), 1);
  Seed m = mutate(s, 0);
  CHECK(m.vars[0] == *(v(1) + 1).divide_exact(v(0)));
  CHECK(m.vars[1] == v(1));
  CHECK_THROWS_AS(mutate(s, 1), InvalidInput);
  CHECK_THROWS_AS(mutate(s, 5), InvalidInput);

  std::mt19937 rng(8);
  for (const char* label : {"A3", "D4"}) {
    Seed cur = gamma_seed(CartanData::from_label(label), label[0] == 'A' ? 2 : 1);
    for (int step = 0; step < 12; ++step) {
      const int k = static_cast<int>(rng() % cur.mutable_count);
      Seed next = mutate(cur, k);
      CHECK(skew(next.b));
      CHECK(mutate(next, k) == cur);
      CHECK(mutate_matrix(mutate_matrix(cur.b, k), k) == cur.b);
      cur = next;
    }
  }
}

TEST_CASE("exchange graphs: counts and local structure") {
  const std::vector<std::tuple<const char*, int, std::size_t, std::size_t>> cases{
      {"A1", 1, 2, 2}, {"A2", 1, 5, 5}, {"A3", 1, 14, 9}, {"A2", 2, 50, 16}, {"D4", 1, 50, 16}};
  for (const auto& [label, ell, clusters, variables] : cases) {
    Seed s = gamma_seed(CartanData::from_label(label), ell);
    ExchangeGraph g = enumerate_exchange_graph(s);
    CHECK(g.clusters.size() == clusters);
    CHECK(g.variables.size() == variables);
    for (std::size_t c = 0; c < g.clusters.size(); ++c) {
      CHECK(g.clusters[c].size() == static_cast<std::size_t>(s.mutable_count));
      std::set<int> nb(g.neighbors[c].begin(), g.neighbors[c].end());
      CHECK(nb.size() == static_cast<std::size_t>(s.mutable_count));
      for (int d : g.neighbors[c]) {
        std::vector<int> common;
        std::set_intersection(g.clusters[c].begin(), g.clusters[c].end(), g.clusters[d].begin(),
                              g.clusters[d].end(), std::back_inserter(common));
        CHECK(common.size() + 1 == g.clusters[c].size());
      }
    }
  }
  CHECK_THROWS_AS(enumerate_exchange_graph(gamma_seed(CartanData::from_label("A3"), 1), 5), CapExceeded);
}

TEST_CASE("F-polynomials and g-vectors: examples") {
  Seed a1 = gamma_seed(CartanData::from_label("A1"), 1);
  ExchangeGraph g1 = enumerate_exchange_graph(a1);
  FGData init = f_polynomial_and_gvector(g1, 0);
  CHECK(init.f == ClusterLaurent(1L));
  CHECK(init.g == std::vector<int>{1});
  FGData other = f_polynomial_and_gvector(g1, 1);
  CHECK(other.f == v(0) + 1);
  CHECK(other.g == std::vector<int>{-1});

  Seed a3 = gamma_seed(CartanData::from_label("A3"), 1);
  ExchangeGraph g3 = enumerate_exchange_graph(a3);
  const int id = variable_by_denominator(g3, {1, 1, 1});
  // Subrepresentations of M[(1,1,1)]: a nonzero space at the source 2 forces both sinks.
  CHECK(f_polynomial_and_gvector(g3, id).f == v(0) * v(1) * v(2) + v(0) * v(2) + v(0) + v(2) + 1);
  for (int i = 0; i < 3; ++i) {
    std::vector<int> neg(3, 0);
    neg[i] = -1;
    CHECK(variable_by_denominator(g3, neg) == i);
  }
  CHECK_THROWS_AS(variable_by_denominator(g3, {2, 0, 0}), ConsistencyError);
}

TEST_CASE("F-polynomial shape on whole exchange graphs") {
  for (auto [label, ell] : {std::pair{"A3", 1}, std::pair{"D4", 1}, std::pair{"A2", 2}, std::pair{"A3", 2}}) {
    ExchangeGraph g = enumerate_exchange_graph(gamma_seed(CartanData::from_label(label), ell));
    for (std::size_t id = 0; id < g.variables.size(); ++id) check_f_shape(f_polynomial_and_gvector(g, static_cast<int>(id)).f);
  }
}

TEST_CASE("F-polynomials and g-vectors do not depend on the mutation path") {
  std::mt19937 rng(99);
  int compared = 0;
  for (auto [label, ell] : {std::pair{"A3", 1}, std::pair{"D4", 1}, std::pair{"A2", 2}}) {
    const Seed s0 = gamma_seed(CartanData::from_label(label), ell);
    ExchangeGraph g = enumerate_exchange_graph(s0);
    for (int walk = 0; walk < 6; ++walk) {
      Seed cur = s0;
      std::vector<int> path;
      const int len = 3 + static_cast<int>(rng() % 8);
      for (int t = 0; t < len; ++t) {
        int k = static_cast<int>(rng() % s0.mutable_count);
        if (!path.empty() && k == path.back()) k = (k + 1) % s0.mutable_count;
        path.push_back(k);
        cur = mutate(cur, k);
      }
      const int vertex = static_cast<int>(rng() % s0.mutable_count);
      const int id = id_of(g, cur.vars[vertex]);
      REQUIRE(id >= 0);
      FGData along = f_polynomial_and_gvector(s0, path, vertex);
      FGData stored = f_polynomial_and_gvector(g, id);
      CHECK(along.f == stored.f);
      CHECK(along.g == stored.g);
      ++compared;
    }
  }
  CHECK(compared >= 10);
}

TEST_CASE("denominator vectors are the almost positive roots") {
  for (const char* label : {"A3", "D4"}) {
    auto c = CartanData::from_label(label);
    const Seed s0 = gamma_seed(c, 1);
    ExchangeGraph g = enumerate_exchange_graph(s0);
    std::set<std::vector<int>> got, want;
    for (const auto& x : g.variables) got.insert(denominator_vector(s0, x));
    for (const auto& r : positive_roots(c)) {
      // Mutable vertex k of the level-1 seed is node k + 1.
      want.insert(r);
    }
    for (int i = 0; i < c.rank(); ++i) {
      std::vector<int> neg(c.rank(), 0);
      neg[i] = -1;
      want.insert(neg);
    }
    CHECK(got == want);
    for (const auto& cl : g.clusters) {
      std::set<std::vector<int>> ds;
      for (int id : cl) ds.insert(denominator_vector(s0, g.variables[id]));
      CHECK(ds.size() == cl.size());
    }
  }
}

TEST_CASE("finite-type classification") {
  CHECK(classify_finite_type(CartanData::from_label("A1"), 1).label == "A1");
  CHECK(classify_finite_type(CartanData::from_label("A1"), 4).label == "A4");
  CHECK(classify_finite_type(CartanData::from_label("A2"), 1).label == "A2");
  CHECK(classify_finite_type(CartanData::from_label("A3"), 1).label == "A3");
  CHECK(classify_finite_type(CartanData::from_label("D4"), 1).label == "D4");
  Classification d4 = classify_finite_type(CartanData::from_label("A2"), 2);
  CHECK(d4.label == "D4");
  CHECK(d4.clusters == 50);
  Classification e6 = classify_finite_type(CartanData::from_label("A3"), 2);
  CHECK(e6.label == "E6");
  CHECK(e6.clusters == 833);
  CHECK(e6.variables == 42);
  CHECK(classify_finite_type(CartanData::from_label("A2"), 3).label == "E6");
  CHECK(classify_finite_type(CartanData::from_label("A3"), 3, 2000).label == "infinite-or-large");
  CHECK_THROWS_AS(classify_finite_type(CartanData::from_label("A3"), 0), InvalidInput);
}
