#include <functional>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "qloop/linalg.hpp"

using namespace qloop;

namespace {

QMatrix random_q(std::mt19937& rng, int r, int c) {
  std::uniform_int_distribution<int> d(-2, 2);
  QMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = d(rng);
  return m;
}

// Spans of all tuples of vectors in F_p^k, encoded as sorted element sets.
std::set<std::set<int>> brute_subspaces(int k, int p, int r) {
  int n = 1;
  for (int i = 0; i < k; ++i) n *= p;
  auto add = [&](int a, int b) {
    int out = 0, w = 1;
    for (int i = 0; i < k; ++i, a /= p, b /= p, w *= p) out += ((a % p + b % p) % p) * w;
    return out;
  };
  auto scale = [&](int a, int s) {
    int out = 0, w = 1;
    for (int i = 0; i < k; ++i, a /= p, w *= p) out += (a % p) * s % p * w;
    return out;
  };
  std::set<std::set<int>> found;
  std::vector<int> gens(r, 0);
  std::function<void(int)> rec = [&](int idx) {
    if (idx == r) {
      std::set<int> span{0};
      bool grew = true;
      while (grew) {
        grew = false;
        std::set<int> cur = span;
        for (int x : cur)
          for (int g : gens)
            for (int s = 1; s < p; ++s)
              if (span.insert(add(x, scale(g, s))).second) grew = true;
      }
      int size = 1;
      for (int i = 0; i < r; ++i) size *= p;
      if (static_cast<int>(span.size()) == size) found.insert(span);
      return;
    }
    for (int v = 0; v < n; ++v) {
      gens[idx] = v;
      rec(idx + 1);
    }
  };
  rec(0);
  return found;
}

}  // namespace

TEST_CASE("rank-nullity and kernel vectors over Q") {
  std::mt19937 rng(3);
  for (int it = 0; it < 50; ++it) {
    int r = 1 + it % 4, c = 1 + (it * 7) % 5;
    QMatrix m = random_q(rng, r, c);
    Nullspace ns = nullspace(m);
    CHECK(rank(m) + static_cast<int>(ns.basis.size()) == c);
    for (std::size_t k = 0; k < ns.basis.size(); ++k) {
      QMatrix v(c, 1);
      for (int j = 0; j < c; ++j) v.at(j, 0) = ns.basis[k][j];
      CHECK((m * v).is_zero());
      for (std::size_t l = 0; l < ns.free_columns.size(); ++l)
        CHECK(ns.basis[k][ns.free_columns[l]] == (k == l ? 1 : 0));
    }
  }
}

TEST_CASE("rank over F_p matches rank over Q for small integer matrices at large p") {
  std::mt19937 rng(9);
  for (int it = 0; it < 40; ++it) {
    QMatrix m = random_q(rng, 3, 4);
    auto f = reduce_mod(m, 1000003);
    REQUIRE(f.has_value());
    CHECK(rank(*f) == rank(m));
  }
}

TEST_CASE("nullspace rows over F_p are annihilated") {
  std::mt19937 rng(4);
  for (int it = 0; it < 30; ++it) {
    FpMatrix m(2, 4, 5);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 4; ++j) m.at(i, j) = rng() % 5;
    FpMatrix ns = nullspace_rows(m, 4);
    CHECK(ns.rows() + rank(m) == 4);
    FpMatrix prod = m * ns.transpose();
    for (int i = 0; i < prod.rows(); ++i)
      for (int j = 0; j < prod.cols(); ++j) CHECK(prod.at(i, j) == 0);
  }
}

TEST_CASE("subspace enumeration agrees with brute-force spans and Gaussian binomials") {
  for (auto [k, p] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
    std::map<int, int> by_dim;
    for_each_subspace(k, p, [&](const FpMatrix& b) { ++by_dim[b.rows()]; });
    for (int r = 0; r <= k; ++r) {
      CHECK(by_dim[r] == static_cast<int>(brute_subspaces(k, p, r).size()));
      CHECK(gaussian_binomial(k, r, p) == by_dim[r]);
    }
  }
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(5, 0, 7) == 1);
}

TEST_CASE("integer polynomial fitting") {
  std::vector<Integer> xs{2, 3, 5, 7, 11}, ys;
  for (const auto& x : xs) ys.push_back(x * x - 3 * x + 2);
  auto f = fit_integer_polynomial(xs, ys, 3);
  REQUIRE(f.has_value());
  CHECK((*f)[0] == 2);
  CHECK((*f)[1] == -3);
  CHECK((*f)[2] == 1);
  CHECK((*f)[3] == 0);
  ys[4] += 1;
  CHECK(!fit_integer_polynomial(xs, ys, 3).has_value());
}

TEST_CASE("primality and inverses") {
  CHECK(is_prime(2));
  CHECK(is_prime(1000003));
  CHECK(!is_prime(1));
  CHECK(!is_prime(91));
  for (std::uint32_t a = 1; a < 13; ++a) CHECK((static_cast<std::uint64_t>(a) * inverse_mod(a, 13)) % 13 == 1);
}
