#pragma once

// Skew-symmetric cluster algebras with frozen variables: seeds, mutation,
// exchange graphs of finite type, F-polynomials, g-vectors and denominator
// vectors. Cluster variables are Laurent polynomials in the initial cluster;
// Laurent variable k is seed vertex k (mutable vertices first).

#include <cstdint>
#include <string>
#include <vector>

#include "qloop/cartan.hpp"
#include "qloop/laurent.hpp"
#include "qloop/ymono.hpp"

namespace qloop {

using ClusterLaurent = Laurent<int>;
using ExchangeMatrix = std::vector<std::vector<int>>;

struct Seed {
  int mutable_count = 0;
  // Square over all vertices: b[i][j] = #(i -> j) - #(j -> i).
  ExchangeMatrix b;
  // Current variable at each vertex.
  std::vector<ClusterLaurent> vars;
  // Optional (node, spectral shift) label per vertex.
  std::vector<YKey> labels;

  int size() const { return static_cast<int>(b.size()); }
  int frozen_count() const { return size() - mutable_count; }
  bool operator==(const Seed& o) const { return b == o.b && vars == o.vars; }
};

// Initial seed for a quiver with the first mutable_count vertices mutable.
Seed make_seed(const ExchangeMatrix& b, int mutable_count);

// Vertices (i, xi_i + 2k), 0 <= k <= ell. Mutable ones (k >= 1) come first,
// ordered by (k, i); the frozen k = 0 vertices follow in node order. Arrows:
// (i, r) -> (j, r - 1) for adjacent i, j and (i, r) -> (i, r + 2).
Seed gamma_seed(const CartanData& c, int ell);

// Matrix mutation and the exchange relation at a mutable vertex.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k);
Seed mutate(const Seed& s, int k);

struct ExchangeGraph {
  Seed initial;
  // Non-frozen cluster variables; ids 0..m-1 are the initial ones.
  std::vector<ClusterLaurent> variables;
  // variables[id] is the variable at vertex_of[id] after applying path_of[id].
  std::vector<std::vector<int>> path_of;
  std::vector<int> vertex_of;
  // Each cluster as a sorted list of variable ids; clusters[0] is initial.
  std::vector<std::vector<int>> clusters;
  // neighbors[c][k]: cluster reached from c by mutating at mutable vertex k
  // of the seed through which c was first reached.
  std::vector<std::vector<int>> neighbors;
};

// Breadth-first closure under mutation; clusters are identified as sets of
// variables. Throws CapExceeded once more than cap clusters are found.
ExchangeGraph enumerate_exchange_graph(const Seed& s, std::size_t cap = 100000);

struct FGData {
  ClusterLaurent f;  // variable k is v_{k+1}
  std::vector<int> g;
};

// Reruns the mutation path with principal coefficients at s0 and reads off
// the F-polynomial and g-vector of the variable at `vertex`.
FGData f_polynomial_and_gvector(const Seed& s0, const std::vector<int>& path, int vertex);
FGData f_polynomial_and_gvector(const ExchangeGraph& g, int id);

// d_i = -(minimal exponent of z_i), over the mutable initial variables.
std::vector<int> denominator_vector(const Seed& s0, const ClusterLaurent& x);

// Id of the variable with the given denominator vector (a negative simple
// root picks the initial variable).
int variable_by_denominator(const ExchangeGraph& g, const std::vector<int>& beta);

struct Classification {
  std::string label;  // "A3", "D4", ..., "infinite-or-large" or "unknown"
  std::size_t clusters = 0;
  std::size_t variables = 0;
  int rank = 0;
};
// Cluster type of the algebra with initial seed gamma_seed(c, ell), from the
// (rank, variable count, cluster count) fingerprint.
Classification classify_finite_type(const CartanData& c, int ell, std::size_t cap = 100000);
Classification classify_seed(const Seed& s, std::size_t cap = 100000);

}  // namespace qloop
