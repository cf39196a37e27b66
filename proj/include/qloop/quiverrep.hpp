#pragma once

// Representations of acyclic quivers over Q and over F_p: indecomposables
// of Dynkin quivers, Hom/Ext dimensions, generic decompositions and quiver
// Grassmannian point counts.
//
// Vertices are 0-based here. For a quiver built from CartanData, vertex
// i - 1 is node i.

#include <cstdint>
#include <map>
#include <vector>

#include "qloop/cartan.hpp"
#include "qloop/linalg.hpp"

namespace qloop {

using DimVec = std::vector<int>;

struct Arrow {
  int source;
  int target;
  bool operator==(const Arrow&) const = default;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(int vertices, std::vector<Arrow> arrows);

  // Every edge oriented I1 -> I0.
  static Quiver sink_source(const CartanData& c);

  int num_vertices() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  // <d, e> = sum d_i e_i - sum_{a: i -> j} d_i e_j
  long long euler_form(const DimVec& d, const DimVec& e) const;
  // Symmetrized form (d, e) = <d, e> + <e, d>.
  long long symmetric_form(const DimVec& d, const DimVec& e) const;
  // Vertices ordered so that the target of each arrow precedes its source.
  std::vector<int> sinks_first_order() const;
  // Same quiver with every arrow at vertex k reversed (arrow indices kept).
  Quiver reversed_at(int k) const;

  bool operator==(const Quiver&) const = default;

 private:
  int n_ = 0;
  std::vector<Arrow> arrows_;
};

struct QuiverRep {
  Quiver quiver;
  DimVec dims;
  // maps[a] has shape dims[target] x dims[source].
  std::vector<QMatrix> maps;

  void validate() const;
  int total_dimension() const;
};

struct FpQuiverRep {
  Quiver quiver;
  DimVec dims;
  std::vector<FpMatrix> maps;
  std::uint32_t prime = 2;
};

// Nullopt when a denominator vanishes mod p or an arrow map drops rank.
std::optional<FpQuiverRep> reduce_rep(const QuiverRep& m, std::uint32_t p);

QuiverRep zero_rep(const Quiver& q);
QuiverRep simple_rep(const Quiver& q, int vertex);
QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b);

int height(const DimVec& d);
DimVec unit_vector(int n, int i);

// Positive roots of the underlying (Dynkin) graph, sorted by (height, lex).
std::vector<DimVec> positive_roots(const Quiver& q);
std::vector<DimVec> positive_roots(const CartanData& c);
bool is_positive_root(const Quiver& q, const DimVec& d);

// The indecomposable representation with dimension vector beta, built from a
// simple by reflection functors. Integer matrices.
QuiverRep indecomposable_rep(const Quiver& q, const DimVec& beta);

int hom_dim(const QuiverRep& m, const QuiverRep& n);
int ext1_dim(const QuiverRep& m, const QuiverRep& n);

// Multiset of positive roots summing to d whose indecomposables are pairwise
// Ext-orthogonal; sorted by decreasing height.
std::vector<DimVec> generic_decomposition(const Quiver& q, const DimVec& d);

// Number of subrepresentations of dimension nu, for every nu.
std::map<DimVec, Integer> subrep_counts(const FpQuiverRep& m);
Integer grassmannian_count_fq(const FpQuiverRep& m, const DimVec& nu);
Integer count_subrepresentations(const FpQuiverRep& m);

struct GrassmannianCensus {
  std::vector<std::uint32_t> primes;
  std::vector<int> degree_bounds;  // aligned with nus
  std::vector<DimVec> nus;
  std::vector<std::vector<Integer>> counts;        // counts[k][prime index]
  std::vector<std::vector<Integer>> polynomials;   // coefficients, constant first
  std::vector<Integer> euler;                      // value at p = 1
};

// Point counts of every quiver Grassmannian Gr_nu(M) over enough good primes
// to interpolate; throws ConsistencyError if some count is not polynomial.
GrassmannianCensus grassmannian_census(const QuiverRep& m);
Integer grassmannian_euler(const QuiverRep& m, const DimVec& nu);

// (prod_{i in I1} s_i) beta for the Cartan matrix of c.
std::vector<int> reflect_i1(const CartanData& c, const std::vector<int>& beta);

}  // namespace qloop
