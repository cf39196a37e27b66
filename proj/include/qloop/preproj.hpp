#pragma once

// The repetition quiver ZQ on a finite window of spectral parameters, the
// preprojective relations, the injective modules Delta_{i,r}, and
// q-characters of fundamental and standard modules obtained from Euler
// characteristics of their submodule Grassmannians.

#include <map>
#include <vector>

#include "qloop/quiverrep.hpp"
#include "qloop/ymono.hpp"

namespace qloop {

// Vertices (i, r) with r_lo <= r <= r_hi and r = xi_i mod 2; arrows
// (i, r) -> (j, r - 1) for every edge i - j of the Dynkin diagram.
class ZQWindow {
 public:
  ZQWindow(const CartanData& c, int r_lo, int r_hi);

  const CartanData& cartan() const { return c_; }
  int r_lo() const { return lo_; }
  int r_hi() const { return hi_; }
  const std::vector<YKey>& vertices() const { return vertices_; }
  // -1 when (node, shift) is not a vertex of the window.
  int index(const YKey& v) const;
  const Quiver& quiver() const { return quiver_; }
  // Index of the arrow u -> w, or -1.
  int arrow_index(int u, int w) const;
  // Vertices v with a relation sigma_v (v and v - 2 both in the window).
  std::vector<YKey> relation_vertices() const;

 private:
  CartanData c_;
  int lo_, hi_;
  std::vector<YKey> vertices_;
  std::map<YKey, int> index_;
  Quiver quiver_;
  std::map<std::pair<int, int>, int> arrow_index_;
};

// A representation of ZQ on a window satisfying the preprojective relations.
struct PreprojModule {
  ZQWindow window;
  QuiverRep rep;

  // sigma_v acts by zero for every relation vertex v.
  bool satisfies_relations() const;
  std::map<YKey, int> dimensions() const;  // nonzero entries only
};

// The injective hull of the simple at (i, r). Vertices u carry the dual of
// the paths u -> (i, r) modulo the relation ideal.
PreprojModule injective_module(const ZQWindow& w, int node, int r);
// Same on the window [r, r + h].
PreprojModule injective_module(const CartanData& c, int node, int r);

using GradedW = std::map<YKey, int>;
using GradedV = std::map<YKey, int>;

bool is_l_dominant(const CartanData& c, const GradedW& w, const GradedV& v);
// Y^W A^V with A^V = prod A_{j,s}^{-V_j(s)}.
YMonomial y_w_a_v(const CartanData& c, const GradedW& w, const GradedV& v);

// Y_{i,r} sum_d chi(Gr(d, Delta_{i,r})) A^{V(d)}, V_j(s+1) = d_{(j,s)}.
YPolynomial fundamental_qchar(const CartanData& c, int node, int r);
// Y^W sum_d chi(Gr(d, Delta_W)) A^{V(d)} with Delta_W = (+) Delta_{i,r}^{W_i(r)}.
YPolynomial standard_qchar(const CartanData& c, const GradedW& w);

}  // namespace qloop
