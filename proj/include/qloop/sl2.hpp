#pragma once

// Closed forms for quantum affine sl2: Kirillov-Reshetikhin q-characters,
// q-segment factorization of simple modules, and the trigonometric R-matrix.
// Monomials use node 1 only.

#include <array>
#include <vector>

#include "qloop/linalg.hpp"
#include "qloop/ymono.hpp"

namespace qloop {

// The q-segment {q^origin, q^{origin+2}, ..., q^{origin+2k-2}}.
struct Segment {
  int origin = 0;
  int length = 1;
  auto operator<=>(const Segment&) const = default;

  int last() const { return origin + 2 * length - 2; }
  bool contains(const Segment& o) const;
  // Neither contains the other and their union is again a q-segment.
  bool special_position(const Segment& o) const;
};

// chi_q(W_{k,q^s}) = Y_s ... Y_{s+2k-2} (1 + A^{-1}_{s+2k-1}(1 + A^{-1}_{s+2k-3}(1 + ...))).
YPolynomial kr_qchar_sl2(int k, int s);

// Unique multiset of pairwise general-position segments whose union is m.
std::vector<Segment> canonical_segments(const YMonomial& m);

YPolynomial simple_qchar_sl2(const YMonomial& m);

// R(u) on C^2 (x) C^2 at rational (u, q), basis e1e1, e1e2, e2e1, e2e2.
using RMatrix = std::array<std::array<Rational, 4>, 4>;
RMatrix r_matrix_sl2(const Rational& u, const Rational& q);

// R12(u) R13(uv) R23(v) == R23(v) R13(uv) R12(u) as exact 8x8 matrices.
bool verify_yang_baxter(const Rational& u, const Rational& v, const Rational& q);

}  // namespace qloop
