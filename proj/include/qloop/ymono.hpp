#pragma once

// The Laurent ring in the variables Y_{i,q^s} (spectral parameters restricted
// to integral powers of q), the A-monomials, dominance and the level-1
// truncation.

#include <compare>
#include <map>
#include <optional>

#include "qloop/cartan.hpp"
#include "qloop/laurent.hpp"

namespace qloop {

// Variable Y_{node, q^shift}.
struct YKey {
  int node;
  int shift;
  auto operator<=>(const YKey&) const = default;
};

using YMonomial = Monomial<YKey>;
using YPolynomial = Laurent<YKey>;

inline YMonomial y_var(int node, int shift, int e = 1) { return YMonomial::variable({node, shift}, e); }

// Coefficients of fundamental weights; zero entries are not stored.
struct WeightVector {
  std::map<int, long long> coeffs;
  bool operator==(const WeightVector&) const = default;
  WeightVector& operator+=(const WeightVector& o);
  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
};

// Multiset of A-monomials, (node, shift) -> multiplicity.
using AFactorization = std::map<YKey, int>;

// A_{i,q^s} = Y_{i,s+1} Y_{i,s-1} prod_{j~i} Y_{j,s}^{-1}; requires s = xi_i + 1 mod 2.
YMonomial a_monomial(const CartanData& c, int node, int s);
// Same monomial without the parity check (for spectrally shifted q-characters).
YMonomial a_monomial_unchecked(const CartanData& c, int node, int s);
// prod A_{i,s}^{mult}
YMonomial a_power(const CartanData& c, const AFactorization& v, int sign = 1);

bool is_dominant(const YMonomial& m);

// The unique multiset V with numerator / denominator = prod A_{i,s}^{v_{i,s}},
// provided all v are >= 0 (i.e. denominator <= numerator).
std::optional<AFactorization> a_factorize(const CartanData& c, const YMonomial& numerator,
                                          const YMonomial& denominator);

inline bool dominance_leq(const CartanData& c, const YMonomial& lower, const YMonomial& upper) {
  return a_factorize(c, upper, lower).has_value();
}

WeightVector weight(const YMonomial& m);
// Column i of the Cartan matrix, i.e. alpha_i in fundamental weights.
WeightVector simple_root_weight(const CartanData& c, int node);

YPolynomial dominant_terms(const YPolynomial& p);
std::size_t count_dominant(const YPolynomial& p);

// Terms of p whose A-factorization against top only uses A_{i, xi_i + 1}.
YPolynomial truncate_c1(const CartanData& c, const YPolynomial& p, const YMonomial& top);

// Spectral shift Y_{i,s} -> Y_{i,s+ds}.
YMonomial shift(const YMonomial& m, int ds);
YPolynomial shift(const YPolynomial& p, int ds);

// The unique monomial that dominates every other term (checked with
// a_factorize), or nullopt.
std::optional<YMonomial> highest_monomial(const CartanData& c, const YPolynomial& p);

// q-character shape: a highest monomial with coefficient 1, every
// coefficient positive.
bool has_qcharacter_shape(const CartanData& c, const YPolynomial& p);

// Membership of a monomial in M_ell: keys (i, xi_i + 2k) with 0 <= k <= ell.
bool in_level(const CartanData& c, const YMonomial& m, int ell);
// Every key (i, s) satisfies s = xi_i mod 2.
bool in_integral_category(const CartanData& c, const YMonomial& m);

}  // namespace qloop
