#include "qloop/ymono.hpp"

#include <limits>

#include "qloop/error.hpp"

namespace qloop {

WeightVector& WeightVector::operator+=(const WeightVector& o) {
  for (const auto& [i, x] : o.coeffs) {
    auto& slot = coeffs[i];
    slot += x;
    if (slot == 0) coeffs.erase(i);
  }
  return *this;
}

YMonomial a_monomial_unchecked(const CartanData& c, int node, int s) {
  c.check_node(node);
  std::vector<YMonomial::Entry> es{{{node, s + 1}, 1}, {{node, s - 1}, 1}};
  for (int j : c.neighbors(node)) es.push_back({{j, s}, -1});
  return YMonomial::from_entries(std::move(es));
}

YMonomial a_monomial(const CartanData& c, int node, int s) {
  c.check_node(node);
  if (((s - c.xi(node) - 1) % 2 + 2) % 2 != 0)
    throw InvalidInput("A_{" + std::to_string(node) + "," + std::to_string(s) +
                       "} violates the parity s = xi_i + 1 (mod 2)");
  return a_monomial_unchecked(c, node, s);
}

YMonomial a_power(const CartanData& c, const AFactorization& v, int sign) {
  YMonomial m;
  for (const auto& [key, mult] : v) m *= a_monomial_unchecked(c, key.node, key.shift).pow(sign * mult);
  return m;
}

bool is_dominant(const YMonomial& m) { return m.is_polynomial(); }

std::optional<AFactorization> a_factorize(const CartanData& c, const YMonomial& numerator,
                                          const YMonomial& denominator) {
  const YMonomial ratio = numerator / denominator;
  if (ratio.is_one()) return AFactorization{};
  int smin = std::numeric_limits<int>::max(), smax = std::numeric_limits<int>::min();
  for (const auto& [key, e] : ratio.entries()) {
    if (key.node < 1 || key.node > c.rank()) return std::nullopt;
    smin = std::min(smin, key.shift);
    smax = std::max(smax, key.shift);
  }
  // Peel from the top: the exponent of Y_{i,s+1} determines v_{i,s} once all
  // v at larger spectral parameters are known. The system is triangular, so
  // the solution (if any) is unique.
  std::map<YKey, long long> v;
  auto get = [&](int i, int s) -> long long {
    auto it = v.find({i, s});
    return it == v.end() ? 0 : it->second;
  };
  for (int s = smax - 1; s >= smin + 1; --s)
    for (int i = 1; i <= c.rank(); ++i) {
      long long x = ratio.exponent({i, s + 1}) - get(i, s + 2);
      for (int j : c.neighbors(i)) x += get(j, s + 1);
      if (x != 0) v[{i, s}] = x;
    }
  AFactorization out;
  for (const auto& [key, x] : v) {
    if (x < 0) return std::nullopt;
    out[key] = static_cast<int>(x);
  }
  if (a_power(c, out) != ratio) return std::nullopt;
  return out;
}

WeightVector weight(const YMonomial& m) {
  WeightVector w;
  for (const auto& [key, e] : m.entries()) w += WeightVector{{{key.node, e}}};
  return w;
}

WeightVector simple_root_weight(const CartanData& c, int node) {
  c.check_node(node);
  WeightVector w;
  for (int j = 1; j <= c.rank(); ++j)
    if (c.entry(j, node) != 0) w.coeffs[j] = c.entry(j, node);
  return w;
}

YPolynomial dominant_terms(const YPolynomial& p) {
  return p.filter([](const YMonomial& m) { return is_dominant(m); });
}

std::size_t count_dominant(const YPolynomial& p) {
  std::size_t n = 0;
  for (const auto& [m, coeff] : p.terms())
    if (is_dominant(m)) ++n;
  return n;
}

YPolynomial truncate_c1(const CartanData& c, const YPolynomial& p, const YMonomial& top) {
  YPolynomial out;
  for (const auto& [m, coeff] : p.terms()) {
    auto f = a_factorize(c, top, m);
    if (!f) throw InvalidInput("truncate_c1: a term is not below the given top monomial");
    bool keep = true;
    for (const auto& [key, mult] : *f)
      if (key.shift != c.xi(key.node) + 1) {
        keep = false;
        break;
      }
    if (keep) out.add_term(m, coeff);
  }
  return out;
}

YMonomial shift(const YMonomial& m, int ds) {
  return m.map_vars([ds](const YKey& k) { return YKey{k.node, k.shift + ds}; });
}

YPolynomial shift(const YPolynomial& p, int ds) {
  if (ds == 0) return p;
  return p.transform([ds](const YMonomial& m) { return shift(m, ds); });
}

std::optional<YMonomial> highest_monomial(const CartanData& c, const YPolynomial& p) {
  auto dominates_all = [&](const YMonomial& cand) {
    for (const auto& [m, coeff] : p.terms())
      if (!(m == cand) && !a_factorize(c, cand, m)) return false;
    return true;
  };
  for (const auto& [m, coeff] : p.terms())
    if (is_dominant(m) && dominates_all(m)) return m;
  for (const auto& [m, coeff] : p.terms())
    if (!is_dominant(m) && dominates_all(m)) return m;
  return std::nullopt;
}

bool has_qcharacter_shape(const CartanData& c, const YPolynomial& p) {
  if (p.is_zero() || !p.has_positive_coefficients()) return false;
  auto top = highest_monomial(c, p);
  return top && p.coefficient(*top) == 1;
}

bool in_level(const CartanData& c, const YMonomial& m, int ell) {
  for (const auto& [key, e] : m.entries()) {
    if (key.node < 1 || key.node > c.rank()) return false;
    const int k2 = key.shift - c.xi(key.node);
    if (k2 < 0 || k2 % 2 != 0 || k2 / 2 > ell) return false;
  }
  return true;
}

bool in_integral_category(const CartanData& c, const YMonomial& m) {
  for (const auto& [key, e] : m.entries()) {
    if (key.node < 1 || key.node > c.rank()) return false;
    if (((key.shift - c.xi(key.node)) % 2 + 2) % 2 != 0) return false;
  }
  return true;
}

}  // namespace qloop
