#include "qloop/sl2.hpp"

#include <algorithm>
#include <map>

#include "qloop/error.hpp"

namespace qloop {

bool Segment::contains(const Segment& o) const {
  return (o.origin - origin) % 2 == 0 && origin <= o.origin && o.last() <= last();
}

bool Segment::special_position(const Segment& o) const {
  if (contains(o) || o.contains(*this)) return false;
  if ((o.origin - origin) % 2 != 0) return false;
  // The union is a segment iff there is no gap between the two.
  const Segment& lo = origin <= o.origin ? *this : o;
  const Segment& hi = origin <= o.origin ? o : *this;
  return hi.origin <= lo.last() + 2;
}

YPolynomial kr_qchar_sl2(int k, int s) {
  if (k < 0) throw InvalidInput("KR module needs k >= 0");
  YPolynomial out;
  for (int j = 0; j <= k; ++j) {
    std::vector<YMonomial::Entry> es;
    for (int t = 0; t < k - j; ++t) es.push_back({{1, s + 2 * t}, 1});
    for (int t = k - j + 1; t <= k; ++t) es.push_back({{1, s + 2 * t}, -1});
    out.add_term(YMonomial::from_entries(std::move(es)), 1);
  }
  return out;
}

std::vector<Segment> canonical_segments(const YMonomial& m) {
  std::map<int, int> avail;
  for (const auto& [key, e] : m.entries()) {
    if (key.node != 1) throw InvalidInput("sl2 monomials only use node 1");
    if (e < 0) throw InvalidInput("canonical_segments needs a dominant monomial");
    avail[key.shift] = e;
  }
  std::vector<Segment> out;
  while (!avail.empty()) {
    Segment seg{avail.begin()->first, 0};
    for (int s = seg.origin;; s += 2) {
      auto it = avail.find(s);
      if (it == avail.end()) break;
      ++seg.length;
      if (--it->second == 0) avail.erase(it);
    }
    out.push_back(seg);
  }
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = a + 1; b < out.size(); ++b)
      if (out[a].special_position(out[b]))
        throw ConsistencyError("segment decomposition is not in general position");
  std::sort(out.begin(), out.end());
  return out;
}

YPolynomial simple_qchar_sl2(const YMonomial& m) {
  YPolynomial out(1L);
  for (const Segment& seg : canonical_segments(m)) out *= kr_qchar_sl2(seg.length, seg.origin);
  return out;
}

RMatrix r_matrix_sl2(const Rational& u, const Rational& q) {
  const Rational q2 = q * q;
  if (q == 0) throw InvalidInput("q must be nonzero");
  if (u == q2) throw SingularityError("R(u) has a pole at u = q^2 = " + q2.get_str());
  if (u * q2 == 1) throw SingularityError("R(u) is not invertible at u = q^-2 = " + Rational(1 / q2).get_str());
  const Rational den = u - q2;
  RMatrix r{};
  r[0][0] = r[3][3] = 1;
  r[1][1] = r[2][2] = q * (u - 1) / den;
  r[1][2] = (1 - q2) / den;
  r[2][1] = u * (1 - q2) / den;
  return r;
}

namespace {

using M8 = std::array<std::array<Rational, 8>, 8>;

// R acting on tensor factors (a, b) of (C^2)^{(x)3}; basis index 4x0 + 2x1 + x2.
M8 embed(const RMatrix& r, int a, int b) {
  M8 out{};
  for (int col = 0; col < 8; ++col) {
    int bits[3] = {(col >> 2) & 1, (col >> 1) & 1, col & 1};
    const int in = 2 * bits[a] + bits[b];
    for (int o = 0; o < 4; ++o) {
      if (r[o][in] == 0) continue;
      int nb[3] = {bits[0], bits[1], bits[2]};
      nb[a] = o >> 1;
      nb[b] = o & 1;
      out[4 * nb[0] + 2 * nb[1] + nb[2]][col] += r[o][in];
    }
  }
  return out;
}

M8 mul(const M8& x, const M8& y) {
  M8 out{};
  for (int i = 0; i < 8; ++i)
    for (int k = 0; k < 8; ++k) {
      if (x[i][k] == 0) continue;
      for (int j = 0; j < 8; ++j) out[i][j] += x[i][k] * y[k][j];
    }
  return out;
}

}  // namespace

bool verify_yang_baxter(const Rational& u, const Rational& v, const Rational& q) {
  const RMatrix ru = r_matrix_sl2(u, q), ruv = r_matrix_sl2(u * v, q), rv = r_matrix_sl2(v, q);
  const M8 r12 = embed(ru, 0, 1), r13 = embed(ruv, 0, 2), r23 = embed(rv, 1, 2);
  return mul(mul(r12, r13), r23) == mul(mul(r23, r13), r12);
}

}  // namespace qloop
