#pragma once

// Sparse multivariate Laurent polynomials with arbitrary-precision integer
// coefficients. The variable type only needs a strict weak order and ==.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qloop/error.hpp"

namespace qloop {

using Integer = mpz_class;

template <class Var>
class Monomial {
 public:
  using Entry = std::pair<Var, int>;

  Monomial() = default;

  static Monomial variable(const Var& v, int e = 1) {
    Monomial m;
    if (e != 0) m.entries_.emplace_back(v, e);
    return m;
  }

  // Accepts unsorted entries with repeats; merges them and drops zeros.
  static Monomial from_entries(std::vector<Entry> es) {
    std::sort(es.begin(), es.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Monomial m;
    for (const auto& [v, e] : es) {
      if (!m.entries_.empty() && m.entries_.back().first == v)
        m.entries_.back().second += e;
      else
        m.entries_.emplace_back(v, e);
      if (m.entries_.back().second == 0) m.entries_.pop_back();
    }
    return m;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  int exponent(const Var& v) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const Entry& a, const Var& b) { return a.first < b; });
    return (it != entries_.end() && it->first == v) ? it->second : 0;
  }

  Monomial& operator*=(const Monomial& o) {
    std::vector<Entry> out;
    out.reserve(entries_.size() + o.entries_.size());
    auto a = entries_.begin(), ae = entries_.end();
    auto b = o.entries_.begin(), be = o.entries_.end();
    while (a != ae || b != be) {
      if (b == be || (a != ae && a->first < b->first)) {
        out.push_back(*a++);
      } else if (a == ae || b->first < a->first) {
        out.push_back(*b++);
      } else {
        if (int e = a->second + b->second; e != 0) out.emplace_back(a->first, e);
        ++a;
        ++b;
      }
    }
    entries_ = std::move(out);
    return *this;
  }

  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  Monomial inverse() const {
    Monomial m = *this;
    for (auto& e : m.entries_) e.second = -e.second;
    return m;
  }

  friend Monomial operator/(const Monomial& a, const Monomial& b) { return a * b.inverse(); }

  Monomial pow(int k) const {
    if (k == 0) return {};
    Monomial m = *this;
    for (auto& e : m.entries_) e.second *= k;
    return m;
  }

  // True when every exponent is >= 0.
  bool is_polynomial() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.second >= 0; });
  }

  template <class F>
  Monomial map_vars(F f) const {
    std::vector<Entry> es;
    es.reserve(entries_.size());
    for (const auto& [v, e] : entries_) es.emplace_back(f(v), e);
    return from_entries(std::move(es));
  }

  bool operator==(const Monomial&) const = default;

  // Canonical key order (lexicographic on the sorted entry list); used for
  // serialization, not for division.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.entries_ < b.entries_; }

 private:
  std::vector<Entry> entries_;
};

// Lexicographic order on exponent vectors (smaller variables weigh more).
// It is a group order on Z^n, hence compatible with multiplication even for
// negative exponents.
template <class Var>
struct MonomialOrder {
  bool operator()(const Monomial<Var>& a, const Monomial<Var>& b) const {
    auto ia = a.entries().begin(), ea = a.entries().end();
    auto ib = b.entries().begin(), eb = b.entries().end();
    while (ia != ea || ib != eb) {
      if (ib == eb || (ia != ea && ia->first < ib->first)) return ia->second < 0;
      if (ia == ea || ib->first < ia->first) return ib->second > 0;
      if (ia->second != ib->second) return ia->second < ib->second;
      ++ia;
      ++ib;
    }
    return false;
  }
};

template <class Var>
class Laurent {
 public:
  using Mono = Monomial<Var>;
  using TermMap = std::map<Mono, Integer, MonomialOrder<Var>>;

  Laurent() = default;
  Laurent(long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Mono{}, Integer(c));
  }
  Laurent(const Integer& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Mono{}, c);
  }
  explicit Laurent(const Mono& m, const Integer& c = 1) {
    if (c != 0) terms_.emplace(m, c);
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coefficient(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(const Mono& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Laurent operator-() const {
    Laurent r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  // Multiplication by a monomial preserves the term order, so the map is
  // rebuilt with end hints.
  Laurent times(const Mono& m, const Integer& c = 1) const {
    Laurent r;
    if (c == 0) return r;
    for (const auto& [mm, cc] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, cc * c);
    return r;
  }

  Laurent pow(unsigned k) const {
    Laurent r(1L), base = *this;
    while (k) {
      if (k & 1U) r *= base;
      k >>= 1U;
      if (k) base *= base;
    }
    return r;
  }

  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }

  friend bool operator<(const Laurent& a, const Laurent& b) {
    return std::lexicographical_compare(
        a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(), [](const auto& x, const auto& y) {
          if (x.first < y.first) return true;
          if (y.first < x.first) return false;
          return x.second < y.second;
        });
  }

  // Per-variable minimum exponent over all terms, absent variables counting as 0.
  Mono content() const {
    if (terms_.empty()) return {};
    std::map<Var, int> low;
    for (const auto& [m, c] : terms_)
      for (const auto& [v, e] : m.entries()) low.emplace(v, 0);
    for (auto& [v, e] : low) {
      auto it = terms_.begin();
      e = it->first.exponent(v);
      for (++it; it != terms_.end(); ++it) e = std::min(e, it->first.exponent(v));
    }
    std::vector<typename Mono::Entry> es(low.begin(), low.end());
    return Mono::from_entries(std::move(es));
  }

  // Exact quotient in the Laurent ring, or nullopt if the divisor does not
  // divide. Both sides are shifted to polynomials without monomial factors;
  // in that normal form Laurent divisibility is polynomial divisibility, and
  // lex division terminates.
  std::optional<Laurent> divide_exact(const Laurent& d) const {
    if (d.is_zero()) throw InvalidInput("division by the zero polynomial");
    if (is_zero()) return Laurent{};
    const Mono cn = content(), cd = d.content();
    Laurent rem = times(cn.inverse());
    const Laurent d0 = d.times(cd.inverse());
    const auto& [lead_m, lead_c] = *d0.terms_.rbegin();
    Laurent q;
    while (!rem.is_zero()) {
      auto top = std::prev(rem.terms_.end());
      Mono t = top->first / lead_m;
      if (!t.is_polynomial()) return std::nullopt;
      if (!mpz_divisible_p(top->second.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
      Integer qc = top->second / lead_c;
      q.terms_.emplace(t, qc);
      for (const auto& [m, c] : d0.terms_) rem.add_term(m * t, -c * qc);
    }
    return q.times(cn / cd);
  }

  Integer coefficient_sum() const {
    Integer s = 0;
    for (const auto& [m, c] : terms_) s += c;
    return s;
  }

  bool has_positive_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
  }

  // Applies a monomial -> monomial map (must be injective on the support for
  // the result to be meaningful; collisions are summed).
  template <class F>
  auto transform(F f) const {
    using Out = decltype(f(std::declval<const Mono&>()));
    Laurent<typename Out::Entry::first_type> r;
    for (const auto& [m, c] : terms_) r.add_term(f(m), c);
    return r;
  }

  // Terms satisfying a predicate on the monomial.
  template <class P>
  Laurent filter(P pred) const {
    Laurent r;
    for (const auto& [m, c] : terms_)
      if (pred(m)) r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
  }

 private:
  TermMap terms_;
};

}  // namespace qloop
