#include "qloop/linalg.hpp"

#include <numeric>

#include "qloop/error.hpp"

namespace qloop {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows, int cols) {
  QMatrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool QMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x == 0; });
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix shape mismatch in product");
  QMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("matrix shape mismatch in sum");
  QMatrix r = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) += b.at(i, j);
  return r;
}

namespace {

// In-place RREF over Q; returns pivot columns.
std::vector<int> rref_q(QMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(piv, c), m.at(row, c));
    Rational inv = 1 / m.at(row, col);
    for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Rational f = m.at(r, col);
      for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(QMatrix m) { return static_cast<int>(rref_q(m).size()); }

Nullspace nullspace(QMatrix m) {
  const auto pivots = rref_q(m);
  Nullspace ns;
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), f);
    ns.basis.push_back(std::move(v));
    ns.free_columns.push_back(f);
  }
  return ns;
}

std::vector<Rational> primitive_integer_vector(const std::vector<Rational>& v) {
  mpz_class l = 1, g = 0;
  for (const auto& x : v) l = lcm(l, mpz_class(x.get_den()));
  std::vector<Rational> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i] * l;
    g = gcd(g, mpz_class(out[i].get_num()));
  }
  if (g != 0 && g != 1)
    for (auto& x : out) x /= g;
  return out;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix shape mismatch in product");
  const std::uint64_t p = a.prime();
  FpMatrix r(a.rows(), b.cols(), a.prime());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      std::uint64_t s = 0;
      for (int k = 0; k < a.cols(); ++k) s = (s + std::uint64_t{a.at(i, k)} * b.at(k, j)) % p;
      r.at(i, j) = static_cast<std::uint32_t>(s);
    }
  return r;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(cols_, rows_, p_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

FpMatrix FpMatrix::stack(const FpMatrix& a, const FpMatrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw InvalidInput("matrix shape mismatch in stack");
  FpMatrix s(a.rows() + b.rows(), a.cols(), a.prime());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) s.at(r, c) = a.at(r, c);
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) s.at(a.rows() + r, c) = b.at(r, c);
  return s;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) throw InvalidInput("element not invertible modulo p");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::vector<int> rref(FpMatrix& m) {
  const std::uint64_t p = m.prime();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(piv, c), m.at(row, c));
    const std::uint64_t inv = inverse_mod(m.at(row, col), m.prime());
    for (int c = col; c < m.cols(); ++c) m.at(row, c) = static_cast<std::uint32_t>(m.at(row, c) * inv % p);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const std::uint64_t f = m.at(r, col);
      for (int c = col; c < m.cols(); ++c)
        m.at(r, c) = static_cast<std::uint32_t>((m.at(r, c) + (p - f) * m.at(row, c)) % p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(FpMatrix m) { return static_cast<int>(rref(m).size()); }

FpMatrix nullspace_rows(const FpMatrix& m, int cols) {
  FpMatrix a = m;
  const std::uint32_t p = m.prime();
  if (a.rows() == 0) {
    FpMatrix id(cols, cols, p);
    for (int i = 0; i < cols; ++i) id.at(i, i) = 1;
    return id;
  }
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  FpMatrix out(cols - static_cast<int>(pivots.size()), cols, p);
  int k = 0;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    out.at(k, f) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const std::uint32_t x = a.at(static_cast<int>(r), f);
      out.at(k, pivots[r]) = x == 0 ? 0 : p - x;
    }
    ++k;
  }
  return out;
}

std::optional<FpMatrix> reduce_mod(const QMatrix& m, std::uint32_t p) {
  FpMatrix r(m.rows(), m.cols(), p);
  const mpz_class pz = p;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const Rational& x = m.at(i, j);
      mpz_class den = x.get_den() % pz;
      if (den == 0) return std::nullopt;
      mpz_class num = x.get_num() % pz;
      if (num < 0) num += pz;
      const auto n = static_cast<std::uint32_t>(num.get_ui());
      const auto d = static_cast<std::uint32_t>(den.get_ui());
      r.at(i, j) = static_cast<std::uint32_t>(std::uint64_t{n} * inverse_mod(d, p) % p);
    }
  return r;
}

void for_each_subspace(int k, std::uint32_t p, const std::function<void(const FpMatrix&)>& visit) {
  // Choose pivot columns, then fill the free entries (right of the pivot, not
  // in a pivot column) with every element of F_p.
  for (int r = 0; r <= k; ++r) {
    std::vector<int> piv(r);
    std::iota(piv.begin(), piv.end(), 0);
    while (true) {
      std::vector<std::pair<int, int>> free;
      std::vector<bool> is_piv(k, false);
      for (int c : piv) is_piv[c] = true;
      for (int row = 0; row < r; ++row)
        for (int c = piv[row] + 1; c < k; ++c)
          if (!is_piv[c]) free.emplace_back(row, c);
      FpMatrix m(r, k, p);
      for (int row = 0; row < r; ++row) m.at(row, piv[row]) = 1;
      std::vector<std::uint32_t> digits(free.size(), 0);
      while (true) {
        for (std::size_t t = 0; t < free.size(); ++t) m.at(free[t].first, free[t].second) = digits[t];
        visit(m);
        std::size_t t = 0;
        while (t < digits.size() && ++digits[t] == p) digits[t++] = 0;
        if (t == digits.size()) break;
      }
      // next combination of r columns out of k
      int i = r - 1;
      while (i >= 0 && piv[i] == k - r + i) --i;
      if (i < 0) break;
      ++piv[i];
      for (int j = i + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
}

Integer gaussian_binomial(int k, int r, std::uint32_t p) {
  if (r < 0 || r > k) return 0;
  mpz_class num = 1, den = 1, pz = p;
  for (int i = 0; i < r; ++i) {
    mpz_class a, b;
    mpz_pow_ui(a.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(k - i));
    mpz_pow_ui(b.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(i + 1));
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::vector<Integer>> fit_integer_polynomial(const std::vector<Integer>& xs,
                                                           const std::vector<Integer>& ys, int degree) {
  if (xs.size() != ys.size() || static_cast<int>(xs.size()) < degree + 1)
    throw InvalidInput("not enough interpolation points");
  const int n = degree + 1;
  // Vandermonde solve over Q.
  QMatrix a(n, n + 1);
  for (int i = 0; i < n; ++i) {
    Rational pw = 1;
    for (int j = 0; j < n; ++j) {
      a.at(i, j) = pw;
      pw *= Rational(xs[i]);
    }
    a.at(i, n) = Rational(ys[i]);
  }
  QMatrix red = a;
  rref_q(red);
  std::vector<Integer> coeffs(n);
  for (int j = 0; j < n; ++j) {
    const Rational& c = red.at(j, n);
    if (c.get_den() != 1) return std::nullopt;
    coeffs[j] = c.get_num();
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Integer v = 0, pw = 1;
    for (int j = 0; j < n; ++j) {
      v += coeffs[j] * pw;
      pw *= xs[i];
    }
    if (v != ys[i]) return std::nullopt;
  }
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

}  // namespace qloop
