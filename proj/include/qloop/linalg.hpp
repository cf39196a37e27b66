#pragma once

// Exact linear algebra over Q (GMP rationals) and over small prime fields.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qloop/laurent.hpp"

namespace qloop {

using Rational = mpq_class;

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static QMatrix identity(int n);
  static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  QMatrix transpose() const;
  bool is_zero() const;
  bool operator==(const QMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

int rank(QMatrix m);

// Basis of {x : m x = 0}. Vector k has a 1 at free_columns[k] and zeros at
// every other free column, so coordinates of a kernel vector in this basis
// are just its entries at the free columns.
struct Nullspace {
  std::vector<std::vector<Rational>> basis;
  std::vector<int> free_columns;
};
Nullspace nullspace(QMatrix m);

// Rescale a rational vector to a primitive integer vector on the same line.
std::vector<Rational> primitive_integer_vector(const std::vector<Rational>& v);

// Matrices over F_p, p < 2^31.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(int rows, int cols, std::uint32_t p)
      : rows_(rows), cols_(cols), p_(p), a_(static_cast<std::size_t>(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint32_t prime() const { return p_; }
  std::uint32_t& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::uint32_t at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
  FpMatrix transpose() const;
  // Rows of a over rows of b.
  static FpMatrix stack(const FpMatrix& a, const FpMatrix& b);

 private:
  int rows_ = 0, cols_ = 0;
  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> a_;
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);
int rank(FpMatrix m);
// Reduced row echelon form; returns pivot columns.
std::vector<int> rref(FpMatrix& m);
// Rows form a basis of {x : m x = 0}; result has cols = m.cols().
FpMatrix nullspace_rows(const FpMatrix& m, int cols);

// Reduction of a rational matrix modulo p; nullopt if a denominator vanishes.
std::optional<FpMatrix> reduce_mod(const QMatrix& m, std::uint32_t p);

// Visits every subspace of F_p^k, each given by an RREF basis (r x k).
void for_each_subspace(int k, std::uint32_t p, const std::function<void(const FpMatrix&)>& visit);

// Number of r-dimensional subspaces of F_p^k (Gaussian binomial at p).
Integer gaussian_binomial(int k, int r, std::uint32_t p);

bool is_prime(std::uint32_t n);

// Fits an integer polynomial of degree <= degree through (xs, ys) using the
// first degree+1 points and checks the rest. Returns coefficients (constant
// first) or nullopt when the data is not an integer polynomial of that degree.
std::optional<std::vector<Integer>> fit_integer_polynomial(const std::vector<Integer>& xs,
                                                           const std::vector<Integer>& ys, int degree);

}  // namespace qloop
