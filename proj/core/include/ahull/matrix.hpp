#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ahull/numeric.hpp"
#include "ahull/polynomial.hpp"

namespace ahull {

/// Dense row-major matrix over Q. Rectangular shapes are allowed for linear-system work;
/// the Lie-algebraic operations check squareness themselves.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  explicit RatMatrix(const std::vector<std::vector<Rational>>& rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix zero(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }
  /// Single 1 at (i, j).
  static RatMatrix unit(std::size_t n, std::size_t i, std::size_t j);
  static RatMatrix diagonal(const std::vector<Rational>& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Rational>& entries() const { return data_; }

  Rational trace() const;
  RatMatrix transpose() const;
  /// Throws std::domain_error when singular or non-square.
  RatMatrix inverse() const;
  RatMatrix pow(unsigned long e) const;

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& c, RatMatrix a);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator<(const RatMatrix& a, const RatMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

using RatVector = std::vector<Rational>;

/// In-place reduced row echelon form. Returns the pivot column of each nonzero row;
/// zero rows are removed.
std::vector<std::size_t> reduce_rows(std::vector<RatVector>& rows);

std::size_t rank(std::vector<RatVector> rows);

/// Basis of {x : A x = 0} for the row list A (all rows of length `cols`).
std::vector<RatVector> right_kernel(std::vector<RatVector> rows, std::size_t cols);

/// True iff v lies in the row span of `rows`.
bool in_row_span(const std::vector<RatVector>& rows, const RatVector& v);

/// Exact determinant by fraction-free elimination over Q.
Rational determinant(const RatMatrix& a);

/// f(A) by Horner's rule.
RatMatrix evaluate(const RatPolynomial& f, const RatMatrix& a);

}  // namespace ahull
