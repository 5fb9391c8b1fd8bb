#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ahull/matrix.hpp"
#include "ahull/numeric.hpp"

namespace ahull {

using IntVector = std::vector<Integer>;

/// Row-major integer matrix; rows are lattice generators. The column count is kept even when
/// there are no rows, so an empty basis still knows its ambient dimension.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, IntVector(cols, Integer(0))) {}
  IntMatrix(std::size_t cols, std::vector<IntVector> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_.empty(); }

  Integer& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  IntVector& row(std::size_t i) { return rows_[i]; }
  const IntVector& row(std::size_t i) const { return rows_[i]; }
  const std::vector<IntVector>& row_list() const { return rows_; }

  void append_row(IntVector r);
  IntMatrix transpose() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

  std::string to_string() const;

 private:
  std::size_t cols_ = 0;
  std::vector<IntVector> rows_;
};

/// Matrix over Z/p^k.
struct ModMatrix {
  IntMatrix entries;
  std::uint64_t p = 0;
  unsigned k = 0;

  ModMatrix() = default;
  ModMatrix(IntMatrix m, std::uint64_t p, unsigned k);
  Integer modulus() const;
};

Integer dot(const IntVector& a, const IntVector& b);
Integer norm_squared(const IntVector& v);

/// LLL reduction with parameter delta in (1/4, 1], integral variant. Throws std::invalid_argument
/// on linearly dependent rows.
IntMatrix lll_reduce(const IntMatrix& b, const Rational& delta = Rational(3, 4));

/// Row Hermite normal form: positive pivots, entries above a pivot reduced into [0, pivot),
/// zero rows removed.
IntMatrix hnf(const IntMatrix& b);

/// Strong echelon (Howell) form over Z/p^k: pivots are powers of p, zero rows removed.
ModMatrix howell_form(const ModMatrix& b);

/// Howell-form generators of {v : v B = 0 mod p^k}.
ModMatrix nullspace_mod(const ModMatrix& b);

/// u/v with |u|, v <= floor(sqrt((m - 1) / 2)), gcd(v, m) = 1 and u = a v mod m, if it exists.
std::optional<Rational> rational_reconstruction(const Integer& a, const Integer& m);

/// Basis of {v in Z^m : v B = 0} for an m x n matrix B.
IntMatrix integer_left_kernel(const IntMatrix& b);

/// Z-basis (in HNF) of V cap Z^s where V is the Q-span of the rows.
IntMatrix saturate(const std::vector<RatVector>& rows, std::size_t cols);
IntMatrix saturate(const IntMatrix& rows);

/// True if both generator sets span the same lattice.
bool same_lattice(const IntMatrix& a, const IntMatrix& b);

std::vector<RatVector> to_rational_rows(const IntMatrix& m);

}  // namespace ahull
