#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ahull/matrix.hpp"
#include "ahull/numeric.hpp"
#include "ahull/polynomial.hpp"

namespace ahull {

/// Linearly independent n x n matrices spanning a subspace of gl(n, Q).
class MatrixSpan {
 public:
  explicit MatrixSpan(std::size_t n) : n_(n) {}
  /// Throws std::invalid_argument if the basis is dependent or has the wrong shape.
  MatrixSpan(std::size_t n, std::vector<RatMatrix> basis);

  /// Keeps a maximal independent subset of `generators`, in order.
  static MatrixSpan spanned_by(std::size_t n, const std::vector<RatMatrix>& generators);

  std::size_t matrix_size() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RatMatrix>& basis() const { return basis_; }

  bool contains(const RatMatrix& a) const;
  bool contains(const MatrixSpan& other) const;
  bool equals(const MatrixSpan& other) const { return dim() == other.dim() && contains(other); }

  /// Basis in reduced row echelon form with respect to the entry coordinates.
  MatrixSpan canonical() const;

 private:
  std::size_t n_;
  std::vector<RatMatrix> basis_;
};

RatMatrix companion_matrix(const RatPolynomial& f);

/// Monic characteristic polynomial det(xI - X), via Hessenberg reduction over Q.
RatPolynomial char_poly(const RatMatrix& x);
/// Monic minimal polynomial from the first linear dependency among I, X, X^2, ...
RatPolynomial min_poly(const RatMatrix& x);
/// f / gcd(f, f'), made monic.
RatPolynomial squarefree_part(const RatPolynomial& f);

struct IntegralScaling {
  Integer d;
  IntPolynomial poly;
};

/// For monic f of degree n, d = lcm of the coefficient denominators and poly = d^n f(x / d),
/// which is monic and integral. If f is the characteristic polynomial of X, poly is that of dX.
IntegralScaling scale_to_integral(const RatPolynomial& f);

struct JordanDecomposition {
  RatMatrix semisimple;
  RatMatrix nilpotent;
};

/// X = S + N with S semisimple, N nilpotent, SN = NS and both polynomials in X.
JordanDecomposition jordan_decomposition(const RatMatrix& x);

bool is_semisimple(const RatMatrix& x);
bool is_nilpotent(const RatMatrix& x);

/// [I, X, ..., X^t] where t + 1 is the degree of the minimal polynomial.
MatrixSpan power_basis(const RatMatrix& x);

RatMatrix lie_bracket(const RatMatrix& a, const RatMatrix& b);
bool span_contains(const MatrixSpan& s, const RatMatrix& a);
MatrixSpan span_sum(const MatrixSpan& a, const MatrixSpan& b);
MatrixSpan span_intersect(const MatrixSpan& a, const MatrixSpan& b);
/// Smallest subspace containing `s` that is closed under the bracket.
MatrixSpan bracket_closure(const MatrixSpan& s);

/// Entries of a matrix as one coordinate vector (row-major).
RatVector flatten(const RatMatrix& a);
RatMatrix unflatten(const RatVector& v, std::size_t n);

}  // namespace ahull
