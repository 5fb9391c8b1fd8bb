#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "ahull/foundations.hpp"
#include "ahull/lattice.hpp"

namespace ahull::testing {

/// Oracles that share no code with the library paths they check.

/// Characteristic polynomial by the Faddeev-LeVerrier recurrence.
RatPolynomial faddeev_leverrier(const RatMatrix& a);

/// Exact Gram-Schmidt: mu coefficients and squared norms of b*_i.
struct GramSchmidt {
  std::vector<std::vector<Rational>> mu;
  std::vector<Rational> norms;
};
GramSchmidt gram_schmidt(const IntMatrix& b);
bool is_size_reduced(const GramSchmidt& gs);
bool satisfies_lovasz(const GramSchmidt& gs, const Rational& delta);

/// Squared length of a shortest nonzero lattice vector, by Fincke-Pohst enumeration.
Integer shortest_vector_norm(const IntMatrix& b);

/// All vectors of the Z/p^k-module generated by `rows`, by closure.
std::set<IntVector> module_span(const IntMatrix& rows, const Integer& modulus);
/// All v in (Z/m)^r with v B = 0 mod m, by exhaustive search.
std::set<IntVector> brute_force_left_kernel(const IntMatrix& b, const Integer& modulus);

RatMatrix random_rational_matrix(std::mt19937_64& rng, std::size_t n, int num_range, int den_range);
/// Random matrix with repeated eigenvalues and nontrivial nilpotent part, conjugated by a random
/// unimodular matrix.
RatMatrix random_jordan_matrix(std::mt19937_64& rng, std::size_t n);
IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long range);

/// f(x + c).
RatPolynomial shift(const RatPolynomial& f, const Rational& c);

}  // namespace ahull::testing
