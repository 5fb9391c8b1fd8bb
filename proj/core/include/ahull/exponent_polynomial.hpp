#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ahull/numeric.hpp"

namespace ahull {

/// Sparse polynomial in x_1..x_n with integer coefficients.
class ExponentPolynomial {
 public:
  struct Term {
    Integer coefficient;
    std::vector<unsigned> exponents;
  };

  explicit ExponentPolynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  /// Combines like terms and drops zero coefficients. Throws on exponent vectors of the wrong length.
  ExponentPolynomial(std::size_t nvars, std::vector<Term> terms);

  static ExponentPolynomial constant(std::size_t nvars, const Integer& c);
  /// x_{i+1} (0-based index).
  static ExponentPolynomial variable(std::size_t nvars, std::size_t i, unsigned power = 1);

  std::size_t num_vars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned total_degree() const;

  friend ExponentPolynomial operator+(const ExponentPolynomial& a, const ExponentPolynomial& b);
  friend ExponentPolynomial operator-(const ExponentPolynomial& a, const ExponentPolynomial& b);
  friend ExponentPolynomial operator*(const ExponentPolynomial& a, const ExponentPolynomial& b);
  friend ExponentPolynomial operator*(const Integer& c, const ExponentPolynomial& a);
  friend bool operator==(const ExponentPolynomial& a, const ExponentPolynomial& b);

  /// Integer linear combination sum_j e_j * g_j.
  static ExponentPolynomial combination(const std::vector<Integer>& e,
                                        const std::vector<ExponentPolynomial>& g);

  std::string to_string() const;

 private:
  void normalize();

  std::size_t nvars_;
  std::vector<Term> terms_;
};

}  // namespace ahull
