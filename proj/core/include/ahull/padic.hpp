#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ahull/exponent_polynomial.hpp"
#include "ahull/numeric.hpp"
#include "ahull/polynomial.hpp"

namespace ahull {

using Permutation = std::vector<std::size_t>;

struct PrimeSelection {
  std::uint64_t p = 0;
  unsigned f_p = 0;
  std::vector<unsigned> factor_degrees;
};

/// (Z/p^k)[t]/(omega) with omega monic of degree f and irreducible mod p.
class UnramifiedRing {
 public:
  UnramifiedRing(std::uint64_t p, unsigned k, IntPolynomial omega);

  std::uint64_t p() const { return p_; }
  unsigned precision() const { return k_; }
  const Integer& modulus() const { return modulus_; }
  unsigned degree() const { return static_cast<unsigned>(omega_.degree()); }
  const IntPolynomial& omega() const { return omega_; }

  /// Same omega, different precision.
  std::shared_ptr<const UnramifiedRing> with_precision(unsigned k) const;

 private:
  std::uint64_t p_;
  unsigned k_;
  Integer modulus_;
  IntPolynomial omega_;
};

using RingPtr = std::shared_ptr<const UnramifiedRing>;

class PadicElement {
 public:
  explicit PadicElement(RingPtr ring);
  PadicElement(RingPtr ring, std::vector<Integer> coefficients);
  static PadicElement from_integer(RingPtr ring, const Integer& c);
  /// The generator t of the ring over Z/p^k.
  static PadicElement generator(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Integer>& coefficients() const { return c_; }
  bool is_zero() const;

  PadicElement& operator+=(const PadicElement& o);
  PadicElement& operator-=(const PadicElement& o);
  friend PadicElement operator+(PadicElement a, const PadicElement& b) { return a += b; }
  friend PadicElement operator-(PadicElement a, const PadicElement& b) { return a -= b; }
  friend PadicElement operator*(const PadicElement& a, const PadicElement& b);
  friend PadicElement operator*(const Integer& c, const PadicElement& a);
  friend bool operator==(const PadicElement& a, const PadicElement& b);

  PadicElement pow(const Integer& e) const;
  /// Throws std::domain_error if the element is not a unit (zero mod p).
  PadicElement inverse() const;
  /// Re-expresses the element in a ring with the same omega and any precision; lowering
  /// truncates, raising keeps the representative.
  PadicElement in_ring(const RingPtr& other) const;

 private:
  RingPtr ring_;
  std::vector<Integer> c_;
};

/// Largest m <= k with p^m | x, or nullopt ("at least k") when x vanishes at full precision.
std::optional<unsigned> valuation(const PadicElement& x);
std::optional<unsigned> valuation(const Integer& x, std::uint64_t p, unsigned k);

/// True if p does not divide the leading coefficient and f is squarefree mod p.
bool is_admissible_prime(const IntPolynomial& f, std::uint64_t p);

/// Degrees of the irreducible factors of f mod p (distinct-degree factorization), ascending.
/// Throws std::invalid_argument if f is not squarefree mod p.
std::vector<unsigned> factor_degrees(const IntPolynomial& f, std::uint64_t p);

/// Scans the first `search_limit` admissible primes above `floor` (default deg f) and keeps the
/// one with the smallest f_p, ties going to the smaller prime. Throws std::runtime_error if none.
PrimeSelection select_prime(const IntPolynomial& f, unsigned search_limit = 20,
                            std::optional<std::uint64_t> floor = std::nullopt);
PrimeSelection prime_selection_for(const IntPolynomial& f, std::uint64_t p);

/// Irreducible defining polynomial found by seeded random search; omega = t when f_p = 1.
RingPtr build_unramified(std::uint64_t p, unsigned f_p, unsigned k, std::uint64_t seed = 0);

/// Approximations of the roots of f in the ring, labeled once by residue-field order.
struct ApproxRoots {
  RingPtr ring;
  std::vector<PadicElement> roots;
  IntPolynomial f;

  unsigned precision() const { return ring->precision(); }
  std::size_t size() const { return roots.size(); }
  /// Same labeling, lower precision.
  ApproxRoots truncate(unsigned k) const;
};

/// Throws std::invalid_argument if f is not monic/squarefree mod p, std::runtime_error if f does
/// not split in the ring.
ApproxRoots lift_roots(const IntPolynomial& f, const RingPtr& ring, std::uint64_t seed = 0);
ApproxRoots increase_precision(const ApproxRoots& roots, unsigned k);

/// g(alpha_{sigma(1)}, ..., alpha_{sigma(n)}); sigma defaults to the identity.
PadicElement eval_target(const ExponentPolynomial& g, const ApproxRoots& roots,
                         const Permutation* sigma = nullptr);

/// sigma with alpha_{sigma(i)} = alpha_i^p mod p (0-based).
Permutation frobenius_perm(const ApproxRoots& roots);

/// Rational integer represented by a ring element with vanishing t-part, lifted symmetrically
/// into (-p^k/2, p^k/2]. nullopt if some higher coefficient is nonzero.
std::optional<Integer> symmetric_integer(const PadicElement& x);

/// Irreducibility over Q of a monic integral polynomial, by recombining p-adic roots.
bool is_irreducible(const IntPolynomial& f, std::uint64_t seed = 0);

}  // namespace ahull
