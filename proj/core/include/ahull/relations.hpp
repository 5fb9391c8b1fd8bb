#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ahull/exponent_polynomial.hpp"
#include "ahull/galois.hpp"
#include "ahull/lattice.hpp"
#include "ahull/padic.hpp"

namespace ahull {

enum class Mode { proven, heuristic };

std::string to_string(Mode m);
/// Throws std::invalid_argument for anything but "proven" or "heuristic".
Mode parse_mode(std::string_view text);

enum class Route { lll, galois };

std::string to_string(Route r);
Route parse_route(std::string_view text);

struct EngineOptions {
  Mode mode = Mode::proven;
  std::optional<std::uint64_t> prime;
  unsigned prime_search_limit = 20;
  std::uint64_t seed = 0;
  Rational delta = Rational(3, 4);
  /// Order of the Galois group of f, when known; otherwise n! is used as degree bound.
  std::optional<Integer> group_order;
  /// Requests needing more p-adic digits than this throw PrecisionError.
  unsigned long max_precision = 2000000;
};

/// Raised when a certified computation would need more precision than allowed.
class PrecisionError : public std::runtime_error {
 public:
  PrecisionError(const std::string& what, unsigned long required)
      : std::runtime_error(what), required_(required) {}
  unsigned long required_precision() const { return required_; }

 private:
  unsigned long required_;
};

/// The polynomial, its prime and lazily lifted roots. Roots keep the labeling fixed by the first
/// lift at every precision. Not safe for concurrent use.
class RootContext {
 public:
  /// Throws std::invalid_argument if f is not monic and squarefree, or a fixed prime is inadmissible.
  RootContext(IntPolynomial f, EngineOptions options = {});

  const IntPolynomial& polynomial() const { return f_; }
  const EngineOptions& options() const { return options_; }
  const PrimeSelection& selection() const { return selection_; }
  std::size_t degree() const { return static_cast<std::size_t>(f_.degree()); }

  ApproxRoots roots_at(unsigned k);
  Integer root_bound() const;
  Integer degree_bound() const;

 private:
  IntPolynomial f_;
  EngineOptions options_;
  PrimeSelection selection_;
  std::optional<ApproxRoots> top_;
};

/// Certified bounds behind a relation computation. `root_bound` bounds all complex roots,
/// `embedding` every complex embedding of every target, `r` the degree of the splitting field,
/// `N` the sup norm of some basis of the relation lattice, `k` the final p-adic precision and
/// `lambda` the LLL weight.
struct BoundData {
  Integer root_bound;
  Integer embedding;
  Integer r;
  Integer N;
  Integer lambda;
  unsigned k = 0;
  std::uint64_t p = 0;
  unsigned f_p = 0;
  std::size_t s = 0;
};

struct RelationBasis {
  IntMatrix basis;
  Mode mode = Mode::proven;
  std::string certification;
  BoundData bounds;
  unsigned verify_precision = 0;
  Route route = Route::lll;
  bool fell_back = false;
  unsigned iterations = 0;
  std::size_t subset_size = 0;
};

struct ZeroTest {
  bool zero = false;
  Mode mode = Mode::proven;
  unsigned precision = 0;
  Integer bound;
  std::optional<unsigned> valuation;
};

Integer complex_root_bound(const IntPolynomial& f);
Integer embedding_bound(const ExponentPolynomial& g, const Integer& root_bound);
Integer degree_bound(const IntPolynomial& f, const std::optional<Integer>& group_order);
Integer masser_bound(std::size_t s, const Integer& m);

/// Minimal k >= 1 with p^(k f_p) > bound^r.
unsigned proven_precision(const Integer& bound, const Integer& r, std::uint64_t p, unsigned f_p,
                          unsigned long max_precision = 2000000);

/// Proven mode picks the certified precision; heuristic mode uses `k` (or a small default).
ZeroTest is_zero(const ExponentPolynomial& g, RootContext& ctx, Mode mode, std::optional<unsigned> k = std::nullopt);

RelationBasis find_relations_lll(const std::vector<ExponentPolynomial>& targets, RootContext& ctx, Mode mode);
RelationBasis find_relations_galois(const std::vector<ExponentPolynomial>& targets, RootContext& ctx,
                                    const PermGroup& group, Mode mode);

/// Targets x_1, ..., x_n.
std::vector<ExponentPolynomial> root_targets(std::size_t n);

/// Checks every generator against the heuristic relation lattice of the roots.
bool validate_group(const PermGroup& group, RootContext& ctx);

}  // namespace ahull
