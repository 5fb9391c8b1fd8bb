#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ahull/foundations.hpp"
#include "ahull/galois.hpp"
#include "ahull/relations.hpp"

namespace ahull {

enum class HullRoute { relation_based, fast_path, closed_form, lie_closure };

std::string to_string(HullRoute r);

struct HullConfig {
  EngineOptions engine;
  Route route = Route::lll;
  /// Galois group on the roots of the squarefree integral characteristic polynomial, in engine
  /// labeling. Used by the Galois route when its degree matches; the Frobenius group otherwise.
  std::optional<PermGroup> group;
  /// Lets unverified group assertions below select a fast path or closed form.
  bool trust_assertion = false;
  bool two_transitive_asserted = false;
  /// Degree 4: the Galois group is neither S4 nor A4.
  bool quartic_group_asserted = false;
  /// Degree 6: transitive group number.
  std::optional<int> sextic_group_id;
};

struct HullWitness {
  std::optional<RelationBasis> lambda;
  std::vector<IntMatrix> m_bases;
  /// Coefficient vectors (gamma_0, ..., gamma_t) with respect to I, X, ..., X^t.
  std::vector<RatVector> upsilon;
  std::size_t constraint_rank = 0;
  std::size_t t_plus_one = 0;
  Integer scale{1};
  std::uint64_t p = 0;
  unsigned f_p = 0;
  unsigned precision = 0;
};

struct HullResult {
  MatrixSpan span{0};
  Mode mode = Mode::proven;
  std::string certification;
  HullRoute route = HullRoute::relation_based;
  HullWitness witness;

  std::size_t dim() const { return span.dim(); }
};

/// Throws std::invalid_argument when X is not semisimple.
HullResult hull_semisimple(const RatMatrix& x, const HullConfig& config = {});
HullResult hull_matrix(const RatMatrix& x, const HullConfig& config = {});

/// Caches single-matrix hulls by matrix value across closure rounds. Not thread-safe.
class HullCache {
 public:
  const MatrixSpan& hull_of(const RatMatrix& y, const HullConfig& config);
  std::size_t size() const { return cache_.size(); }

 private:
  std::map<RatMatrix, MatrixSpan> cache_;
};

HullResult hull_lie_algebra(const std::vector<RatMatrix>& generators, const HullConfig& config = {},
                            HullCache* cache = nullptr);
bool is_algebraic(const std::vector<RatMatrix>& generators, const HullConfig& config = {});

/// Symbolic hull description from the closed forms for quartics and sextics: either the
/// trace-zero subspace of A(X), or the span of sum_i gammas[j][i] X^i.
struct ClosedFormHull {
  int case_id = 0;
  bool trace_zero = false;
  std::vector<RatVector> gammas;
  /// Degree 4: a^3 - 4ab + 8c. Degree 6: r1 and r2.
  std::vector<Rational> invariants;
};

/// f = x^4 + a x^3 + b x^2 + c x + d, irreducible; throws std::invalid_argument otherwise.
ClosedFormHull closed_form_deg4(const RatPolynomial& f);
/// f = x^6 + a x^5 + b x^4 + c x^3 + d x^2 + e x + g, irreducible; throws std::invalid_argument otherwise.
ClosedFormHull closed_form_deg6(const RatPolynomial& f);
MatrixSpan materialize(const ClosedFormHull& form, const RatMatrix& x);

}  // namespace ahull
