#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ahull/foundations.hpp"
#include "ahull/lattice.hpp"
#include "ahull/padic.hpp"

namespace ahull {

enum class GroupProvenance { frobenius, user_supplied, derived };

std::string to_string(GroupProvenance p);

Permutation identity_permutation(std::size_t n);
/// (a * b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);
bool is_bijection(const Permutation& a);
/// Converts 1-based images (file format) to 0-based; throws std::invalid_argument if not a bijection.
Permutation from_one_based(const std::vector<std::size_t>& images);
std::vector<std::size_t> to_one_based(const Permutation& a);

class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators, GroupProvenance provenance,
            std::optional<std::uint64_t> order = std::nullopt);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  GroupProvenance provenance() const { return provenance_; }

  /// All elements (identity first) when the group has at most `cap` elements.
  std::optional<std::vector<Permutation>> elements(std::size_t cap = 50000) const;
  /// Known or enumerated order.
  std::optional<std::uint64_t> order(std::size_t cap = 50000) const;
  Permutation random_element(std::mt19937_64& rng) const;

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  GroupProvenance provenance_;
  std::optional<std::uint64_t> order_;
};

PermGroup frobenius_group(const ApproxRoots& roots);

/// Consistency certificate for sigma acting on the labeled roots: sigma must be a bijection of the
/// right degree and, when a relation lattice among the roots is supplied, must map it into itself.
/// Throws std::invalid_argument on a degree mismatch.
bool validate_action(const Permutation& sigma, const ApproxRoots& roots, const IntMatrix* root_relations = nullptr);

/// Applies sigma to coordinates: (sigma e)_{sigma(i)} = e_i.
IntVector permute_vector(const Permutation& sigma, const IntVector& e);

struct GrowResult {
  std::vector<Permutation> subset;
  bool exhausted = false;
};

/// Adds ceil(0.2 #S) fresh elements of G to S. Sets `exhausted` if no fresh element exists.
GrowResult grow_subset(const std::vector<Permutation>& subset, const PermGroup& group, std::mt19937_64& rng);

bool is_transitive(const PermGroup& group);
/// Decided by enumeration; nullopt if the group is too large to enumerate.
std::optional<bool> is_two_transitive(const PermGroup& group);

struct PermModuleMarkers {
  bool trace_zero = false;
  bool degree_prime = false;
  bool two_transitive_asserted = false;
};

PermModuleMarkers markers_for(const RatMatrix& x, bool two_transitive_asserted);

/// {sum g_i B_i : sum g_i Tr(B_i) = 0} inside the span.
MatrixSpan trace_zero_subspace(const MatrixSpan& basis);

/// Hull of X from the permutation-module argument, when its preconditions hold: char_poly(X)
/// irreducible over Q and either 2-transitivity is asserted or n is prime.
std::optional<MatrixSpan> fast_path_hull(const RatMatrix& x, const PermModuleMarkers& markers);

/// sigma with alpha_{sigma(i)} = alpha_i^a mod p, if that map permutes the roots.
std::optional<Permutation> power_map_permutation(const ApproxRoots& roots, unsigned a);

}  // namespace ahull
