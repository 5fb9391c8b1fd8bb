#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ahull/galois.hpp"
#include "ahull/relations.hpp"

namespace ahull {

/// Genuine Galois group of f in the labeling fixed by a RootContext, built from a recipe that
/// needs no prior knowledge of the labeling. Recipes:
///   symmetric       S_n, requires |G| = n!
///   alternating3    A_3
///   klein           the regular Klein group, requires n = 4 and |G| = 4
///   pairs           stabilizer of the pairing alpha_i + alpha_j = -2a/n, requires |G| = 2^(n/2) (n/2)!
///   cyclotomic:m    power maps alpha -> alpha^u, u prime to m, for f = Phi_m
///   kummer          affine maps on the roots of x^n - c, requires |G| = n phi(n)
///   frobenius       cyclic G generated by Frobenius, requires a prime with f_p = |G|
///   dihedral5       the D5 or F20 containing a Frobenius 5-cycle, chosen by |G|
/// Throws std::invalid_argument when the recipe does not apply.
PermGroup derive_group(const std::string& recipe, RootContext& ctx, std::uint64_t order);

/// Names accepted by derive_group (cyclotomic takes a ":m" suffix).
bool is_group_recipe(const std::string& text);

/// Fixed prime a recipe needs: frobenius wants f_p = |G|, dihedral5 wants f_p = 5. nullopt otherwise.
std::optional<std::uint64_t> recipe_prime(const std::string& recipe, const IntPolynomial& f, std::uint64_t order);

}  // namespace ahull
