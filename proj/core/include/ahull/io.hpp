#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "ahull/exponent_polynomial.hpp"
#include "ahull/galois.hpp"
#include "ahull/hull.hpp"
#include "ahull/lattice.hpp"
#include "ahull/matrix.hpp"
#include "ahull/padic.hpp"
#include "ahull/relations.hpp"

namespace ahull::io {

using nlohmann::json;

/// Numbers are written as strings ("p/q" or "p"); on input, JSON integers are accepted too.
/// All parse functions throw std::invalid_argument on malformed input.
Rational parse_rational(const json& j);
Integer parse_integer(const json& j);
json to_json(const Rational& q);
json to_json(const Integer& z);

RatMatrix parse_matrix(const json& j);
json to_json(const RatMatrix& m);

IntMatrix parse_int_matrix(const json& j);
json to_json(const IntMatrix& m);

/// Constant term first.
RatPolynomial parse_polynomial(const json& j);
IntPolynomial parse_monic_integral(const json& j);
json to_json(const IntPolynomial& f);

/// A target is a list of terms, each either [coeff, [e_1, ..., e_n]] or {"coeff": c, "exps": [...]}.
ExponentPolynomial parse_target(const json& j, std::size_t nvars);
json to_json(const ExponentPolynomial& g);

/// A group file is a list of 1-based image lists.
std::vector<Permutation> parse_permutations(const json& j, std::size_t degree);
json permutations_to_json(const std::vector<Permutation>& perms);

json to_json(const ApproxRoots& roots);
json to_json(const BoundData& b);
json to_json(const RelationBasis& r);
json to_json(const HullResult& h);

}  // namespace ahull::io
