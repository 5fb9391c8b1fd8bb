#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ahull/hull.hpp"
#include "ahull/group_recipes.hpp"

namespace ahull::testing {

struct CorpusEntry {
  std::string label;
  IntPolynomial poly;
  std::uint64_t group_order = 0;
  std::string group_recipe;
  std::string family;
  std::size_t expected_dim = 0;
  std::size_t expected_lambda_rank = 0;

  std::size_t degree() const { return static_cast<std::size_t>(poly.degree()); }
  RatMatrix companion() const { return companion_matrix(to_rational(poly)); }
  /// Group order plus whatever prime the group recipe needs.
  EngineOptions engine(Mode mode = Mode::proven) const;
  /// Config for the given route; the Galois route carries the recipe group.
  HullConfig hull_config(Route route, Mode mode = Mode::proven) const;
  PermGroup group() const;
};

std::string data_path(const std::string& name);
std::vector<CorpusEntry> load_corpus(const std::string& path = data_path("corpus.json"));

}  // namespace ahull::testing
