#include "corpus.hpp"

#include <fstream>
#include <stdexcept>

#include "ahull/io.hpp"

namespace ahull::testing {

EngineOptions CorpusEntry::engine(Mode mode) const {
  EngineOptions o;
  o.mode = mode;
  o.group_order = Integer(static_cast<unsigned long>(group_order));
  o.prime = recipe_prime(group_recipe, poly, group_order);
  return o;
}

PermGroup CorpusEntry::group() const {
  RootContext ctx(poly, engine());
  return derive_group(group_recipe, ctx, group_order);
}

HullConfig CorpusEntry::hull_config(Route route, Mode mode) const {
  HullConfig c;
  c.engine = engine(mode);
  c.route = route;
  if (route == Route::galois) c.group = group();
  return c;
}

std::string data_path(const std::string& name) { return std::string(AHULL_TEST_DATA_DIR) + "/" + name; }

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus " + path);
  const auto j = io::json::parse(in);
  std::vector<CorpusEntry> out;
  for (const auto& e : j) {
    CorpusEntry c;
    c.label = e.at("label").get<std::string>();
    c.poly = io::parse_monic_integral(e.at("poly"));
    c.group_order = e.at("group_order").get<std::uint64_t>();
    c.group_recipe = e.at("group").get<std::string>();
    c.family = e.at("family").get<std::string>();
    c.expected_dim = e.at("expected_dim").get<std::size_t>();
    c.expected_lambda_rank = e.at("expected_lambda_rank").get<std::size_t>();
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace ahull::testing
