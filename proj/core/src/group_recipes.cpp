#include "ahull/group_recipes.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace ahull {

namespace {

Permutation cycle(std::size_t n, const std::vector<std::size_t>& points) {
  Permutation p = identity_permutation(n);
  for (std::size_t i = 0; i < points.size(); ++i) p[points[i]] = points[(i + 1) % points.size()];
  return p;
}

std::uint64_t factorial_u64(std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

PermGroup pairs_group(RootContext& ctx, std::uint64_t order) {
  const std::size_t n = ctx.degree();
  require(n % 2 == 0, "pairs recipe needs even degree");
  const std::size_t m = n / 2;
  require(order == (std::uint64_t{1} << m) * factorial_u64(m), "pairs recipe needs the full block stabilizer");
  const Integer a = ctx.polynomial().coefficient(n - 1);
  std::vector<std::size_t> partner(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ExponentPolynomial g = Integer(static_cast<unsigned long>(n)) *
                                 (ExponentPolynomial::variable(n, i) + ExponentPolynomial::variable(n, j)) +
                             ExponentPolynomial::constant(n, 2 * a);
      if (is_zero(g, ctx, Mode::proven).zero) {
        require(partner[i] == n && partner[j] == n, "roots pair up ambiguously");
        partner[i] = j;
        partner[j] = i;
      }
    }
  }
  std::vector<std::array<std::size_t, 2>> blocks;
  for (std::size_t i = 0; i < n; ++i) {
    require(partner[i] < n, "some root has no partner");
    if (i < partner[i]) blocks.push_back({i, partner[i]});
  }
  std::vector<Permutation> gens{cycle(n, {blocks[0][0], blocks[0][1]})};
  if (m >= 2) {
    Permutation swap01 = identity_permutation(n);
    for (int t = 0; t < 2; ++t) {
      swap01[blocks[0][t]] = blocks[1][t];
      swap01[blocks[1][t]] = blocks[0][t];
    }
    gens.push_back(swap01);
  }
  if (m >= 3) {
    Permutation rot = identity_permutation(n);
    for (std::size_t b = 0; b < m; ++b)
      for (int t = 0; t < 2; ++t) rot[blocks[b][t]] = blocks[(b + 1) % m][t];
    gens.push_back(rot);
  }
  return PermGroup(n, gens, GroupProvenance::derived, order);
}

PermGroup cyclotomic_group(RootContext& ctx, unsigned m) {
  const ApproxRoots roots = ctx.roots_at(1);
  std::vector<Permutation> gens;
  for (unsigned u = 2; u < m; ++u) {
    if (std::gcd(u, m) != 1) continue;
    auto sigma = power_map_permutation(roots, u);
    require(sigma.has_value(), "power map does not permute the roots");
    gens.push_back(*sigma);
  }
  return PermGroup(ctx.degree(), gens, GroupProvenance::derived);
}

PermGroup kummer_group(RootContext& ctx, std::uint64_t order) {
  const IntPolynomial& f = ctx.polynomial();
  const std::size_t n = ctx.degree();
  for (std::size_t i = 1; i < n; ++i) require(f.coefficient(i) == 0, "kummer recipe needs x^n - c");
  unsigned phi = 0;
  for (unsigned u = 1; u <= n; ++u) phi += std::gcd<unsigned>(u, static_cast<unsigned>(n)) == 1;
  require(order == n * phi, "kummer recipe needs the full affine group");
  const ApproxRoots roots = ctx.roots_at(1);
  const PadicElement inv0 = roots.roots[0].inverse();
  std::vector<PadicElement> ratio;
  for (const auto& r : roots.roots) ratio.push_back(r * inv0);
  const PadicElement one = PadicElement::from_integer(roots.ring, 1);
  std::optional<PadicElement> zeta;
  for (const auto& r : ratio) {
    PadicElement acc = r;
    std::size_t ord = 1;
    while (!(acc == one)) {
      acc = acc * r;
      ++ord;
    }
    if (ord == n) {
      zeta = r;
      break;
    }
  }
  require(zeta.has_value(), "no primitive root of unity among the root ratios");
  // index_of_power[e] = label of alpha_0 zeta^e
  std::vector<std::size_t> index_of_power(n);
  PadicElement acc = one;
  for (std::size_t e = 0; e < n; ++e) {
    auto it = std::find(ratio.begin(), ratio.end(), acc);
    require(it != ratio.end(), "root ratios are not the powers of zeta");
    index_of_power[e] = static_cast<std::size_t>(it - ratio.begin());
    acc = acc * *zeta;
  }
  auto affine = [&](std::size_t u, std::size_t v) {
    Permutation p(n);
    for (std::size_t e = 0; e < n; ++e) p[index_of_power[e]] = index_of_power[(u * e + v) % n];
    return p;
  };
  std::vector<Permutation> gens{affine(1, 1)};
  for (std::size_t u = 2; u < n; ++u)
    if (std::gcd(u, n) == 1) gens.push_back(affine(u, 0));
  return PermGroup(n, gens, GroupProvenance::derived, order);
}

PermGroup dihedral5_group(RootContext& ctx, std::uint64_t order) {
  require(ctx.degree() == 5 && (order == 10 || order == 20), "dihedral5 recipe needs a quintic with |G| 10 or 20");
  const Permutation c = frobenius_perm(ctx.roots_at(1));
  std::vector<Permutation> powers{identity_permutation(5)};
  for (int i = 1; i < 5; ++i) powers.push_back(compose(c, powers.back()));
  require(compose(c, powers.back()) == powers[0] && c != powers[0], "Frobenius is not a 5-cycle");
  std::vector<Permutation> gens;
  Permutation s = identity_permutation(5);
  do {
    const Permutation conj = compose(compose(s, c), inverse(s));
    const bool in_dihedral = conj == c || conj == powers[4];
    const bool in_normalizer = std::find(powers.begin(), powers.end(), conj) != powers.end();
    if (order == 10 ? in_dihedral : in_normalizer) gens.push_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return PermGroup(5, gens, GroupProvenance::derived, order);
}

}  // namespace

PermGroup derive_group(const std::string& recipe, RootContext& ctx, std::uint64_t order) {
  const std::size_t n = ctx.degree();
  if (recipe == "symmetric") {
    require(order == factorial_u64(n), "symmetric recipe needs |G| = n!");
    std::vector<Permutation> gens;
    if (n >= 2) {
      gens.push_back(cycle(n, {0, 1}));
      std::vector<std::size_t> all(n);
      std::iota(all.begin(), all.end(), std::size_t{0});
      gens.push_back(cycle(n, all));
    }
    return PermGroup(n, gens, GroupProvenance::derived, order);
  }
  if (recipe == "alternating3") {
    require(n == 3 && order == 3, "alternating3 recipe needs a cubic with |G| = 3");
    return PermGroup(3, {cycle(3, {0, 1, 2})}, GroupProvenance::derived, order);
  }
  if (recipe == "klein") {
    require(n == 4 && order == 4, "klein recipe needs a quartic with |G| = 4");
    return PermGroup(4, {Permutation{1, 0, 3, 2}, Permutation{2, 3, 0, 1}}, GroupProvenance::derived, order);
  }
  if (recipe == "pairs") return pairs_group(ctx, order);
  if (recipe.rfind("cyclotomic:", 0) == 0) return cyclotomic_group(ctx, static_cast<unsigned>(std::stoul(recipe.substr(11))));
  if (recipe == "kummer") return kummer_group(ctx, order);
  if (recipe == "frobenius") {
    PermGroup g = frobenius_group(ctx.roots_at(1));
    require(g.order() == order, "Frobenius does not generate a group of the stated order");
    return g;
  }
  if (recipe == "dihedral5") return dihedral5_group(ctx, order);
  throw std::invalid_argument("unknown group recipe " + recipe);
}

bool is_group_recipe(const std::string& text) {
  static const char* names[] = {"symmetric", "alternating3", "klein", "pairs", "kummer", "frobenius", "dihedral5"};
  for (const char* n : names)
    if (text == n) return true;
  return text.rfind("cyclotomic:", 0) == 0 && text.size() > 11 &&
         text.find_first_not_of("0123456789", 11) == std::string::npos;
}

std::optional<std::uint64_t> recipe_prime(const std::string& recipe, const IntPolynomial& f, std::uint64_t order) {
  std::uint64_t want = 0;
  if (recipe == "frobenius") want = order;
  if (recipe == "dihedral5") want = 5;
  if (want == 0) return std::nullopt;
  std::uint64_t p = static_cast<std::uint64_t>(f.degree());
  for (int tries = 0; tries < 500; ++tries) {
    p = next_prime(p);
    if (!is_admissible_prime(f, p)) continue;
    if (prime_selection_for(f, p).f_p == want) return p;
  }
  throw std::invalid_argument("no prime with f_p = " + std::to_string(want));
}

}  // namespace ahull
