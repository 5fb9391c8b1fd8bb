#include "ahull/galois.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ahull {

std::string to_string(GroupProvenance p) {
  switch (p) {
    case GroupProvenance::frobenius: return "frobenius";
    case GroupProvenance::user_supplied: return "user-supplied";
    case GroupProvenance::derived: return "derived";
  }
  return "unknown";
}

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation degree mismatch");
  Permutation c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

Permutation inverse(const Permutation& a) {
  Permutation inv(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) inv[a[i]] = i;
  return inv;
}

bool is_bijection(const Permutation& a) {
  std::vector<bool> seen(a.size(), false);
  for (auto v : a) {
    if (v >= a.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation from_one_based(const std::vector<std::size_t>& images) {
  Permutation p;
  for (auto v : images) {
    if (v == 0) throw std::invalid_argument("permutation images are 1-based");
    p.push_back(v - 1);
  }
  if (!is_bijection(p)) throw std::invalid_argument("permutation is not a bijection");
  return p;
}

std::vector<std::size_t> to_one_based(const Permutation& a) {
  std::vector<std::size_t> v;
  for (auto x : a) v.push_back(x + 1);
  return v;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, GroupProvenance provenance,
                     std::optional<std::uint64_t> order)
    : degree_(degree), generators_(std::move(generators)), provenance_(provenance), order_(order) {
  for (const auto& g : generators_) {
    if (g.size() != degree_) throw std::invalid_argument("generator has the wrong degree");
    if (!is_bijection(g)) throw std::invalid_argument("generator is not a bijection");
  }
}

std::optional<std::vector<Permutation>> PermGroup::elements(std::size_t cap) const {
  const Permutation id = identity_permutation(degree_);
  std::vector<Permutation> out{id};
  std::set<Permutation> seen{id};
  std::deque<Permutation> queue{id};
  while (!queue.empty()) {
    const Permutation cur = queue.front();
    queue.pop_front();
    for (const auto& g : generators_) {
      Permutation next = compose(g, cur);
      if (seen.insert(next).second) {
        if (out.size() >= cap) return std::nullopt;
        out.push_back(next);
        queue.push_back(std::move(next));
      }
    }
  }
  return out;
}

std::optional<std::uint64_t> PermGroup::order(std::size_t cap) const {
  if (order_) return order_;
  auto els = elements(cap);
  if (!els) return std::nullopt;
  return els->size();
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation p = identity_permutation(degree_);
  if (generators_.empty()) return p;
  const std::size_t len = 4 * degree_ + 8;
  for (std::size_t i = 0; i < len; ++i) p = compose(generators_[rng() % generators_.size()], p);
  return p;
}

PermGroup frobenius_group(const ApproxRoots& roots) {
  const Permutation phi = frobenius_perm(roots);
  std::uint64_t order = 1;
  Permutation cur = phi;
  const Permutation id = identity_permutation(phi.size());
  while (cur != id) {
    cur = compose(phi, cur);
    ++order;
  }
  return PermGroup(phi.size(), {phi}, GroupProvenance::frobenius, order);
}

IntVector permute_vector(const Permutation& sigma, const IntVector& e) {
  if (sigma.size() != e.size()) throw std::invalid_argument("permutation degree mismatch");
  IntVector out(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) out[sigma[i]] = e[i];
  return out;
}

bool validate_action(const Permutation& sigma, const ApproxRoots& roots, const IntMatrix* root_relations) {
  if (sigma.size() != roots.size()) {
    throw std::invalid_argument("permutation of degree " + std::to_string(sigma.size()) + " for " +
                                std::to_string(roots.size()) + " roots");
  }
  if (!is_bijection(sigma)) return false;
  if (!root_relations || root_relations->empty()) return true;
  const auto rows = to_rational_rows(*root_relations);
  for (const auto& e : root_relations->row_list()) {
    RatVector image;
    for (const auto& v : permute_vector(sigma, e)) image.emplace_back(v);
    if (!in_row_span(rows, image)) return false;
  }
  return true;
}

GrowResult grow_subset(const std::vector<Permutation>& subset, const PermGroup& group, std::mt19937_64& rng) {
  GrowResult out{subset, false};
  const std::size_t want = (subset.size() + 4) / 5;  // ceil(0.2 #S)
  std::set<Permutation> have(subset.begin(), subset.end());
  std::vector<Permutation> fresh;
  if (auto els = group.elements(5000)) {
    for (const auto& g : *els)
      if (!have.count(g)) fresh.push_back(g);
    if (fresh.empty()) {
      out.exhausted = true;
      return out;
    }
    std::shuffle(fresh.begin(), fresh.end(), rng);
    fresh.resize(std::min(fresh.size(), want));
  } else {
    for (std::size_t tries = 0; fresh.size() < want && tries < 50 * want; ++tries) {
      Permutation g = group.random_element(rng);
      if (have.insert(g).second) fresh.push_back(std::move(g));
    }
    if (fresh.empty()) out.exhausted = true;
  }
  out.subset.insert(out.subset.end(), fresh.begin(), fresh.end());
  return out;
}

bool is_transitive(const PermGroup& group) {
  const std::size_t n = group.degree();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (const auto& g : group.generators()) {
      if (!seen[g[i]]) {
        seen[g[i]] = true;
        ++count;
        queue.push_back(g[i]);
      }
    }
  }
  return count == n;
}

std::optional<bool> is_two_transitive(const PermGroup& group) {
  const std::size_t n = group.degree();
  if (n < 2 || !is_transitive(group)) return n < 2 ? std::optional<bool>(true) : std::optional<bool>(false);
  const auto els = group.elements();
  if (!els) return std::nullopt;
  // The stabilizer of 0 must be transitive on the remaining points.
  std::vector<bool> reached(n, false);
  for (const auto& g : *els)
    if (g[0] == 0) reached[g[1]] = true;
  for (std::size_t i = 1; i < n; ++i)
    if (!reached[i]) return false;
  return true;
}

PermModuleMarkers markers_for(const RatMatrix& x, bool two_transitive_asserted) {
  PermModuleMarkers m;
  m.trace_zero = x.trace() == 0;
  m.degree_prime = x.rows() >= 2 && is_probable_prime(x.rows());
  m.two_transitive_asserted = two_transitive_asserted;
  return m;
}

MatrixSpan trace_zero_subspace(const MatrixSpan& basis) {
  RatVector traces;
  for (const auto& b : basis.basis()) traces.push_back(b.trace());
  std::vector<RatMatrix> gens;
  for (const auto& g : right_kernel({traces}, traces.size())) {
    RatMatrix m(basis.matrix_size(), basis.matrix_size());
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] != 0) m += g[i] * basis.basis()[i];
    gens.push_back(std::move(m));
  }
  return MatrixSpan::spanned_by(basis.matrix_size(), gens);
}

std::optional<MatrixSpan> fast_path_hull(const RatMatrix& x, const PermModuleMarkers& markers) {
  if (!x.is_square() || x.rows() < 1) return std::nullopt;
  if (!markers.two_transitive_asserted && !markers.degree_prime) return std::nullopt;
  const RatPolynomial cp = char_poly(x);
  if (!is_irreducible(scale_to_integral(cp).poly)) return std::nullopt;
  const MatrixSpan a = power_basis(x);
  if (x.trace() == 0) return trace_zero_subspace(a);
  return a;
}

std::optional<Permutation> power_map_permutation(const ApproxRoots& roots, unsigned a) {
  const ApproxRoots low = roots.truncate(1);
  Permutation sigma(low.size());
  for (std::size_t i = 0; i < low.size(); ++i) {
    const PadicElement img = low.roots[i].pow(Integer(a));
    bool found = false;
    for (std::size_t j = 0; j < low.size() && !found; ++j) {
      if (low.roots[j] == img) {
        sigma[i] = j;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  if (!is_bijection(sigma)) return std::nullopt;
  return sigma;
}

}  // namespace ahull
