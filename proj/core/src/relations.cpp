#include "ahull/relations.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace ahull {

std::string to_string(Mode m) { return m == Mode::proven ? "proven" : "heuristic"; }

Mode parse_mode(std::string_view text) {
  if (text == "proven") return Mode::proven;
  if (text == "heuristic") return Mode::heuristic;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "' (expected proven or heuristic)");
}

std::string to_string(Route r) { return r == Route::lll ? "lll" : "galois"; }

Route parse_route(std::string_view text) {
  if (text == "lll") return Route::lll;
  if (text == "galois") return Route::galois;
  throw std::invalid_argument("unknown route '" + std::string(text) + "' (expected lll or galois)");
}

namespace {

Integer to_integer(std::uint64_t v) { return Integer(std::to_string(v)); }

unsigned long to_ulong(const Integer& x, const char* what) {
  if (x < 0 || !x.fits_ulong_p()) throw std::overflow_error(std::string(what) + " does not fit a machine word");
  return x.get_ui();
}

/// Smallest k >= 1 with base^k > bound.
unsigned digits_above(const Integer& bound, const Integer& base) {
  unsigned k = 1;
  Integer pk = base;
  while (pk <= bound) {
    pk *= base;
    ++k;
  }
  return k;
}

struct CommonBounds {
  Integer root_bound, embedding, r, N;
};

CommonBounds common_bounds(const std::vector<ExponentPolynomial>& targets, RootContext& ctx) {
  if (targets.empty()) throw std::invalid_argument("relation finding needs at least one target");
  CommonBounds b;
  b.root_bound = ctx.root_bound();
  b.embedding = 1;
  for (const auto& g : targets) {
    if (g.num_vars() > ctx.degree()) throw std::out_of_range("target uses more variables than there are roots");
    b.embedding = std::max(b.embedding, embedding_bound(g, b.root_bound));
  }
  b.r = ctx.degree_bound();
  b.N = masser_bound(targets.size(), b.embedding);
  return b;
}

}  // namespace

// ---------------------------------------------------------------------------

RootContext::RootContext(IntPolynomial f, EngineOptions options) : f_(std::move(f)), options_(std::move(options)) {
  if (f_.degree() < 1 || f_.leading() != 1) throw std::invalid_argument("polynomial must be monic of degree >= 1");
  if (gcd(to_rational(f_), to_rational(f_).derivative()).degree() > 0) {
    throw std::invalid_argument("polynomial must be squarefree");
  }
  if (options_.prime) {
    if (!is_admissible_prime(f_, *options_.prime)) {
      throw std::invalid_argument("prime " + std::to_string(*options_.prime) + " is not admissible for this polynomial");
    }
    selection_ = prime_selection_for(f_, *options_.prime);
  } else {
    selection_ = select_prime(f_, options_.prime_search_limit);
  }
}

ApproxRoots RootContext::roots_at(unsigned k) {
  if (k == 0) k = 1;
  if (!top_) {
    top_ = lift_roots(f_, build_unramified(selection_.p, selection_.f_p, k, options_.seed), options_.seed);
    return *top_;
  }
  if (top_->precision() < k) top_ = increase_precision(*top_, k);
  return top_->precision() == k ? *top_ : top_->truncate(k);
}

Integer RootContext::root_bound() const { return complex_root_bound(f_); }
Integer RootContext::degree_bound() const { return ahull::degree_bound(f_, options_.group_order); }

Integer complex_root_bound(const IntPolynomial& f) {
  if (f.degree() < 1 || f.leading() != 1) throw std::invalid_argument("root bound needs a monic polynomial");
  Integer m(0);
  for (int i = 0; i < f.degree(); ++i) m = std::max(m, Integer(abs(f.coefficient(static_cast<std::size_t>(i)))));
  return m + 1;
}

Integer embedding_bound(const ExponentPolynomial& g, const Integer& root_bound) {
  Integer total(0);
  for (const auto& t : g.terms()) {
    unsigned d = 0;
    for (auto e : t.exponents) d += e;
    total += abs(t.coefficient) * ipow(root_bound, d);
  }
  return total;
}

Integer degree_bound(const IntPolynomial& f, const std::optional<Integer>& group_order) {
  if (group_order) {
    if (*group_order < 1) throw std::invalid_argument("group order must be positive");
    return *group_order;
  }
  return factorial(static_cast<unsigned long>(std::max(f.degree(), 0)));
}

Integer masser_bound(std::size_t s, const Integer& m) {
  if (s == 0) throw std::invalid_argument("masser bound needs s >= 1");
  return ipow(Integer(static_cast<unsigned long>(s)), s - 1) * ipow(m, s - 1);
}

unsigned proven_precision(const Integer& bound, const Integer& r, std::uint64_t p, unsigned f_p,
                          unsigned long max_precision) {
  if (bound <= 1) return 1;
  const double estimate = to_ulong(r, "degree bound") > 0
                              ? r.get_d() * log_abs(bound) / (static_cast<double>(f_p) * std::log(static_cast<double>(p)))
                              : 0.0;
  if (estimate + 1 > static_cast<double>(max_precision)) {
    const auto need = static_cast<unsigned long>(std::min(estimate + 1, 1e18));
    throw PrecisionError("certified zero test needs p-adic precision about " + std::to_string(need) +
                             " (limit " + std::to_string(max_precision) + "); supply the group order to lower it",
                         need);
  }
  const Integer target = ipow(bound, r.get_ui());
  const Integer q = ipow(to_integer(p), f_p);
  unsigned k = std::max(1U, static_cast<unsigned>(estimate));
  while (k > 1 && ipow(q, k - 1) > target) --k;
  while (ipow(q, k) <= target) ++k;
  return k;
}

ZeroTest is_zero(const ExponentPolynomial& g, RootContext& ctx, Mode mode, std::optional<unsigned> k) {
  ZeroTest out;
  out.mode = mode;
  out.bound = embedding_bound(g, ctx.root_bound());
  if (out.bound == 0) {
    out.zero = true;
    out.precision = 0;
    return out;
  }
  const auto& sel = ctx.selection();
  if (mode == Mode::proven) {
    out.precision = proven_precision(out.bound, ctx.degree_bound(), sel.p, sel.f_p, ctx.options().max_precision);
    if (k && *k > out.precision) out.precision = *k;
  } else {
    // Default heuristic precision: the certified precision for a degree-2 field.
    out.precision = k ? *k : proven_precision(out.bound, Integer(2), sel.p, sel.f_p, ctx.options().max_precision);
  }
  const PadicElement v = eval_target(g, ctx.roots_at(out.precision));
  out.valuation = valuation(v);
  out.zero = !out.valuation.has_value();
  return out;
}

std::vector<ExponentPolynomial> root_targets(std::size_t n) {
  std::vector<ExponentPolynomial> g;
  for (std::size_t i = 0; i < n; ++i) g.push_back(ExponentPolynomial::variable(n, i));
  return g;
}

// ---------------------------------------------------------------------------
// Lattice route.

RelationBasis find_relations_lll(const std::vector<ExponentPolynomial>& targets, RootContext& ctx, Mode mode) {
  const CommonBounds cb = common_bounds(targets, ctx);
  const std::size_t s = targets.size();
  const auto& sel = ctx.selection();
  const Integer P = to_integer(sel.p);
  const std::size_t fp = sel.f_p, d = s + fp;

  const Integer lll_factor = isqrt(ipow(Integer(2), d - 1) * Integer(static_cast<unsigned long>(s))) + 1;
  const Integer lambda = std::max(Integer(cb.N * cb.N * ipow(Integer(2), s - 1)), Integer(lll_factor * cb.N + 1));
  // Any candidate of norm at most 2^((d-1)/2) sqrt(s) N has embeddings bounded by this value.
  const Integer value_bound = Integer(static_cast<unsigned long>(s)) * ipow(Integer(2), d / 2) * cb.N * cb.embedding;
  const unsigned k_proven = proven_precision(value_bound, cb.r, sel.p, sel.f_p, ctx.options().max_precision);

  unsigned k = k_proven;
  if (mode == Mode::heuristic) {
    const double lnN = cb.N > 1 ? log_abs(cb.N) : 0.0;
    k = std::max(1U, static_cast<unsigned>(std::ceil(1.5 * lnN / std::log(static_cast<double>(sel.p)))));
    k = std::min(k, k_proven);
  }

  RelationBasis out;
  out.mode = mode;
  out.route = Route::lll;
  out.bounds = {cb.root_bound, cb.embedding, cb.r, cb.N, lambda, 0, sel.p, sel.f_p, s};

  while (true) {
    ++out.iterations;
    const ApproxRoots roots = ctx.roots_at(k);
    const Integer pk = ipow(P, k);
    IntMatrix big(d, d);
    for (std::size_t i = 0; i < s; ++i) {
      big(i, i) = 1;
      const PadicElement v = eval_target(targets[i], roots);
      for (std::size_t j = 0; j < fp; ++j) big(i, s + j) = lambda * v.coefficients()[j];
    }
    for (std::size_t j = 0; j < fp; ++j) big(s + j, s + j) = lambda * pk;
    const IntMatrix reduced = lll_reduce(big, ctx.options().delta);

    const Integer lambda2 = lambda * lambda;
    std::vector<IntVector> candidates;
    for (const auto& row : reduced.row_list()) {
      bool tail_zero = true;
      for (std::size_t j = s; j < d && tail_zero; ++j) tail_zero = row[j] == 0;
      if (!tail_zero || norm_squared(row) >= lambda2) continue;
      candidates.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(s));
    }

    std::vector<IntVector> accepted;
    bool escalate = false;
    unsigned verify_k = 0;
    for (const auto& e : candidates) {
      const ExponentPolynomial comb = ExponentPolynomial::combination(e, targets);
      const ZeroTest zt = mode == Mode::proven ? is_zero(comb, ctx, Mode::proven)
                                               : is_zero(comb, ctx, Mode::heuristic, 2 * k);
      verify_k = std::max(verify_k, zt.precision);
      if (zt.zero) {
        accepted.push_back(e);
      } else if (mode == Mode::heuristic && k < k_proven) {
        escalate = true;
        break;
      }
    }
    if (escalate) {
      k = std::min(2 * k, k_proven);
      continue;
    }
    IntMatrix gens(s, std::move(accepted));
    IntMatrix basis = saturate(gens);
    if (!basis.empty()) basis = lll_reduce(basis, ctx.options().delta);
    out.basis = std::move(basis);
    out.bounds.k = k;
    out.verify_precision = verify_k;
    out.certification = mode == Mode::proven ? "proven" : "heuristic-verified";
    return out;
  }
}

// ---------------------------------------------------------------------------
// Galois route.

namespace {

unsigned pivot_valuation(const IntVector& row, const Integer& P, unsigned k) {
  for (const auto& v : row) {
    if (v == 0) continue;
    unsigned val = 0;
    Integer x = v;
    while (val < k && mpz_divisible_p(x.get_mpz_t(), P.get_mpz_t())) {
      x /= P;
      ++val;
    }
    return val;
  }
  return k;
}

}  // namespace

RelationBasis find_relations_galois(const std::vector<ExponentPolynomial>& targets, RootContext& ctx,
                                    const PermGroup& group, Mode mode) {
  const CommonBounds cb = common_bounds(targets, ctx);
  const std::size_t s = targets.size();
  const auto& sel = ctx.selection();
  const Integer P = to_integer(sel.p);
  const std::size_t fp = sel.f_p;
  if (group.degree() != ctx.degree()) throw std::invalid_argument("group degree does not match the polynomial");

  // Entries of the reduced echelon basis of the relation space are ratios of s x s minors of a
  // basis with sup norm N, hence bounded by this Hadamard-type height.
  const Integer height = ipow((isqrt(Integer(static_cast<unsigned long>(s))) + 1) * cb.N, s);
  const Integer height_sq2 = 2 * height * height;
  const unsigned k_cap = digits_above(height_sq2, P);
  unsigned k = digits_above(cb.N * cb.N * cb.embedding * cb.embedding, P);

  RelationBasis out;
  out.mode = mode;
  out.route = Route::galois;
  out.bounds = {cb.root_bound, cb.embedding, cb.r, cb.N, Integer(1), 0, sel.p, sel.f_p, s};

  std::mt19937_64 rng(ctx.options().seed ^ 0x5851f42d4c957f2dULL);
  std::vector<Permutation> subset{identity_permutation(ctx.degree())};
  const std::size_t initial = (s + fp - 1) / fp;
  while (subset.size() < initial) {
    GrowResult g = grow_subset(subset, group, rng);
    if (g.exhausted) break;
    subset = std::move(g.subset);
    if (subset.size() > initial) subset.resize(initial);
  }
  bool exhausted = false;

  for (unsigned iteration = 1;; ++iteration) {
    out.iterations = iteration;
    const ApproxRoots roots = ctx.roots_at(k);
    const Integer pk = ipow(P, k);
    IntMatrix b(s, fp * subset.size());
    for (std::size_t c = 0; c < subset.size(); ++c) {
      for (std::size_t i = 0; i < s; ++i) {
        const PadicElement v = eval_target(targets[i], roots, &subset[c]);
        for (std::size_t j = 0; j < fp; ++j) b(i, c * fp + j) = v.coefficients()[j];
      }
    }
    const ModMatrix kernel = nullspace_mod(ModMatrix(std::move(b), sel.p, k));

    std::vector<const IntVector*> free_rows;
    unsigned torsion = k;
    for (const auto& row : kernel.entries.row_list()) {
      const unsigned v = pivot_valuation(row, P, k);
      if (v < k && ipow(P, v) <= height) {
        free_rows.push_back(&row);
      } else {
        torsion = std::min(torsion, v);
      }
    }
    const Integer recon_mod = ipow(P, torsion);
    std::vector<RatVector> rational_rows;
    bool ok = recon_mod > 1;
    for (const IntVector* row : free_rows) {
      if (!ok) break;
      RatVector q;
      for (const auto& v : *row) {
        auto r = rational_reconstruction(v, recon_mod);
        if (!r) {
          ok = false;
          break;
        }
        q.push_back(*r);
      }
      rational_rows.push_back(std::move(q));
    }

    if (ok) {
      IntMatrix basis = saturate(rational_rows, s);
      if (!basis.empty()) basis = lll_reduce(basis, ctx.options().delta);
      const Integer norm_cap = ipow(Integer(2), basis.rows() > 0 ? basis.rows() - 1 : 0) *
                               Integer(static_cast<unsigned long>(s)) * cb.N * cb.N;
      unsigned verify_k = 0;
      for (const auto& e : basis.row_list()) {
        if (norm_squared(e) > norm_cap) {
          ok = false;
          break;
        }
        const ExponentPolynomial comb = ExponentPolynomial::combination(e, targets);
        const ZeroTest zt = mode == Mode::proven ? is_zero(comb, ctx, Mode::proven)
                                                 : is_zero(comb, ctx, Mode::heuristic, 2 * k);
        verify_k = std::max(verify_k, zt.precision);
        if (!zt.zero) {
          ok = false;
          break;
        }
      }
      if (ok) {
        out.basis = std::move(basis);
        out.bounds.k = k;
        out.verify_precision = verify_k;
        out.subset_size = subset.size();
        out.certification = mode == Mode::proven ? "proven" : "heuristic-verified";
        return out;
      }
    }

    if (!exhausted) {
      GrowResult g = grow_subset(subset, group, rng);
      exhausted = g.exhausted;
      subset = std::move(g.subset);
    }
    k = std::min(std::max(k + 1, static_cast<unsigned>(std::ceil(1.2 * k))), std::max(2 * k_cap, k + 1));
    if ((exhausted && k > 2 * k_cap) || iteration >= 200) {
      RelationBasis fb = find_relations_lll(targets, ctx, mode);
      fb.route = Route::galois;
      fb.fell_back = true;
      fb.iterations += iteration;
      fb.subset_size = subset.size();
      return fb;
    }
  }
}

bool validate_group(const PermGroup& group, RootContext& ctx) {
  if (group.degree() != ctx.degree()) return false;
  const RelationBasis lam = find_relations_lll(root_targets(ctx.degree()), ctx, Mode::heuristic);
  const ApproxRoots roots = ctx.roots_at(1);
  for (const auto& g : group.generators()) {
    if (!validate_action(g, roots, &lam.basis)) return false;
  }
  return true;
}

}  // namespace ahull
