#include "ahull/hull.hpp"

#include <stdexcept>

namespace ahull {

std::string to_string(HullRoute r) {
  switch (r) {
    case HullRoute::relation_based: return "relation-based";
    case HullRoute::fast_path: return "fast-path";
    case HullRoute::closed_form: return "closed-form";
    case HullRoute::lie_closure: return "lie-closure";
  }
  return "unknown";
}

namespace {

std::string certification_for(Mode m) { return m == Mode::proven ? "proven" : "heuristic-verified"; }

RelationBasis run_route(const std::vector<ExponentPolynomial>& targets, RootContext& ctx, const HullConfig& config,
                        const std::optional<PermGroup>& group) {
  if (config.route == Route::galois) return find_relations_galois(targets, ctx, *group, config.engine.mode);
  return find_relations_lll(targets, ctx, config.engine.mode);
}

std::vector<RatMatrix> powers(const RatMatrix& x, std::size_t count) {
  std::vector<RatMatrix> p;
  RatMatrix cur = RatMatrix::identity(x.rows());
  for (std::size_t i = 0; i < count; ++i) {
    p.push_back(cur);
    cur = cur * x;
  }
  return p;
}

MatrixSpan span_of_coefficients(const RatMatrix& x, const std::vector<RatVector>& gammas, std::size_t len) {
  const auto pw = powers(x, len);
  std::vector<RatMatrix> gens;
  for (const auto& g : gammas) {
    RatMatrix m(x.rows(), x.cols());
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] != 0) m += g[i] * pw[i];
    gens.push_back(std::move(m));
  }
  return MatrixSpan::spanned_by(x.rows(), gens);
}

std::optional<HullResult> assertion_shortcut(const RatMatrix& x, const HullConfig& config) {
  if (!config.trust_assertion) return std::nullopt;
  const std::size_t n = x.rows();
  HullResult r;
  r.mode = config.engine.mode;
  r.certification = "asserted";
  if (auto fp = fast_path_hull(x, markers_for(x, config.two_transitive_asserted))) {
    r.span = std::move(*fp);
    r.route = HullRoute::fast_path;
    return r;
  }
  try {
    if (n == 4 && config.quartic_group_asserted) {
      r.span = materialize(closed_form_deg4(char_poly(x)), x);
      r.route = HullRoute::closed_form;
      return r;
    }
    if (n == 6 && config.sextic_group_id) {
      const int id = *config.sextic_group_id;
      if (id == 4 || id == 6 || id == 7 || id == 8 || id == 11) {
        r.span = materialize(closed_form_deg6(char_poly(x)), x);
        r.route = HullRoute::closed_form;
        return r;
      }
    }
  } catch (const std::invalid_argument&) {
    // Reducible characteristic polynomial: fall through to the relation engine.
  }
  return std::nullopt;
}

}  // namespace

HullResult hull_semisimple(const RatMatrix& x, const HullConfig& config) {
  if (!x.is_square()) throw std::invalid_argument("hull of a non-square matrix");
  if (!is_semisimple(x)) throw std::invalid_argument("matrix is not semisimple; use hull_matrix");
  if (auto r = assertion_shortcut(x, config)) return *r;

  const IntegralScaling sc = scale_to_integral(char_poly(x));
  const IntPolynomial f = to_integral(squarefree_part(to_rational(sc.poly)));
  const auto m = static_cast<std::size_t>(f.degree());

  RootContext ctx(f, config.engine);
  std::optional<PermGroup> group;
  if (config.route == Route::galois) {
    if (config.group && config.group->degree() == m) {
      if (!validate_group(*config.group, ctx)) {
        throw std::invalid_argument("group does not act consistently on the labeled roots");
      }
      group = config.group;
    } else {
      group = frobenius_group(ctx.roots_at(1));
    }
  }

  HullResult out;
  out.mode = config.engine.mode;
  out.certification = certification_for(out.mode);
  out.route = HullRoute::relation_based;
  out.witness.t_plus_one = m;
  out.witness.scale = sc.d;
  out.witness.p = ctx.selection().p;
  out.witness.f_p = ctx.selection().f_p;

  RelationBasis lam = run_route(root_targets(m), ctx, config, group);
  unsigned precision = lam.bounds.k;

  std::vector<RatVector> constraints;
  for (const auto& e : lam.basis.row_list()) {
    std::vector<ExponentPolynomial> targets;
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<ExponentPolynomial> powers_i;
      for (std::size_t j = 0; j < m; ++j) powers_i.push_back(ExponentPolynomial::variable(m, j, static_cast<unsigned>(i)));
      targets.push_back(ExponentPolynomial::combination(e, powers_i));
    }
    RelationBasis me = run_route(targets, ctx, config, group);
    precision = std::max(precision, me.bounds.k);
    for (auto& c : right_kernel(to_rational_rows(me.basis), m)) constraints.push_back(std::move(c));
    out.witness.m_bases.push_back(std::move(me.basis));
  }
  out.witness.constraint_rank = rank(constraints);
  std::vector<RatVector> upsilon = right_kernel(constraints, m);
  // Coefficients found for dX convert back to X by gamma_i = gamma'_i d^i.
  for (auto& g : upsilon) {
    Rational power(1);
    for (auto& v : g) {
      v *= power;
      power *= Rational(sc.d);
    }
  }
  reduce_rows(upsilon);
  out.span = span_of_coefficients(x, upsilon, m);
  out.witness.upsilon = std::move(upsilon);
  out.witness.precision = precision;
  out.witness.lambda = std::move(lam);
  return out;
}

HullResult hull_matrix(const RatMatrix& x, const HullConfig& config) {
  if (!x.is_square()) throw std::invalid_argument("hull of a non-square matrix");
  const JordanDecomposition jd = jordan_decomposition(x);
  HullResult r = hull_semisimple(jd.semisimple, config);
  if (!jd.nilpotent.is_zero()) {
    r.span = span_sum(r.span, MatrixSpan(x.rows(), {jd.nilpotent}));
  }
  return r;
}

const MatrixSpan& HullCache::hull_of(const RatMatrix& y, const HullConfig& config) {
  auto it = cache_.find(y);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(y, hull_matrix(y, config).span).first->second;
}

HullResult hull_lie_algebra(const std::vector<RatMatrix>& generators, const HullConfig& config, HullCache* cache) {
  if (generators.empty()) throw std::invalid_argument("Lie algebra needs at least one generator");
  const std::size_t n = generators.front().rows();
  for (const auto& g : generators) {
    if (!g.is_square() || g.rows() != n) throw std::invalid_argument("generators must be square of equal size");
  }
  HullCache local;
  HullCache& c = cache ? *cache : local;
  MatrixSpan l = bracket_closure(MatrixSpan::spanned_by(n, generators));
  while (true) {
    MatrixSpan acc = l;
    for (const auto& y : l.basis()) acc = span_sum(acc, c.hull_of(y, config));
    MatrixSpan next = bracket_closure(acc);
    if (next.dim() == l.dim()) break;
    l = std::move(next);
  }
  HullResult r;
  r.span = l.canonical();
  r.mode = config.engine.mode;
  r.certification = certification_for(r.mode);
  r.route = HullRoute::lie_closure;
  return r;
}

bool is_algebraic(const std::vector<RatMatrix>& generators, const HullConfig& config) {
  if (generators.empty()) return true;
  const MatrixSpan g = bracket_closure(MatrixSpan::spanned_by(generators.front().rows(), generators));
  return hull_lie_algebra(generators, config).dim() == g.dim();
}

// ---------------------------------------------------------------------------
// Closed forms.

namespace {

void require_irreducible(const RatPolynomial& f, int degree) {
  if (f.degree() != degree || !f.is_monic()) {
    throw std::invalid_argument("closed form needs a monic polynomial of degree " + std::to_string(degree));
  }
  if (!is_irreducible(scale_to_integral(f).poly)) throw std::invalid_argument("closed form needs an irreducible polynomial");
}

RatVector unit(std::size_t len, std::size_t i) {
  RatVector v(len, Rational(0));
  v[i] = 1;
  return v;
}

}  // namespace

ClosedFormHull closed_form_deg4(const RatPolynomial& f) {
  require_irreducible(f, 4);
  const Rational a = f.coefficient(3), b = f.coefficient(2), c = f.coefficient(1);
  const Rational inv = a * a * a - 4 * a * b + 8 * c;
  ClosedFormHull h;
  h.invariants = {inv};
  if (a == 0 && inv != 0) {
    h.case_id = 1;
    h.trace_zero = true;
  } else if (a == 0) {
    h.case_id = 2;
    h.gammas = {unit(4, 1), unit(4, 3)};
  } else if (inv != 0) {
    h.case_id = 3;
    h.gammas = {unit(4, 0), unit(4, 1), unit(4, 2), unit(4, 3)};
  } else {
    h.case_id = 4;
    RatVector v(4, Rational(0));
    v[2] = 1;
    v[3] = Rational(4) / (3 * a);
    h.gammas = {unit(4, 0), unit(4, 1), v};
  }
  return h;
}

ClosedFormHull closed_form_deg6(const RatPolynomial& f) {
  require_irreducible(f, 6);
  const Rational a = f.coefficient(5), b = f.coefficient(4), c = f.coefficient(3), d = f.coefficient(2),
                 e = f.coefficient(1);
  const Rational a2 = a * a, a3 = a2 * a, a5 = a3 * a2;
  const Rational r1 = c + Rational(5, 27) * (a3 - Rational(18, 5) * a * b);
  const Rational r2 = e - a5 / 81 + a3 * b / 27 - a * d / 3;
  ClosedFormHull h;
  h.invariants = {r1, r2};
  if (r1 == 0 && r2 == 0) {
    h.case_id = 1;
    RatVector v3(6, Rational(0)), v5(6, Rational(0));
    v3[2] = a / 2;
    v3[3] = 1;
    v5[2] = Rational(-5, 54) * a3;
    v5[4] = Rational(5, 6) * a;
    v5[5] = 1;
    h.gammas = {unit(6, 0), unit(6, 1), v3, v5};
  } else if (a != 0) {
    h.case_id = 2;
    for (std::size_t i = 0; i < 6; ++i) h.gammas.push_back(unit(6, i));
  } else {
    h.case_id = 2;
    h.trace_zero = true;
  }
  return h;
}

MatrixSpan materialize(const ClosedFormHull& form, const RatMatrix& x) {
  if (form.trace_zero) return trace_zero_subspace(power_basis(x));
  const std::size_t len = form.gammas.empty() ? 0 : form.gammas.front().size();
  if (len > static_cast<std::size_t>(min_poly(x).degree())) {
    throw std::invalid_argument("closed form has more coefficients than A(X) has dimensions");
  }
  return span_of_coefficients(x, form.gammas, len);
}

}  // namespace ahull
