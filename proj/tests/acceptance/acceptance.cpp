#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ahull/group_recipes.hpp"
#include "ahull/hull.hpp"
#include "commands.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace ahull;
using namespace ahull::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Collects the first few failure messages of a criterion.
class Check {
 public:
  void fail(const std::string& what) {
    pass_ = false;
    if (++failures_ <= 5) messages_ << (failures_ > 1 ? "; " : "") << what;
  }
  void expect(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
  Outcome done(const std::string& summary) const {
    std::ostringstream s;
    s << summary;
    if (!pass_) s << " | " << failures_ << " failure(s): " << messages_.str();
    return {pass_, s.str()};
  }

 private:
  bool pass_ = true;
  int failures_ = 0;
  std::ostringstream messages_;
};

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = load_corpus();
  return c;
}

const CorpusEntry& entry(const std::string& label) {
  for (const auto& e : corpus())
    if (e.label == label) return e;
  throw std::runtime_error("corpus has no entry " + label);
}

IntMatrix saturated_coefficients(const std::vector<RatVector>& rows, std::size_t len) { return saturate(rows, len); }

RatVector unit(std::size_t len, std::size_t i) {
  RatVector v(len, Rational(0));
  v[i] = 1;
  return v;
}

// 1. Quartics x^4 + b x^2 + c with b^2 - 4c non-square: hull spanned by X and X^3 on both routes.
Outcome ac1() {
  Check c;
  double worst = 0;
  for (const char* label : {"x4-2", "x4+1", "x4-x2+2"}) {
    const CorpusEntry& e = entry(label);
    const IntMatrix want = saturated_coefficients({unit(4, 1), unit(4, 3)}, 4);
    for (Route route : {Route::lll, Route::galois}) {
      const auto t = Clock::now();
      const HullResult h = hull_semisimple(e.companion(), e.hull_config(route, Mode::proven));
      const double s = seconds_since(t);
      worst = std::max(worst, s);
      const std::string tag = std::string(label) + "/" + to_string(route);
      c.expect(hnf(saturated_coefficients(h.witness.upsilon, 4)) == hnf(want), tag + " coefficient span differs");
      c.expect(h.span.equals(MatrixSpan(4, {e.companion(), e.companion().pow(3)})), tag + " span differs");
      c.expect(s < 30, tag + " took " + std::to_string(s) + " s");
      if (route == Route::galois) c.expect(!h.witness.lambda->fell_back, tag + " fell back to lll");
    }
  }
  return c.done("3 instances x 2 routes, slowest " + std::to_string(worst) + " s");
}

// 2. Closed form for quartics with group C4, V4 or D4 equals the computed hull.
Outcome ac2() {
  Check c;
  int n = 0;
  for (const auto& e : corpus()) {
    if (e.degree() != 4 || (e.group_order != 4 && e.group_order != 8)) continue;
    const RatMatrix x = e.companion();
    const MatrixSpan closed = materialize(closed_form_deg4(to_rational(e.poly)), x);
    const MatrixSpan computed = hull_semisimple(x, e.hull_config(Route::lll)).span;
    c.expect(closed.equals(computed), e.label + ": closed form dim " + std::to_string(closed.dim()) + " vs " +
                                          std::to_string(computed.dim()));
    ++n;
  }
  c.expect(n >= 10, "only " + std::to_string(n) + " quartics");
  return c.done(std::to_string(n) + " quartics");
}

// 3. Quintics: trace zero gives the trace-zero part of A(X) (dim 4), otherwise A(X) (dim 5).
Outcome ac3() {
  Check c;
  int zero = 0, nonzero = 0;
  for (const auto& e : corpus()) {
    if (e.degree() != 5) continue;
    const RatMatrix x = e.companion();
    const MatrixSpan h = hull_semisimple(x, e.hull_config(Route::lll)).span;
    if (x.trace() == 0) {
      c.expect(h.dim() == 4 && h.equals(trace_zero_subspace(power_basis(x))), e.label + " (trace 0) dim " + std::to_string(h.dim()));
      ++zero;
    } else {
      c.expect(h.dim() == 5 && h.equals(power_basis(x)), e.label + " (trace != 0) dim " + std::to_string(h.dim()));
      ++nonzero;
    }
  }
  c.expect(zero >= 5, "only " + std::to_string(zero) + " trace-zero quintics");
  c.expect(nonzero >= 1, "no trace-nonzero quintic");
  return c.done(std::to_string(zero) + " trace-zero and " + std::to_string(nonzero) + " other quintics");
}

// 4. Proven zero test accepts lattice rows and rejects random vectors outside the lattice.
Outcome ac4() {
  Check c;
  std::mt19937_64 rng(404);
  std::uniform_int_distribution<long> coeff(-10, 10);
  int instances = 0;
  long rejected = 0, accepted = 0;
  for (const auto& e : corpus()) {
    if (e.degree() != 2 && e.degree() != 4) continue;
    ++instances;
    RootContext ctx(e.poly, e.engine());
    const auto targets = root_targets(e.degree());
    const RelationBasis lam = find_relations_lll(targets, ctx, Mode::proven);
    const auto rows = to_rational_rows(lam.basis);
    for (const auto& r : lam.basis.row_list()) {
      const bool z = is_zero(ExponentPolynomial::combination(r, targets), ctx, Mode::proven).zero;
      c.expect(z, e.label + ": lattice row rejected");
      accepted += z;
    }
    for (int drawn = 0; drawn < 1000;) {
      IntVector v;
      for (std::size_t i = 0; i < e.degree(); ++i) v.emplace_back(coeff(rng));
      RatVector q(v.begin(), v.end());
      if (in_row_span(rows, q)) continue;
      ++drawn;
      const bool z = is_zero(ExponentPolynomial::combination(v, targets), ctx, Mode::proven).zero;
      c.expect(!z, e.label + ": false accept");
      rejected += !z;
    }
  }
  return c.done(std::to_string(instances) + " instances, " + std::to_string(accepted) + " rows accepted, " +
                std::to_string(rejected) + " outside vectors rejected");
}

// 5. Both relation-finding routes give the same lattice on the corpus.
Outcome ac5() {
  Check c;
  int n = 0;
  for (const auto& e : corpus()) {
    if (e.degree() > 8 || e.group_order > 48) continue;
    RootContext ctx(e.poly, e.engine());
    const PermGroup g = derive_group(e.group_recipe, ctx, e.group_order);
    const auto targets = root_targets(e.degree());
    const RelationBasis a = find_relations_lll(targets, ctx, Mode::proven);
    const RelationBasis b = find_relations_galois(targets, ctx, g, Mode::proven);
    c.expect(hnf(a.basis) == hnf(b.basis), e.label + ": lattices differ");
    c.expect(!b.fell_back, e.label + ": galois route fell back");
    c.expect(a.basis.rows() == e.expected_lambda_rank, e.label + ": rank differs from the floating-point oracle");
    ++n;
  }
  return c.done(std::to_string(n) + " polynomials");
}

// 6. LLL output is size-reduced, satisfies Lovasz, spans the same lattice and meets the length bound.
Outcome ac6() {
  Check c;
  std::mt19937_64 rng(606);
  int n = 0, bounded = 0;
  while (n < 500) {
    const std::size_t r = 1 + rng() % 8;
    const std::size_t cols = r + rng() % 3;
    const long range = 1 + static_cast<long>(rng() % 100);
    const IntMatrix b = random_int_matrix(rng, r, cols, range);
    if (rank(to_rational_rows(b)) < r) continue;
    ++n;
    const IntMatrix red = lll_reduce(b);
    const GramSchmidt gs = gram_schmidt(red);
    c.expect(is_size_reduced(gs), "lattice " + std::to_string(n) + " not size-reduced");
    c.expect(satisfies_lovasz(gs, Rational(3, 4)), "lattice " + std::to_string(n) + " violates Lovasz");
    c.expect(hnf(red) == hnf(b), "lattice " + std::to_string(n) + " changed");
    if (r <= 5) {
      ++bounded;
      const Integer lambda1 = shortest_vector_norm(b);
      c.expect(norm_squared(red.row(0)) <= ipow(Integer(2), r - 1) * lambda1,
               "lattice " + std::to_string(n) + " first vector too long");
    }
  }
  return c.done(std::to_string(n) + " lattices, " + std::to_string(bounded) + " checked against enumeration");
}

// 7. Rational reconstruction round trips; inputs without an in-bound fraction fail.
Outcome ac7() {
  Check c;
  std::mt19937_64 rng(707);
  const std::vector<std::pair<std::string, Integer>> classes{
      {"7^4", ipow(Integer(7), 4)},   {"7^20", ipow(Integer(7), 20)},       {"2^64", ipow(Integer(2), 64)},
      {"3^41", ipow(Integer(3), 41)}, {"1000000007", Integer(1000000007)}, {"13^100", ipow(Integer(13), 100)}};
  gmp_randclass gr(gmp_randinit_default);
  gr.seed(707);
  long trips = 0;
  for (const auto& [name, m] : classes) {
    const Integer bound = isqrt((m - 1) / 2);
    for (int i = 0; i < 1000; ++i) {
      Integer u = gr.get_z_range(2 * bound + 1) - bound;
      Integer v = gr.get_z_range(bound) + 1;
      if (gcd(v, m) != 1) {
        --i;
        continue;
      }
      Integer vinv;
      mpz_invert(vinv.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
      const Integer a = mod(u * vinv, m);
      const auto r = rational_reconstruction(a, m);
      c.expect(r && *r == make_rational(u, v), name + ": round trip failed for " + to_string(make_rational(u, v)));
      ++trips;
    }
    // Fractions well outside the bound: any answer must still be a valid in-bound reconstruction.
    for (int i = 0; i < 200; ++i) {
      Integer u = gr.get_z_range(m / 2) + 4 * bound;
      Integer v = gr.get_z_range(m / 2) + 4 * bound;
      if (gcd(v, m) != 1) continue;
      Integer vinv;
      mpz_invert(vinv.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
      const Integer a = mod(u * vinv, m);
      if (const auto r = rational_reconstruction(a, m)) {
        const Integer num = r->get_num(), den = r->get_den();
        c.expect(abs(num) <= bound && den <= bound && mod(num - a * den, m) == 0, name + ": invalid reconstruction");
      }
    }
  }
  // Exhaustive out-of-bound check on small moduli against brute force.
  long failures_checked = 0;
  for (const Integer& m : {Integer(49), Integer(343), Integer(1024), Integer(729), Integer(1009)}) {
    const Integer bound = isqrt((m - 1) / 2);
    const long bl = bound.get_si();
    for (long a = 0; a < m.get_si(); ++a) {
      bool exists = false;
      for (long v = 1; v <= bl && !exists; ++v) {
        if (gcd(Integer(v), m) != 1) continue;
        for (long u = -bl; u <= bl && !exists; ++u) exists = mod(Integer(u - a * v), m) == 0;
      }
      const auto r = rational_reconstruction(Integer(a), m);
      c.expect(r.has_value() == exists, "modulus " + to_string(m) + " residue " + std::to_string(a));
      if (!exists) ++failures_checked;
    }
  }
  return c.done(std::to_string(trips) + " round trips over " + std::to_string(classes.size()) + " modulus classes, " +
                std::to_string(failures_checked) + " out-of-bound residues fail");
}

// 8. Hensel lifts satisfy f(alpha) = 0 mod p^k and stay consistent when precision grows.
Outcome ac8() {
  Check c;
  long lifts = 0;
  for (const auto& e : corpus()) {
    RootContext ctx(e.poly, e.engine());
    const unsigned proven_k = find_relations_lll(root_targets(e.degree()), ctx, Mode::proven).bounds.k;
    const ApproxRoots base = ctx.roots_at(1);
    for (unsigned k : {1u, 5u, 20u, proven_k}) {
      const ApproxRoots r = ctx.roots_at(k);
      for (const auto& a : r.roots) {
        PadicElement acc(r.ring);
        for (auto it = e.poly.coefficients().rbegin(); it != e.poly.coefficients().rend(); ++it)
          acc = acc * a + PadicElement::from_integer(r.ring, *it);
        const auto v = valuation(acc);
        c.expect(!v.has_value() || *v >= k, e.label + ": residual at k=" + std::to_string(k));
        ++lifts;
      }
      c.expect(r.truncate(1).roots == base.roots, e.label + ": labeling changed at k=" + std::to_string(k));
      const ApproxRoots fresh = increase_precision(base, k);
      c.expect(fresh.roots == r.roots, e.label + ": increase_precision disagrees at k=" + std::to_string(k));
    }
  }
  return c.done(std::to_string(lifts) + " root lifts checked");
}

// 9. Jordan decomposition postconditions on random matrices.
Outcome ac9() {
  Check c;
  std::mt19937_64 rng(909);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng() % 6;
    const RatMatrix x = i % 2 ? random_rational_matrix(rng, n, 9, 4) : random_jordan_matrix(rng, n);
    const JordanDecomposition jd = jordan_decomposition(x);
    const std::string tag = "matrix " + std::to_string(i);
    c.expect(jd.semisimple + jd.nilpotent == x, tag + ": S + N != X");
    c.expect(jd.semisimple * jd.nilpotent == jd.nilpotent * jd.semisimple, tag + ": SN != NS");
    c.expect(is_semisimple(jd.semisimple), tag + ": S not semisimple");
    c.expect(jd.nilpotent.pow(n).is_zero(), tag + ": N not nilpotent");
  }
  return c.done("1000 matrices");
}

// 10. Hull invariants on the corpus.
Outcome ac10() {
  Check c;
  for (const auto& e : corpus()) {
    const RatMatrix x = e.companion();
    const HullConfig cfg = e.hull_config(Route::lll);
    const HullResult h = hull_semisimple(x, cfg);
    const MatrixSpan ax = power_basis(x);
    c.expect(h.span.contains(x), e.label + ": X not in hull");
    c.expect(ax.contains(h.span), e.label + ": hull not in A(X)");
    c.expect(h.dim() == e.expected_dim, e.label + ": dim " + std::to_string(h.dim()) + " expected " +
                                            std::to_string(e.expected_dim));
    c.expect(h.dim() == h.witness.t_plus_one - h.witness.constraint_rank, e.label + ": dimension formula");
    bool trace_ok = true;
    if (x.trace() == 0)
      for (const auto& b : h.span.basis()) trace_ok = trace_ok && b.trace() == 0;
    // Permutation module: the trace functional cuts out exactly the trace-zero part when X is traceless.
    if (x.trace() == 0 && h.dim() == ax.dim() - 1) trace_ok = trace_ok && h.span.equals(trace_zero_subspace(ax));
    c.expect(trace_ok, e.label + ": trace invariant");
    c.expect(hull_lie_algebra(h.span.basis(), cfg).span.equals(h.span), e.label + ": hull not idempotent");
  }
  return c.done(std::to_string(corpus().size()) + " corpus instances");
}

// 11. Heuristic mode gives the proven hulls on every route.
Outcome ac11() {
  Check c;
  for (const auto& e : corpus()) {
    const RatMatrix x = e.companion();
    const MatrixSpan proven = hull_semisimple(x, e.hull_config(Route::lll, Mode::proven)).span;
    const MatrixSpan heur = hull_semisimple(x, e.hull_config(Route::lll, Mode::heuristic)).span;
    c.expect(proven.equals(heur), e.label + ": lll heuristic differs");
    if (e.group_order <= 48) {
      const MatrixSpan gh = hull_semisimple(x, e.hull_config(Route::galois, Mode::heuristic)).span;
      const MatrixSpan gp = hull_semisimple(x, e.hull_config(Route::galois, Mode::proven)).span;
      c.expect(proven.equals(gh) && proven.equals(gp), e.label + ": galois route differs");
    }
  }
  return c.done(std::to_string(corpus().size()) + " corpus instances");
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v.empty() ? 0 : v[v.size() / 2];
}

// 12. Bench over the corpus: time budget, CSV shape and cost growing with group order.
Outcome ac12() {
  Check c;
  std::ifstream in(data_path("corpus.json"));
  const auto corpus_json = cli::json::parse(in);
  const auto t = Clock::now();
  const cli::BenchReport report = cli::cmd_bench(cli::parse_corpus(corpus_json), {});
  const double total = seconds_since(t);
  c.expect(total < 600, "bench took " + std::to_string(total) + " s");
  c.expect(report.failures == 0 && report.mismatches == 0,
           std::to_string(report.failures) + " failures, " + std::to_string(report.mismatches) + " mismatches");

  std::istringstream csv(report.csv());
  std::string line;
  std::getline(csv, line);
  c.expect(line == "label,route,mode,p,f_p,k,seconds,dim,ok", "bad header " + line);
  std::size_t rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    c.expect(std::count(line.begin(), line.end(), ',') == 8, "bad row " + line);
  }
  c.expect(rows == report.rows.size() && rows >= corpus_json.size() * 2, "row count " + std::to_string(rows));

  // Per polynomial cost (both relation routes) against group order: compare the low and high thirds.
  std::map<std::string, std::pair<double, std::uint64_t>> cost;
  for (const auto& r : report.rows) {
    if (r.route == "fast-path" || !r.group_order) continue;
    cost[r.label].first += r.seconds;
    cost[r.label].second = *r.group_order;
  }
  std::vector<std::pair<std::uint64_t, double>> points;
  for (const auto& [label, v] : cost) points.emplace_back(v.second, v.first);
  std::sort(points.begin(), points.end());
  const std::size_t third = points.size() / 3;
  std::vector<double> low, high;
  for (std::size_t i = 0; i < third; ++i) low.push_back(points[i].second);
  for (std::size_t i = points.size() - third; i < points.size(); ++i) high.push_back(points[i].second);
  const double ml = median(low), mh = median(high);
  c.expect(mh > ml, "no growth with group order (" + std::to_string(ml) + " vs " + std::to_string(mh) + " s)");

  std::ofstream("acceptance_bench.csv") << report.csv();
  std::ofstream("acceptance_bench.dat") << report.gnuplot();
  std::ostringstream s;
  s << rows << " rows in " << total << " s; median cost " << ml << " s (low group orders) vs " << mh
    << " s (high group orders)";
  return c.done(s.str());
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4},   {"AC5", ac5},   {"AC6", ac6},
      {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}, {"AC11", ac11}, {"AC12", ac12}};
  std::vector<std::string> only(argv + 1, argv + argc);
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), name) == only.end()) continue;
    const auto t = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%-5s %s  (%.1f s)  %s\n", name.c_str(), o.pass ? "PASS" : "FAIL", seconds_since(t), o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
