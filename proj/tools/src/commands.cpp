#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "ahull/group_recipes.hpp"

namespace ahull::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

template <class T>
std::optional<T> field(const json& in, const char* key) {
  if (!in.is_object() || !in.contains(key) || in[key].is_null()) return std::nullopt;
  return in[key].get<T>();
}

std::optional<std::uint64_t> parse_prime(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "auto") return std::nullopt;
    return static_cast<std::uint64_t>(std::stoull(s));
  }
  if (j.is_number_unsigned() || j.is_number_integer()) return j.get<std::uint64_t>();
  throw InputError("prime must be \"auto\" or an integer");
}

EngineOptions engine_options(const json& in, const JobConfig& c) {
  EngineOptions o;
  if (c.mode) {
    o.mode = *c.mode;
  } else if (auto m = field<std::string>(in, "mode")) {
    o.mode = parse_mode(*m);
  }
  if (c.prime) {
    o.prime = c.prime;
  } else if (in.is_object() && in.contains("prime")) {
    o.prime = parse_prime(in["prime"]);
  }
  if (c.prime_search_limit) {
    o.prime_search_limit = *c.prime_search_limit;
  } else if (auto l = field<unsigned>(in, "prime_search_limit")) {
    o.prime_search_limit = *l;
  }
  if (c.seed) {
    o.seed = *c.seed;
  } else if (auto s = field<std::uint64_t>(in, "seed")) {
    o.seed = *s;
  }
  if (c.delta) {
    o.delta = *c.delta;
  } else if (in.is_object() && in.contains("delta")) {
    o.delta = io::parse_rational(in["delta"]);
  }
  if (in.is_object() && in.contains("group_order")) o.group_order = io::parse_integer(in["group_order"]);
  if (auto m = field<unsigned long>(in, "max_precision")) o.max_precision = *m;
  return o;
}

/// Group specification from --group (file) or the "group" input field; null if absent.
json group_spec(const json& in, const JobConfig& c) {
  if (c.group_path) return read_json_file(*c.group_path);
  if (in.is_object() && in.contains("group")) return in["group"];
  return nullptr;
}

Route route_for(const json& in, const JobConfig& c, bool have_group) {
  if (c.route) return *c.route;
  if (auto r = field<std::string>(in, "route")) return parse_route(*r);
  return have_group ? Route::galois : Route::lll;
}

/// Fixes the prime a derived-group recipe needs, unless the user already chose one.
void prepare_recipe_prime(const json& spec, const IntPolynomial& f, EngineOptions& o) {
  if (!spec.is_string() || o.prime) return;
  if (!o.group_order) throw InputError("a derived group needs \"group_order\"");
  o.prime = recipe_prime(spec.get<std::string>(), f, o.group_order->get_ui());
}

PermGroup resolve_group(const json& spec, RootContext& ctx) {
  if (spec.is_string()) {
    const auto recipe = spec.get<std::string>();
    if (!is_group_recipe(recipe)) throw InputError("unknown group recipe \"" + recipe + "\"");
    const auto& order = ctx.options().group_order;
    if (!order) throw InputError("a derived group needs \"group_order\"");
    return derive_group(recipe, ctx, order->get_ui());
  }
  PermGroup g(ctx.degree(), io::parse_permutations(spec, ctx.degree()), GroupProvenance::user_supplied);
  if (!validate_group(g, ctx)) throw InputError("group does not act consistently on the labeled roots");
  return g;
}

json timing_json(double total, double prime) {
  return json{{"total_seconds", total},
              {"prime_selection_seconds", prime},
              {"excluding_prime_selection_seconds", std::max(0.0, total - prime)}};
}

double time_prime_selection(const IntPolynomial& f, const EngineOptions& o) {
  const auto t0 = Clock::now();
  RootContext warm(f, o);
  return seconds_since(t0);
}

std::vector<ExponentPolynomial> parse_targets(const json& in, std::size_t n) {
  if (!in.contains("targets")) return root_targets(n);
  const json& t = in["targets"];
  if (!t.is_array() || t.empty()) throw InputError("\"targets\" must be a nonempty list");
  std::vector<ExponentPolynomial> out;
  for (const auto& g : t) out.push_back(io::parse_target(g, n));
  return out;
}

IntPolynomial parse_poly(const json& in) {
  if (!in.is_object() || !in.contains("poly")) throw InputError("missing \"poly\"");
  return io::parse_monic_integral(in["poly"]);
}

/// Squarefree integral polynomial whose roots hull_semisimple labels for X.
IntPolynomial hull_polynomial(const RatMatrix& x) {
  const RatMatrix s = jordan_decomposition(x).semisimple;
  const IntegralScaling sc = scale_to_integral(char_poly(s));
  return to_integral(squarefree_part(to_rational(sc.poly)));
}

void apply_assertions(const json& in, HullConfig& cfg) {
  if (!in.is_object() || !in.contains("assert_group")) return;
  const json& a = in["assert_group"];
  if (a.is_number_integer()) {
    cfg.sextic_group_id = a.get<int>();
  } else if (a.is_string()) {
    const auto s = a.get<std::string>();
    if (s == "2-transitive") {
      cfg.two_transitive_asserted = true;
    } else if (s == "C4" || s == "V4" || s == "D4") {
      cfg.quartic_group_asserted = true;
    } else {
      throw InputError("unsupported assert_group \"" + s + "\"");
    }
  } else if (a.is_boolean()) {
    cfg.quartic_group_asserted = a.get<bool>();
  } else {
    throw InputError("assert_group must be a string, integer or boolean");
  }
}

CommandResult guarded(const std::function<json()>& body) {
  CommandResult r;
  try {
    r.output = body();
  } catch (const PrecisionError& e) {
    r.exit_code = kEscalation;
    r.diagnostic = std::string(e.what()) + " (required precision " + std::to_string(e.required_precision()) + ")";
  } catch (const json::exception& e) {
    r.exit_code = kInputError;
    r.diagnostic = e.what();
  } catch (const std::invalid_argument& e) {
    r.exit_code = kInputError;
    r.diagnostic = e.what();
  } catch (const std::domain_error& e) {
    r.exit_code = kInputError;
    r.diagnostic = e.what();
  } catch (const std::out_of_range& e) {
    r.exit_code = kInputError;
    r.diagnostic = e.what();
  } catch (const std::runtime_error& e) {
    r.exit_code = kEscalation;
    r.diagnostic = e.what();
  } catch (const std::exception& e) {
    r.exit_code = kInternal;
    r.diagnostic = e.what();
  }
  if (r.exit_code != kOk) r.output = json{{"error", r.diagnostic}, {"exit_code", r.exit_code}};
  return r;
}

json lie_algebra_json(const HullResult& h) {
  json basis = json::array();
  for (const auto& m : h.span.basis()) basis.push_back(io::to_json(m));
  return json{{"basis", std::move(basis)},
              {"dim", h.dim()},
              {"route", to_string(h.route)},
              {"mode", to_string(h.mode)},
              {"certification", h.certification}};
}

json closed_form_json(const ClosedFormHull& form, const RatMatrix& x) {
  json invariants = json::array();
  for (const auto& v : form.invariants) invariants.push_back(io::to_json(v));
  json gammas = json::array();
  for (const auto& g : form.gammas) {
    json row = json::array();
    for (const auto& v : g) row.push_back(io::to_json(v));
    gammas.push_back(std::move(row));
  }
  const MatrixSpan span = materialize(form, x);
  json basis = json::array();
  for (const auto& m : span.basis()) basis.push_back(io::to_json(m));
  return json{{"case", form.case_id},
              {"trace_zero", form.trace_zero},
              {"gammas", std::move(gammas)},
              {"invariants", std::move(invariants)},
              {"basis", std::move(basis)},
              {"dim", span.dim()},
              {"route", "closed-form"}};
}

CommandResult oracle(const json& in, const JobConfig& c, int degree) {
  return guarded([&]() {
    if (!in.is_object() || !in.contains("poly")) throw InputError("missing \"poly\"");
    const RatPolynomial f = io::parse_polynomial(in["poly"]);
    if (f.degree() != degree) throw InputError("expected a polynomial of degree " + std::to_string(degree));
    if (!in.contains("assert_group")) throw InputError("closed forms need an \"assert_group\" assertion");
    const json& a = in["assert_group"];
    if (degree == 4) {
      const bool ok = (a.is_boolean() && a.get<bool>()) ||
                      (a.is_string() && (a == "C4" || a == "V4" || a == "D4"));
      if (!ok) throw InputError("quartic closed form needs assert_group C4, V4, D4 or true");
    } else {
      const int id = a.is_number_integer() ? a.get<int>() : -1;
      if (id != 4 && id != 6 && id != 7 && id != 8 && id != 11) {
        throw InputError("sextic closed form needs assert_group in {4, 6, 7, 8, 11}");
      }
    }
    const RatMatrix x = companion_matrix(f);
    const ClosedFormHull form = degree == 4 ? closed_form_deg4(f) : closed_form_deg6(f);
    json out = closed_form_json(form, x);
    out["certification"] = "asserted";
    if (in.value("cross_check", false)) {
      HullConfig cfg;
      cfg.engine = engine_options(in, c);
      const HullResult h = hull_semisimple(x, cfg);
      out["cross_check"] = json{{"relation_based_dim", h.dim()}, {"agrees", h.span.equals(materialize(form, x))}};
    }
    return out;
  });
}

std::string format_seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << s;
  return os.str();
}

}  // namespace

CommandResult cmd_hull(const json& in, const JobConfig& c) {
  return guarded([&]() {
    if (!in.is_object()) throw InputError("hull input must be a JSON object");
    HullConfig cfg;
    cfg.engine = engine_options(in, c);
    cfg.trust_assertion = c.trust_assertion || in.value("trust_assertion", false);
    apply_assertions(in, cfg);
    const json spec = group_spec(in, c);
    cfg.route = route_for(in, c, !spec.is_null());

    if (in.contains("lie_algebra")) {
      if (!spec.is_null()) throw InputError("a group applies to a single matrix, not to a Lie algebra");
      std::vector<RatMatrix> gens;
      if (!in["lie_algebra"].is_array() || in["lie_algebra"].empty()) {
        throw InputError("\"lie_algebra\" must be a nonempty list of matrices");
      }
      for (const auto& m : in["lie_algebra"]) gens.push_back(io::parse_matrix(m));
      const auto t0 = Clock::now();
      HullCache cache;
      const HullResult h = hull_lie_algebra(gens, cfg, &cache);
      const double total = seconds_since(t0);
      json out = lie_algebra_json(h);
      out["input_dim"] = bracket_closure(MatrixSpan::spanned_by(gens.front().rows(), gens)).dim();
      out["algebraic"] = out["input_dim"] == out["dim"];
      if (c.timings) out["timings"] = timing_json(total, 0.0);
      return out;
    }
    if (!in.contains("matrix")) throw InputError("hull input needs \"matrix\" or \"lie_algebra\"");
    const RatMatrix x = io::parse_matrix(in["matrix"]);
    const IntPolynomial f = hull_polynomial(x);
    if (!spec.is_null()) {
      prepare_recipe_prime(spec, f, cfg.engine);
      RootContext ctx(f, cfg.engine);
      if (spec.is_string()) {
        cfg.group = resolve_group(spec, ctx);
      } else {
        cfg.group = PermGroup(ctx.degree(), io::parse_permutations(spec, ctx.degree()), GroupProvenance::user_supplied);
      }
    }
    const double prime_t = c.timings ? time_prime_selection(f, cfg.engine) : 0.0;
    const auto t0 = Clock::now();
    const HullResult h = hull_matrix(x, cfg);
    const double total = seconds_since(t0);
    json out = io::to_json(h);
    out["engine_route"] = to_string(cfg.route);
    if (cfg.group) out["group_provenance"] = to_string(cfg.group->provenance());
    if (h.mode == Mode::heuristic && h.witness.lambda) out["verify_precision"] = h.witness.lambda->verify_precision;
    if (c.verbose && f.degree() >= 1) {
      RootContext ctx(f, cfg.engine);
      out["diagnostics"] = json{{"polynomial", io::to_json(f)}, {"roots", io::to_json(ctx.roots_at(1))}};
    }
    if (c.timings) out["timings"] = timing_json(total, prime_t);
    return out;
  });
}

CommandResult cmd_relations(const json& in, const JobConfig& c) {
  return guarded([&]() {
    const IntPolynomial f = parse_poly(in);
    EngineOptions o = engine_options(in, c);
    const json spec = group_spec(in, c);
    const Route route = route_for(in, c, !spec.is_null());
    prepare_recipe_prime(spec, f, o);
    const double prime_t = c.timings ? time_prime_selection(f, o) : 0.0;
    const auto t0 = Clock::now();
    RootContext ctx(f, o);
    const auto targets = parse_targets(in, ctx.degree());
    RelationBasis r;
    std::optional<PermGroup> group;
    if (route == Route::galois) {
      group = spec.is_null() ? frobenius_group(ctx.roots_at(1)) : resolve_group(spec, ctx);
      r = find_relations_galois(targets, ctx, *group, o.mode);
    } else {
      r = find_relations_lll(targets, ctx, o.mode);
    }
    const double total = seconds_since(t0);
    json out = io::to_json(r);
    if (group) out["group_provenance"] = to_string(group->provenance());
    if (c.verbose) out["diagnostics"] = json{{"roots", io::to_json(ctx.roots_at(1))}};
    if (c.timings) out["timings"] = timing_json(total, prime_t);
    return out;
  });
}

CommandResult cmd_iszero(const json& in, const JobConfig& c) {
  return guarded([&]() {
    const IntPolynomial f = parse_poly(in);
    const EngineOptions o = engine_options(in, c);
    const double prime_t = c.timings ? time_prime_selection(f, o) : 0.0;
    const auto t0 = Clock::now();
    RootContext ctx(f, o);
    std::vector<ExponentPolynomial> targets;
    const bool single = in.contains("target");
    if (single) {
      targets.push_back(io::parse_target(in["target"], ctx.degree()));
    } else {
      targets = parse_targets(in, ctx.degree());
    }
    const std::optional<unsigned> k = field<unsigned>(in, "precision");
    json results = json::array();
    for (const auto& g : targets) {
      const ZeroTest z = is_zero(g, ctx, o.mode, k);
      json r{{"result", z.zero},
             {"mode", to_string(z.mode)},
             {"precision", z.precision},
             {"bound", io::to_json(z.bound)},
             {"p", ctx.selection().p},
             {"f_p", ctx.selection().f_p}};
      r["valuation"] = z.valuation ? json(*z.valuation) : json(nullptr);
      results.push_back(std::move(r));
    }
    const double total = seconds_since(t0);
    json out = single ? results[0] : json{{"results", results}};
    if (c.verbose) out["diagnostics"] = json{{"roots", io::to_json(ctx.roots_at(1))}};
    if (c.timings) out["timings"] = timing_json(total, prime_t);
    return out;
  });
}

CommandResult cmd_lll(const json& in, const JobConfig& c) {
  return guarded([&]() {
    const json& m = in.is_object() ? in.at("basis") : in;
    const IntMatrix b = io::parse_int_matrix(m);
    for (const auto& r : b.row_list()) {
      if (r.size() != b.cols()) throw InputError("basis rows must have equal length");
    }
    Rational delta(3, 4);
    if (c.delta) {
      delta = *c.delta;
    } else if (in.is_object() && in.contains("delta")) {
      delta = io::parse_rational(in["delta"]);
    }
    return io::to_json(lll_reduce(b, delta));
  });
}

CommandResult cmd_jordan(const json& in, const JobConfig&) {
  return guarded([&]() {
    const RatMatrix x = io::parse_matrix(in.is_object() ? in.at("matrix") : in);
    const JordanDecomposition jd = jordan_decomposition(x);
    return json{{"semisimple", io::to_json(jd.semisimple)}, {"nilpotent", io::to_json(jd.nilpotent)}};
  });
}

CommandResult cmd_oracle_deg4(const json& in, const JobConfig& c) { return oracle(in, c, 4); }
CommandResult cmd_oracle_deg6(const json& in, const JobConfig& c) { return oracle(in, c, 6); }

std::vector<CorpusEntry> parse_corpus(const json& corpus) {
  if (!corpus.is_array()) throw InputError("corpus must be a JSON array");
  std::vector<CorpusEntry> out;
  for (const auto& e : corpus) {
    if (!e.is_object()) throw InputError("corpus entries must be objects");
    CorpusEntry c;
    c.label = e.value("label", "entry" + std::to_string(out.size() + 1));
    if (e.contains("poly")) {
      c.poly = io::parse_monic_integral(e["poly"]);
    } else if (e.contains("matrix")) {
      c.matrix = io::parse_matrix(e["matrix"]);
    } else {
      throw InputError("corpus entry " + c.label + " has neither poly nor matrix");
    }
    if (e.contains("group_order")) c.group_order = e["group_order"].get<std::uint64_t>();
    if (e.contains("group")) c.group = e["group"];
    if (e.contains("expected_dim")) c.expected_dim = e["expected_dim"].get<std::size_t>();
    out.push_back(std::move(c));
  }
  return out;
}

BenchReport cmd_bench(const std::vector<CorpusEntry>& corpus, const JobConfig& c) {
  BenchReport report;
  const auto t_all = Clock::now();
  const Mode mode = c.mode.value_or(Mode::proven);
  for (const auto& entry : corpus) {
    const RatMatrix x = entry.matrix ? *entry.matrix : companion_matrix(to_rational(*entry.poly));
    HullConfig base;
    base.engine.mode = mode;
    if (c.prime_search_limit) base.engine.prime_search_limit = *c.prime_search_limit;
    if (c.seed) base.engine.seed = *c.seed;
    if (c.delta) base.engine.delta = *c.delta;
    if (entry.group_order) base.engine.group_order = Integer(static_cast<unsigned long>(*entry.group_order));

    std::optional<MatrixSpan> reference;
    auto record = [&](BenchRow row, const std::optional<MatrixSpan>& span) {
      if (row.ok && entry.expected_dim && row.dim != *entry.expected_dim) {
        row.ok = false;
        row.note = "expected dim " + std::to_string(*entry.expected_dim);
        ++report.mismatches;
      } else if (row.ok && span && reference && !span->equals(*reference)) {
        row.ok = false;
        row.note = "span differs from route lll";
        ++report.mismatches;
      }
      if (span && !reference) reference = span;
      report.rows.push_back(std::move(row));
    };
    auto failed = [&](BenchRow row, const std::exception& e) {
      row.ok = false;
      row.note = e.what();
      ++report.failures;
      report.rows.push_back(std::move(row));
    };

    for (Route route : {Route::lll, Route::galois}) {
      BenchRow row;
      row.label = entry.label;
      row.route = to_string(route);
      row.mode = to_string(mode);
      row.group_order = entry.group_order;
      try {
        HullConfig cfg = base;
        cfg.route = route;
        const IntPolynomial f = hull_polynomial(x);
        if (route == Route::galois && !entry.group.is_null()) {
          prepare_recipe_prime(entry.group, f, cfg.engine);
          RootContext ctx(f, cfg.engine);
          cfg.group = resolve_group(entry.group, ctx);
        }
        if (c.prime) cfg.engine.prime = c.prime;
        row.prime_seconds = time_prime_selection(f, cfg.engine);
        const auto t0 = Clock::now();
        const HullResult h = hull_matrix(x, cfg);
        row.seconds = seconds_since(t0);
        row.p = h.witness.p;
        row.f_p = h.witness.f_p;
        row.k = h.witness.precision;
        row.dim = h.dim();
        row.ok = true;
        if (h.witness.lambda && h.witness.lambda->fell_back) row.note = "fell back to lll";
        record(std::move(row), h.span);
      } catch (const std::exception& e) {
        failed(std::move(row), e);
      }
    }

    const RatPolynomial cp = char_poly(x);
    const bool prime_degree = is_probable_prime(x.rows());
    bool two_transitive = false;
    if (!prime_degree && entry.poly && entry.group.is_string() && entry.group_order) {
      try {
        EngineOptions o = base.engine;
        prepare_recipe_prime(entry.group, *entry.poly, o);
        RootContext ctx(*entry.poly, o);
        two_transitive = is_two_transitive(resolve_group(entry.group, ctx)).value_or(false);
      } catch (const std::exception&) {
        two_transitive = false;
      }
    }
    if (prime_degree || two_transitive) {
      BenchRow row;
      row.label = entry.label;
      row.route = "fast-path";
      row.mode = to_string(mode);
      row.group_order = entry.group_order;
      try {
        const auto t0 = Clock::now();
        const auto span = fast_path_hull(x, markers_for(x, two_transitive));
        row.seconds = seconds_since(t0);
        if (span) {
          row.dim = span->dim();
          row.ok = true;
          record(std::move(row), *span);
        }
      } catch (const std::exception& e) {
        failed(std::move(row), e);
      }
    }
  }
  report.total_seconds = seconds_since(t_all);
  return report;
}

std::string BenchReport::csv() const {
  std::ostringstream os;
  os << "label,route,mode,p,f_p,k,seconds,dim,ok\n";
  for (const auto& r : rows) {
    os << r.label << ',' << r.route << ',' << r.mode << ',' << r.p << ',' << r.f_p << ',' << r.k << ','
       << format_seconds(r.seconds) << ',' << r.dim << ',' << (r.ok ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string BenchReport::gnuplot() const {
  std::ostringstream os;
  os << "# log_group_order seconds route label\n";
  for (const auto& r : rows) {
    if (!r.group_order || !r.ok) continue;
    os << std::fixed << std::setprecision(6) << std::log(static_cast<double>(*r.group_order)) << ' '
       << format_seconds(r.seconds) << ' ' << r.route << ' ' << r.label << '\n';
  }
  return os.str();
}

json BenchReport::summary() const {
  json notes = json::array();
  for (const auto& r : rows)
    if (!r.note.empty()) notes.push_back(json{{"label", r.label}, {"route", r.route}, {"note", r.note}});
  return json{{"rows", rows.size()},
              {"failures", failures},
              {"mismatches", mismatches},
              {"total_seconds", total_seconds},
              {"notes", std::move(notes)}};
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Algebraic hulls of matrix Lie algebras over Q"};
  app.require_subcommand(1);
  app.fallthrough();

  JobConfig config;
  std::string mode_text, prime_text, delta_text, route_text;
  std::uint64_t seed = 0;
  unsigned limit = 0;
  std::string group_path, out_path, gnuplot_path;
  app.add_option("--mode", mode_text, "proven or heuristic")->check(CLI::IsMember({"proven", "heuristic"}));
  app.add_option("--prime", prime_text, "auto or a fixed admissible prime");
  app.add_option("--prime-search-limit", limit, "number of admissible primes scanned");
  app.add_option("--seed", seed, "seed for random choices");
  app.add_option("--delta", delta_text, "LLL parameter, e.g. 3/4");
  app.add_option("--route", route_text, "lll or galois")->check(CLI::IsMember({"lll", "galois"}));
  app.add_option("--group", group_path, "JSON file with 1-based permutation images");
  app.add_flag("--trust-assertion", config.trust_assertion, "let group assertions select fast paths");
  app.add_flag("--verbose", config.verbose, "include root diagnostics");
  app.add_flag("--timings", config.timings, "include wall-clock timings");
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  std::string input = "-";
  const std::vector<std::pair<std::string, std::function<CommandResult(const json&, const JobConfig&)>>> commands{
      {"hull", cmd_hull},         {"relations", cmd_relations},       {"iszero", cmd_iszero},
      {"lll", cmd_lll},           {"jordan", cmd_jordan},             {"oracle-deg4", cmd_oracle_deg4},
      {"oracle-deg6", cmd_oracle_deg6}};
  for (const auto& [name, fn] : commands) {
    app.add_subcommand(name, "run " + name + " on a JSON document")->add_option("input", input, "input file, - for stdin");
  }
  auto* bench = app.add_subcommand("bench", "time the hull routes over a corpus and write CSV");
  bench->add_option("corpus", input, "corpus JSON file")->required();
  bench->add_option("--gnuplot", gnuplot_path, "also write time vs log(group order) data");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (!mode_text.empty()) config.mode = parse_mode(mode_text);
    if (!prime_text.empty() && prime_text != "auto") config.prime = parse_prime(json(prime_text));
    if (limit) config.prime_search_limit = limit;
    if (app.count("--seed")) config.seed = seed;
    if (!delta_text.empty()) config.delta = parse_rational(delta_text);
    if (!route_text.empty()) config.route = parse_route(route_text);
    if (!group_path.empty()) config.group_path = group_path;
    if (!out_path.empty()) config.out_path = out_path;
    if (!gnuplot_path.empty()) config.gnuplot_path = gnuplot_path;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  auto emit = [&](const std::string& text) -> bool {
    if (!config.out_path) {
      out << text;
      return true;
    }
    std::ofstream f(*config.out_path);
    f << text;
    if (!f) {
      err << "error: cannot write " << *config.out_path << '\n';
      return false;
    }
    return true;
  };

  json doc;
  try {
    if (input == "-") {
      doc = json::parse(std::string(std::istreambuf_iterator<char>(std::cin), {}));
    } else {
      doc = read_json_file(input);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  if (bench->parsed()) {
    std::vector<CorpusEntry> corpus;
    try {
      corpus = parse_corpus(doc);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kInputError;
    }
    const BenchReport report = cmd_bench(corpus, config);
    if (!emit(report.csv())) return kInputError;
    if (config.gnuplot_path) {
      std::ofstream g(*config.gnuplot_path);
      g << report.gnuplot();
    }
    err << report.summary().dump() << '\n';
    return kOk;
  }

  for (const auto& [name, fn] : commands) {
    if (!app.got_subcommand(name)) continue;
    const CommandResult r = fn(doc, config);
    if (r.exit_code != kOk) err << "error: " << r.diagnostic << '\n';
    if (!emit(r.output.dump(2) + "\n")) return kInputError;
    return r.exit_code;
  }
  return kInputError;
}

}  // namespace ahull::cli
