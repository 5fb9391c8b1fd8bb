#include <benchmark/benchmark.h>

#include <random>

#include "ahull/group_recipes.hpp"
#include "ahull/hull.hpp"

using namespace ahull;

namespace {

IntPolynomial ipoly(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(v);
}

IntMatrix random_basis(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-1000, 1000);
  IntMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = d(rng);
  for (std::size_t i = 0; i < n; ++i) b(i, i) += 5000;
  return b;
}

void BM_Lll(benchmark::State& state) {
  const IntMatrix b = random_basis(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(lll_reduce(b));
}
BENCHMARK(BM_Lll)->Arg(4)->Arg(8)->Arg(16)->Arg(24);

void BM_HenselLift(benchmark::State& state) {
  const IntPolynomial f = ipoly({-1, -1, 0, 0, 0, 1});
  const PrimeSelection sel = select_prime(f);
  const ApproxRoots low = lift_roots(f, build_unramified(sel.p, sel.f_p, 1));
  for (auto _ : state) benchmark::DoNotOptimize(increase_precision(low, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_HenselLift)->Arg(10)->Arg(100)->Arg(1000);

void BM_CharPoly(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> d(-9, 9);
  const auto n = static_cast<std::size_t>(state.range(0));
  RatMatrix x(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x(i, j) = Rational(d(rng));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(x));
}
BENCHMARK(BM_CharPoly)->Arg(4)->Arg(8)->Arg(16);

struct HullCase {
  IntPolynomial f;
  const char* recipe;
  long order;
};

const HullCase kCases[] = {
    {ipoly({-2, 0, 0, 0, 1}), "pairs", 8},
    {ipoly({-2, 0, 0, 0, 0, 1}), "kummer", 20},
    {ipoly({-1, 0, -1, 0, 0, 0, 1}), "pairs", 48},
};

void BM_Hull(benchmark::State& state) {
  const HullCase& c = kCases[state.range(0)];
  HullConfig cfg;
  cfg.engine.group_order = Integer(c.order);
  cfg.route = state.range(1) ? Route::galois : Route::lll;
  if (cfg.route == Route::galois) {
    RootContext ctx(c.f, cfg.engine);
    cfg.group = derive_group(c.recipe, ctx, static_cast<std::uint64_t>(c.order));
  }
  const RatMatrix x = companion_matrix(to_rational(c.f));
  for (auto _ : state) benchmark::DoNotOptimize(hull_semisimple(x, cfg));
  state.SetLabel(std::string(cfg.route == Route::galois ? "galois" : "lll") + " |G|=" + std::to_string(c.order));
}
BENCHMARK(BM_Hull)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
