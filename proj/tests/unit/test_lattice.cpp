#include <gtest/gtest.h>

#include "ahull/lattice.hpp"
#include "oracles.hpp"

using namespace ahull;
using namespace ahull::testing;

namespace {

IntMatrix imat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> r;
  std::size_t cols = 0;
  for (const auto& row : rows) {
    r.emplace_back();
    for (long x : row) r.back().emplace_back(x);
    cols = r.back().size();
  }
  return IntMatrix(cols, r);
}

}  // namespace

TEST(Lll, Examples) {
  EXPECT_EQ(lll_reduce(IntMatrix::identity(4)), IntMatrix::identity(4));
  const IntMatrix b = lll_reduce(imat({{1, 0}, {1000000, 1}}));
  Integer shortest = norm_squared(b.row(0));
  for (const auto& r : b.row_list()) shortest = std::min(shortest, norm_squared(r));
  EXPECT_EQ(shortest, 1);
  EXPECT_THROW(lll_reduce(imat({{1, 2}, {2, 4}})), std::invalid_argument);
}

TEST(Lll, UnimodularScrambleOfIdentity) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix b = IntMatrix::identity(4);
    for (int step = 0; step < 30; ++step) {
      const std::size_t i = rng() % 4, j = (i + 1 + rng() % 3) % 4;
      const long c = static_cast<long>(rng() % 11) - 5;
      for (std::size_t k = 0; k < 4; ++k) b(i, k) += c * b(j, k);
    }
    const IntMatrix r = lll_reduce(b);
    // 2^{(r-1)/2} * 1 with r = 4, squared: 8.
    for (const auto& row : r.row_list()) EXPECT_LE(norm_squared(row), 8);
    EXPECT_TRUE(same_lattice(r, b));
  }
}

TEST(Lll, ReducedAndBoundedOnRandomLattices) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 4;
    IntMatrix b = random_int_matrix(rng, n, n + trial % 2, 30);
    if (rank(to_rational_rows(b)) < n) continue;
    const IntMatrix r = lll_reduce(b);
    const GramSchmidt gs = gram_schmidt(r);
    EXPECT_TRUE(is_size_reduced(gs));
    EXPECT_TRUE(satisfies_lovasz(gs, Rational(3, 4)));
    EXPECT_EQ(hnf(r), hnf(b));
    const Integer bound = ipow(Integer(2), n - 1) * shortest_vector_norm(b);
    EXPECT_LE(norm_squared(r.row(0)), bound);
  }
}

TEST(Hnf, Examples) {
  EXPECT_EQ(hnf(imat({{2, 0}, {0, 2}})), imat({{2, 0}, {0, 2}}));
  EXPECT_EQ(hnf(imat({{1, 2}, {2, 4}})), imat({{1, 2}}));
  EXPECT_EQ(hnf(imat({{2, 1}, {0, 3}})), hnf(imat({{2, 4}, {0, 3}})));
  EXPECT_EQ(hnf(IntMatrix(3, {})).rows(), 0u);
}

TEST(NullspaceMod, Examples) {
  const ModMatrix z = nullspace_mod(ModMatrix(IntMatrix(2, 2), 7, 2));
  EXPECT_EQ(module_span(z.entries, 49).size(), 49u * 49u);
  const ModMatrix id = nullspace_mod(ModMatrix(IntMatrix::identity(3), 7, 2));
  EXPECT_EQ(module_span(id.entries, 49), (std::set<IntVector>{IntVector(3, Integer(0))}));
  const ModMatrix seven = nullspace_mod(ModMatrix(imat({{7}}), 7, 2));
  EXPECT_EQ(module_span(seven.entries, 49), brute_force_left_kernel(imat({{7}}), 49));
  EXPECT_EQ(seven.entries, imat({{7}}));
}

TEST(NullspaceMod, MatchesBruteForce) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint64_t p = trial % 2 ? 2 : 3;
    const unsigned k = 1 + trial % 2;
    const Integer m = ipow(Integer(p), k);
    const std::size_t rows = 1 + trial % 3, cols = 1 + (trial / 3) % 3;
    IntMatrix b = random_int_matrix(rng, rows, cols, 9);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) b(i, j) = mod(b(i, j), m);
    const ModMatrix ns = nullspace_mod(ModMatrix(b, p, k));
    EXPECT_EQ(module_span(ns.entries, m), brute_force_left_kernel(b, m)) << "trial " << trial;
  }
}

TEST(HowellForm, SpansSameModule) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix b = random_int_matrix(rng, 3, 2, 20);
    const ModMatrix h = howell_form(ModMatrix(b, 2, 2));
    EXPECT_EQ(module_span(h.entries, 4), module_span(ModMatrix(b, 2, 2).entries, 4));
  }
}

TEST(RationalReconstruction, Examples) {
  EXPECT_EQ(rational_reconstruction(Integer(33), Integer(49)), Rational(1, 3));
  EXPECT_EQ(rational_reconstruction(Integer(5), Integer(343)), Rational(5));
  EXPECT_EQ(rational_reconstruction(Integer(5), Integer(49)), std::nullopt);
  EXPECT_EQ(rational_reconstruction(Integer(24), Integer(49)), Rational(-1, 2));
  EXPECT_EQ(rational_reconstruction(Integer(0), Integer(49)), Rational(0));
}

TEST(RationalReconstruction, OutOfBoundFailsExhaustively) {
  // For m = 49 the bound is 4; check every residue against a brute-force search.
  const Integer m(49);
  for (long a = 0; a < 49; ++a) {
    std::optional<Rational> want;
    for (long v = 1; v <= 4 && !want; ++v) {
      if (v % 7 == 0) continue;
      for (long u = -4; u <= 4 && !want; ++u)
        if (mod(Integer(u - a * v), m) == 0) want = Rational(u, v);
    }
    if (want) want->canonicalize();
    EXPECT_EQ(rational_reconstruction(Integer(a), m), want) << a;
  }
}

TEST(Saturate, Examples) {
  EXPECT_EQ(saturate({{Rational(1, 2), Rational(1)}}, 2), imat({{1, 2}}));
  EXPECT_EQ(saturate({{Rational(2), Rational(4)}}, 2), imat({{1, 2}}));
  const IntMatrix s = saturate({{Rational(1), Rational(0), Rational(1)}, {Rational(0), Rational(2), Rational(2)}}, 3);
  EXPECT_TRUE(same_lattice(s, imat({{1, 0, 1}, {0, 1, 1}})));
  EXPECT_EQ(saturate({}, 3).rows(), 0u);
}

TEST(IntegerLeftKernel, Examples) {
  const IntMatrix k = integer_left_kernel(imat({{1}, {1}}));
  EXPECT_TRUE(same_lattice(k, imat({{1, -1}})));
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 40; ++trial) {
    const IntMatrix b = random_int_matrix(rng, 4, 2, 9);
    const IntMatrix ker = integer_left_kernel(b);
    for (const auto& v : ker.row_list())
      for (std::size_t j = 0; j < 2; ++j) {
        Integer acc(0);
        for (std::size_t i = 0; i < 4; ++i) acc += v[i] * b(i, j);
        EXPECT_EQ(acc, 0);
      }
    EXPECT_EQ(ker.rows() + rank(to_rational_rows(b)), 4u);
    EXPECT_EQ(saturate(ker), hnf(ker));
  }
}
