#include <gtest/gtest.h>

#include <algorithm>

#include "ahull/padic.hpp"
#include "corpus.hpp"

using namespace ahull;

namespace {

IntPolynomial ipoly(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(v);
}

Integer value(const PadicElement& x) {
  auto s = symmetric_integer(x);
  EXPECT_TRUE(s.has_value());
  return s ? mod(*s, x.ring()->modulus()) : Integer(-1);
}

}  // namespace

TEST(Valuation, Examples) {
  EXPECT_EQ(valuation(Integer(49), 7, 4), 2u);
  EXPECT_EQ(valuation(Integer(0), 7, 4), std::nullopt);
  EXPECT_EQ(valuation(Integer(10), 7, 4), 0u);
  EXPECT_EQ(valuation(Integer(7 * 7 * 7 * 7), 7, 4), std::nullopt);
  const RingPtr r = build_unramified(7, 1, 3);
  EXPECT_EQ(valuation(PadicElement::from_integer(r, Integer(98))), 2u);
}

TEST(SelectPrime, Examples) {
  const auto a = select_prime(ipoly({-2, 0, 1}), 10);
  EXPECT_EQ(a.p, 7u);
  EXPECT_EQ(a.f_p, 1u);
  const auto b = select_prime(ipoly({1, 0, 1}), 10);
  EXPECT_EQ(b.p, 5u);
  EXPECT_EQ(b.f_p, 1u);
  const auto c = select_prime(ipoly({-1, -1, 1}), 20);
  EXPECT_EQ(c.f_p, 1u);
  EXPECT_TRUE(c.p % 5 == 1 || c.p % 5 == 4);
  EXPECT_THROW(select_prime(ipoly({-2, 0, 1}), 0), std::runtime_error);
}

TEST(SelectPrime, SmallerAdmissiblePrimesAreWorse) {
  const IntPolynomial f = ipoly({-2, 0, 1});
  for (std::uint64_t p : {3u, 5u}) EXPECT_GE(factor_degrees(f, p).front(), 2u);
}

TEST(FactorDegrees, Examples) {
  EXPECT_EQ(factor_degrees(ipoly({-2, 0, 1}), 7), (std::vector<unsigned>{1, 1}));
  EXPECT_EQ(factor_degrees(ipoly({-2, 0, 1}), 5), (std::vector<unsigned>{2}));
  EXPECT_EQ(factor_degrees(ipoly({0, -1, 0, 1}), 5), (std::vector<unsigned>{1, 1, 1}));
  EXPECT_EQ(factor_degrees(ipoly({-2, 0, 0, 0, 1}), 7), (std::vector<unsigned>{1, 1, 2}));
  EXPECT_THROW(factor_degrees(ipoly({1, 2, 1}), 5), std::invalid_argument);
  EXPECT_FALSE(is_admissible_prime(ipoly({-2, 0, 1}), 2));
}

TEST(BuildUnramified, Examples) {
  EXPECT_EQ(build_unramified(7, 1, 3)->modulus(), 343);
  EXPECT_EQ(build_unramified(2, 2, 1)->omega(), ipoly({1, 1, 1}));
  const RingPtr r = build_unramified(3, 2, 2);
  ASSERT_EQ(r->degree(), 2u);
  // t^9 = t in F_9 exactly when omega is irreducible mod 3.
  const RingPtr r1 = r->with_precision(1);
  const PadicElement t = PadicElement::generator(r1);
  EXPECT_EQ(t.pow(Integer(9)), t);
  EXPECT_NE(t.pow(Integer(3)), t);
}

TEST(LiftRoots, Examples) {
  const IntPolynomial f = ipoly({-2, 0, 1});
  const ApproxRoots r2 = lift_roots(f, build_unramified(7, 1, 2));
  ASSERT_EQ(r2.size(), 2u);
  EXPECT_EQ(value(r2.roots[0]), 10);
  EXPECT_EQ(value(r2.roots[1]), 39);
  const ApproxRoots r1 = lift_roots(f, build_unramified(7, 1, 1));
  EXPECT_EQ(value(r1.roots[0]), 3);
  EXPECT_EQ(value(r1.roots[1]), 4);
  const ApproxRoots lin = lift_roots(ipoly({-5, 1}), build_unramified(11, 1, 3));
  EXPECT_EQ(value(lin.roots[0]), 5);
  EXPECT_THROW(lift_roots(f, build_unramified(5, 1, 2)), std::runtime_error);
}

TEST(IncreasePrecision, Examples) {
  const IntPolynomial f = ipoly({-2, 0, 1});
  const ApproxRoots r1 = lift_roots(f, build_unramified(7, 1, 1));
  const ApproxRoots r2 = increase_precision(r1, 2);
  EXPECT_EQ(value(r2.roots[0]), 10);
  EXPECT_EQ(value(r2.roots[1]), 39);
  const ApproxRoots same = increase_precision(r1, 1);
  EXPECT_EQ(same.roots, r1.roots);
  const ApproxRoots back = r2.truncate(1);
  EXPECT_EQ(back.roots, r1.roots);
}

TEST(EvalTarget, Examples) {
  const IntPolynomial f = ipoly({-2, 0, 1});
  const ApproxRoots r = lift_roots(f, build_unramified(7, 1, 2));
  const auto x1 = ExponentPolynomial::variable(2, 0), x2 = ExponentPolynomial::variable(2, 1);
  EXPECT_TRUE(eval_target(x1 + x2, r).is_zero());
  EXPECT_EQ(symmetric_integer(eval_target(x1 * x2, r)), Integer(-2));
  EXPECT_EQ(symmetric_integer(eval_target(ExponentPolynomial::constant(2, Integer(1)), r)), Integer(1));
  const Permutation swap{1, 0};
  EXPECT_EQ(eval_target(x1, r, &swap), r.roots[1]);
}

TEST(FrobeniusPerm, Examples) {
  const IntPolynomial f = ipoly({-2, 0, 1});
  EXPECT_EQ(frobenius_perm(lift_roots(f, build_unramified(7, 1, 3))), (Permutation{0, 1}));
  EXPECT_EQ(frobenius_perm(lift_roots(f, build_unramified(5, 2, 3))), (Permutation{1, 0}));
  EXPECT_EQ(frobenius_perm(lift_roots(ipoly({3, 1}), build_unramified(5, 1, 3))), (Permutation{0}));
}

TEST(PadicElement, ArithmeticAndInverse) {
  const RingPtr r = build_unramified(3, 2, 4);
  const PadicElement t = PadicElement::generator(r);
  const PadicElement u = t + PadicElement::from_integer(r, Integer(2));
  EXPECT_EQ(u * u.inverse(), PadicElement::from_integer(r, Integer(1)));
  EXPECT_THROW(PadicElement::from_integer(r, Integer(3)).inverse(), std::domain_error);
  EXPECT_EQ(Integer(3) * t, t + t + t);
}

TEST(IsIrreducible, Examples) {
  EXPECT_TRUE(is_irreducible(ipoly({-2, 0, 0, 0, 1})));
  EXPECT_TRUE(is_irreducible(ipoly({1, 0, 0, 0, 1})));
  EXPECT_FALSE(is_irreducible(ipoly({4, 0, 0, 0, 1})));  // (x^2+2x+2)(x^2-2x+2)
  EXPECT_FALSE(is_irreducible(ipoly({2, -3, 1})));
  EXPECT_TRUE(is_irreducible(ipoly({-1, -1, 0, 0, 0, 1})));
  EXPECT_FALSE(is_irreducible(ipoly({-1, 0, 0, 0, 0, 0, 1})));
}

// Hensel residuals and labeling stability on the corpus.
TEST(LiftRoots, CorpusResidualsAndConsistency) {
  for (const auto& e : ahull::testing::load_corpus(ahull::testing::data_path("corpus.json"))) {
    const PrimeSelection sel = select_prime(e.poly, 20);
    const ApproxRoots low = lift_roots(e.poly, build_unramified(sel.p, sel.f_p, 1));
    for (unsigned k : {1u, 5u, 20u}) {
      const ApproxRoots r = increase_precision(low, k);
      for (const auto& a : r.roots) {
        PadicElement acc(r.ring);
        for (auto it = e.poly.coefficients().rbegin(); it != e.poly.coefficients().rend(); ++it)
          acc = acc * a + PadicElement::from_integer(r.ring, *it);
        EXPECT_FALSE(valuation(acc).has_value()) << e.label << " k=" << k;
      }
      EXPECT_EQ(r.truncate(1).roots, low.roots) << e.label;
    }
  }
}
