#include <gtest/gtest.h>

#include "kgunits/finite_field.hpp"
#include "kgunits/polynomial.hpp"

using namespace kgunits;

namespace {

int mobius(unsigned n) {
  int      mu = 1;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) {
        return 0;
      }
      mu = -mu;
    }
  }
  return n > 1 ? -mu : mu;
}

// Gauss: (1/d) sum_{e | d} mu(e) q^{d/e}
long long gauss_count(long long q, unsigned d) {
  long long s = 0;
  for (unsigned e = 1; e <= d; ++e) {
    if (d % e == 0) {
      long long t = 1;
      for (unsigned i = 0; i < d / e; ++i) {
        t *= q;
      }
      s += mobius(e) * t;
    }
  }
  return s / d;
}

}  // namespace

TEST(Polynomial, IrreducibleCountsMatchGaussFormula) {
  for (auto [p, k, maxd] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{
           {2, 1, 8}, {3, 1, 5}, {5, 1, 3}, {2, 2, 4}, {3, 2, 2}, {7, 1, 3}}) {
    auto const f = make_field(p, k);
    for (unsigned d = 1; d <= maxd; ++d) {
      EXPECT_EQ(static_cast<long long>(enumerate_monic_irreducibles(f, d).size()),
                gauss_count(f->order(), d))
          << f->label() << " degree " << d;
    }
  }
}

TEST(Polynomial, FactorizationMultipliesBack) {
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{
           {2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}, {2, 3}}) {
    auto const f = make_field(p, k);
    for (std::size_t n = 1; n <= 9; ++n) {
      auto const target  = Polynomial::x_pow_minus_one(f, n);
      auto const factors = factor_monic(target);
      auto       prod    = Polynomial::monomial(f, 0);
      for (auto const& pf : factors) {
        EXPECT_TRUE(pf.poly.is_monic());
        EXPECT_EQ(factor_monic(pf.poly).size(), 1u);
        for (unsigned i = 0; i < pf.multiplicity; ++i) {
          prod = prod * pf.poly;
        }
      }
      EXPECT_EQ(prod, target) << f->label() << " x^" << n << " - 1";
    }
  }
}

TEST(Polynomial, KnownFactorizations) {
  auto const f2 = make_field(2, 1);
  auto const x7 = factor_monic(Polynomial::x_pow_minus_one(f2, 7));
  ASSERT_EQ(x7.size(), 3u);
  EXPECT_EQ(x7[0].poly.to_string(), "x + 1");
  EXPECT_EQ(x7[1].poly.degree(), 3);
  EXPECT_EQ(x7[2].poly.degree(), 3);
  auto const x4 = factor_monic(Polynomial::x_pow_minus_one(f2, 4));
  ASSERT_EQ(x4.size(), 1u);
  EXPECT_EQ(x4[0].multiplicity, 4u);
  auto const f3 = make_field(3, 1);
  auto const y4 = factor_monic(Polynomial::x_pow_minus_one(f3, 4));
  ASSERT_EQ(y4.size(), 3u);
  EXPECT_EQ(y4[2].poly.to_string(), "x^2 + 1");
}

TEST(Polynomial, DivisionAndInverse) {
  auto const f5 = make_field(5, 1);
  Polynomial const a(f5, {1, 2, 3, 4});
  Polynomial const b(f5, {2, 0, 1});
  auto const [q, r] = divmod(a, b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_LT(r.degree(), b.degree());
  auto const m   = Polynomial(f5, {2, 0, 1});  // x^2 + 2, irreducible mod 5
  auto const inv = inverse_mod(Polynomial(f5, {1, 1}), m);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ((*inv * Polynomial(f5, {1, 1})) % m, Polynomial::monomial(f5, 0));
  EXPECT_FALSE(inverse_mod(Polynomial(f5, {4, 1}), Polynomial(f5, {4, 0, 1})));
  EXPECT_THROW(divmod(a, Polynomial(f5, {})), std::domain_error);
}

TEST(Polynomial, EvaluateAndEnumerate) {
  auto const f3 = make_field(3, 1);
  Polynomial const g(f3, {2, 0, 1});  // x^2 - 1
  EXPECT_EQ(g.evaluate(1), 0u);
  EXPECT_EQ(g.evaluate(0), 2u);
  EXPECT_EQ(enumerate_monic(f3, 2).size(), 9u);
  EXPECT_EQ(Polynomial(f3, {}).degree(), -1);
}
