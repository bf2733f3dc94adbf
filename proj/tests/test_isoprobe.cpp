#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "kgunits/finite_field.hpp"
#include "kgunits/isoprobe.hpp"

using namespace kgunits;

namespace {

AlgebraPtr algebra(unsigned q, std::string const& g) {
  return Algebra::make(make_field_of_order(q), group_by_label(g));
}

bool is_prime_power(unsigned q) {
  unsigned p = 2;
  while (q % p != 0) {
    ++p;
  }
  while (q % p == 0) {
    q /= p;
  }
  return q == 1;
}

}  // namespace

TEST(Isoprobe, BundleMatchesBruteForce) {
  for (auto [q, g] : std::vector<std::pair<unsigned, std::string>>{
           {2, "C4"}, {2, "C2xC2"}, {3, "C3"}, {2, "D6"}, {4, "C2"}}) {
    auto const a   = algebra(q, g);
    auto const all = enumerate_elements(a);
    std::uint64_t idem = 0, nil = 0, sqz = 0;
    for (auto const& x : all) {
      idem += x * x == x ? 1 : 0;
      sqz += (x * x).is_zero() ? 1 : 0;
      nil += x.pow(a->dimension()).is_zero() ? 1 : 0;
    }
    std::size_t central = 0;
    for (auto const& x : all) {
      bool c = true;
      for (std::size_t h = 0; h < a->dimension() && c; ++h) {
        auto const e = AlgebraElement::embed(a, h);
        c = x * e == e * x;
      }
      central += c ? 1 : 0;
    }
    auto const b = bundle(a);
    EXPECT_EQ(b.idempotent_count, idem) << a->label();
    EXPECT_EQ(b.nilpotent_count, nil) << a->label();
    EXPECT_EQ(b.square_zero_count, sqz) << a->label();
    EXPECT_EQ(std::pow(q, b.center_dimension), central) << a->label();
    EXPECT_EQ(b.unit_count, UnitGroup(a).size());
    EXPECT_EQ(b.commutative, a->is_commutative());
  }
}

TEST(Isoprobe, WitnessIsMultiplicativeEverywhere) {
  auto const a = algebra(5, "C4");
  auto const b = algebra(5, "C2xC2");
  auto const w = explicit_isomorphism(a, b);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->verified_products, 16u);
  EXPECT_EQ(w->checksum.size(), 16u);
  auto const elems = enumerate_elements(a);
  std::vector<AlgebraElement> images;
  std::set<std::uint64_t>     seen;
  for (auto const& x : elems) {
    images.push_back(w->apply(x, b));
    seen.insert(images.back().index());
  }
  EXPECT_EQ(seen.size(), elems.size());
  for (std::size_t i = 0; i < elems.size(); i += 7) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      ASSERT_EQ(w->apply(elems[i] * elems[j], b), images[i] * images[j]);
      ASSERT_EQ(w->apply(elems[i] + elems[j], b), images[i] + images[j]);
    }
  }
  EXPECT_EQ(bundle(a), bundle(b));
  EXPECT_EQ(verify_isomorphism(a, b, w->map), 16u);
}

TEST(Isoprobe, RejectsNonHomomorphisms) {
  auto const a = algebra(5, "C4");
  auto const b = algebra(5, "C2xC2");
  // Basis-to-basis is not multiplicative: x^2 = x^2 but (0,1)^2 = 1.
  EXPECT_FALSE(verify_isomorphism(a, b, Matrix::identity(a->field(), 4)));
  auto const c = algebra(2, "C4");
  auto const d = algebra(2, "C2xC2");
  EXPECT_FALSE(explicit_isomorphism(c, d));
  EXPECT_THROW(decide(a, c), std::invalid_argument);
}

TEST(Isoprobe, VerdictsOnSmallPairs) {
  auto const v = decide(algebra(2, "C4"), algebra(2, "C2xC2"));
  EXPECT_EQ(v.verdict, Verdict::not_isomorphic);
  EXPECT_EQ(v.invariant, "unit_order_spectrum");
  auto const w = decide(algebra(3, "C6"), algebra(3, "D6"));
  EXPECT_EQ(w.verdict, Verdict::not_isomorphic);
  EXPECT_EQ(w.invariant, "commutativity");
  auto const y = decide(algebra(3, "C4"), algebra(3, "C2xC2"));
  EXPECT_EQ(y.verdict, Verdict::not_isomorphic);
  EXPECT_EQ(y.invariant, "unit_count");
  auto const z = decide(algebra(5, "C4"), algebra(5, "C2xC2"));
  EXPECT_EQ(z.verdict, Verdict::isomorphic);
  ASSERT_TRUE(z.witness);
  EXPECT_STREQ(to_string(Verdict::not_isomorphic), "not isomorphic");
}

TEST(Isoprobe, ScanFindsMinimumAndSeparatesSmallerPairs) {
  auto const s = scan_minimum_counterexample(1024, 4);
  // Expected pair count from the catalog sizes alone.
  std::size_t expected = 0;
  for (unsigned q = 2; q < 1024; ++q) {
    if (!is_prime_power(q)) {
      continue;
    }
    std::uint64_t size = q;
    for (unsigned n = 2; n <= 9 && size * q < 1024; ++n) {
      size *= q;
      std::size_t const m = groups_of_order(n).size();
      expected += m * (m - 1) / 2;
    }
  }
  EXPECT_EQ(s.pairs.size(), expected);
  ASSERT_TRUE(s.minimum);
  auto const& m = s.pairs[*s.minimum];
  EXPECT_EQ(m.size, 625u);
  EXPECT_EQ(m.field->label(), "F5");
  EXPECT_EQ(m.g->label(), "C4");
  EXPECT_EQ(m.h->label(), "C2xC2");
  ASSERT_TRUE(m.verdict.witness);
  EXPECT_EQ(m.verdict.witness->verified_products, 16u);
  EXPECT_TRUE(s.minimality_verified());
  for (std::size_t i = 0; i < s.pairs.size(); ++i) {
    if (s.pairs[i].size < 625) {
      EXPECT_EQ(s.pairs[i].verdict.verdict, Verdict::not_isomorphic)
          << s.pairs[i].field->label() << " " << s.pairs[i].g->label() << " "
          << s.pairs[i].h->label();
    }
  }
  // Parallelism does not change the outcome.
  auto const t = scan_minimum_counterexample(1024, 1);
  ASSERT_EQ(t.pairs.size(), s.pairs.size());
  for (std::size_t i = 0; i < s.pairs.size(); ++i) {
    EXPECT_EQ(t.pairs[i].verdict.verdict, s.pairs[i].verdict.verdict);
    EXPECT_EQ(t.pairs[i].verdict.invariant, s.pairs[i].verdict.invariant);
  }
}

TEST(Isoprobe, SmallBoundHasNoMinimum) {
  auto const s = scan_minimum_counterexample(600, 2);
  EXPECT_FALSE(s.minimum);
  EXPECT_FALSE(s.minimality_verified());
}
