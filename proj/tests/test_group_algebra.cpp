#include <gtest/gtest.h>

#include <random>

#include "kgunits/finite_field.hpp"
#include "kgunits/group_algebra.hpp"

using namespace kgunits;

namespace {

// Convolution straight from the group table.
std::vector<Code> convolve(Algebra const& a, std::vector<Code> const& x,
                           std::vector<Code> const& y) {
  auto const&       f = *a.field();
  auto const&       g = a.group();
  std::vector<Code> out(g.order(), 0);
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = 0; j < g.order(); ++j) {
      auto& c = out[g.mul(i, j)];
      c       = f.add(c, f.mul(x[i], y[j]));
    }
  }
  return out;
}

AlgebraElement random_element(AlgebraPtr const& a, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(0, a->size() - 1);
  return AlgebraElement::from_index(a, d(rng));
}

}  // namespace

TEST(GroupAlgebra, ProductMatchesConvolution) {
  std::mt19937_64 rng(20261015);
  for (auto [q, label] : std::vector<std::pair<unsigned, std::string>>{
           {2, "D8"}, {3, "D6"}, {4, "C2xC2"}, {2, "Q8"}, {5, "C4"}, {9, "C2"}}) {
    auto const a = Algebra::make(make_field_of_order(q), group_by_label(label));
    for (int t = 0; t < 200; ++t) {
      auto const x = random_element(a, rng);
      auto const y = random_element(a, rng);
      auto const z = random_element(a, rng);
      EXPECT_EQ((x * y).coeffs(), convolve(*a, x.coeffs(), y.coeffs()));
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ((x - x), AlgebraElement::zero(a));
      EXPECT_EQ(x * AlgebraElement::one(a), x);
    }
  }
}

TEST(GroupAlgebra, IndexRoundTrip) {
  auto const a = Algebra::make(make_field_of_order(3), group_by_label("C3"));
  EXPECT_EQ(a->size(), 27u);
  for (std::uint64_t i = 0; i < a->size(); ++i) {
    EXPECT_EQ(AlgebraElement::from_index(a, i).index(), i);
  }
}

TEST(GroupAlgebra, InverseAgreesWithBruteForce) {
  for (auto [q, label] : std::vector<std::pair<unsigned, std::string>>{
           {2, "C4"}, {3, "C2xC2"}, {2, "D6"}, {4, "C3"}}) {
    auto const a     = Algebra::make(make_field_of_order(q), group_by_label(label));
    auto const elems = enumerate_elements(a);
    std::size_t units = 0;
    for (auto const& x : elems) {
      std::optional<AlgebraElement> brute;
      for (auto const& y : elems) {
        if ((x * y).is_one()) {
          brute = y;
          break;
        }
      }
      auto const inv = try_inverse(x);
      ASSERT_EQ(inv.has_value(), brute.has_value()) << x.to_string();
      if (inv) {
        EXPECT_EQ(*inv, *brute);
        ++units;
      }
    }
    EXPECT_EQ(enumerate_units(a).size(), units);
  }
}

TEST(GroupAlgebra, ParseElement) {
  auto const a = Algebra::make(make_field_of_order(2), group_by_label("D6"));
  auto const w = parse_element(a, "1 + x^2 + y + x*y + x^2*y");
  EXPECT_EQ(augmentation(w).code(), 1u);
  EXPECT_EQ(parse_element(a, w.to_string()), w);
  EXPECT_EQ(parse_element(a, "x^3"), AlgebraElement::one(a));
  EXPECT_EQ(parse_element(a, "x + x"), AlgebraElement::zero(a));
  EXPECT_THROW(parse_element(a, "z"), std::invalid_argument);
  EXPECT_THROW(parse_element(a, "x +"), std::invalid_argument);

  auto const b = Algebra::make(make_field_of_order(5), group_by_label("C4"));
  auto const e = parse_element(b, "2*x^3 - 1 + 3*x");
  EXPECT_EQ(e.coeffs(), (std::vector<Code>{4, 3, 0, 2}));
  EXPECT_EQ(parse_element(b, e.to_string()), e);
}

TEST(GroupAlgebra, PowerCollapseInModularPGroups) {
  for (auto [q, label] : std::vector<std::pair<unsigned, std::string>>{
           {2, "C2"}, {2, "C4"}, {2, "C2xC2"}, {2, "D8"}, {3, "C3"}, {4, "C2"}}) {
    auto const a = Algebra::make(make_field_of_order(q), group_by_label(label));
    EXPECT_TRUE(p_power_collapse_check(a)) << a->label();
  }
  auto const bad = Algebra::make(make_field_of_order(2), group_by_label("C3"));
  EXPECT_THROW(p_power_collapse_check(bad), std::invalid_argument);
}

TEST(GroupAlgebra, MixedAlgebrasRejected) {
  auto const a = Algebra::make(make_field_of_order(2), group_by_label("C2"));
  auto const b = Algebra::make(make_field_of_order(3), group_by_label("C2"));
  EXPECT_THROW(AlgebraElement::one(a) + AlgebraElement::one(b),
               std::invalid_argument);
  EXPECT_TRUE(a->same_as(*Algebra::make(make_field_of_order(2),
                                        a->group_ptr())));
  EXPECT_FALSE(a->same_as(*b));
}
