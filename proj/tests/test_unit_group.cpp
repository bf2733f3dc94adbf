#include <gtest/gtest.h>

#include "kgunits/finite_field.hpp"
#include "kgunits/unit_group.hpp"

using namespace kgunits;

namespace {

AlgebraPtr algebra(unsigned q, std::string const& g) {
  return Algebra::make(make_field_of_order(q), group_by_label(g));
}

// Order of a unit by repeated multiplication.
std::uint64_t naive_order(AlgebraElement const& u) {
  auto          x = u;
  std::uint64_t n = 1;
  while (!x.is_one()) {
    x = x * u;
    ++n;
  }
  return n;
}

}  // namespace

TEST(UnitGroup, CountsFromDefinition) {
  for (auto [q, g] : std::vector<std::pair<unsigned, std::string>>{
           {2, "C2"}, {2, "C3"}, {3, "C2"}, {2, "C4"}, {4, "C2"}, {5, "C2"},
           {2, "D6"}, {3, "C3"}}) {
    auto const  a = algebra(q, g);
    std::size_t brute = 0;
    auto const  all   = enumerate_elements(a);
    for (auto const& x : all) {
      for (auto const& y : all) {
        if ((x * y).is_one()) {
          ++brute;
          break;
        }
      }
    }
    EXPECT_EQ(UnitGroup(a).size(), brute) << a->label();
  }
}

TEST(UnitGroup, ElementOrdersMatchRepeatedMultiplication) {
  for (auto [q, g] : std::vector<std::pair<unsigned, std::string>>{
           {2, "D8"}, {3, "C4"}, {4, "C3"}}) {
    UnitGroup const u(algebra(q, g));
    for (std::size_t i = 0; i < u.size(); ++i) {
      ASSERT_EQ(u.element_order(i), naive_order(u.at(i)));
    }
  }
}

TEST(UnitGroup, KnownStructures) {
  auto structure = [](unsigned q, std::string const& g) {
    return abelian_invariants(UnitGroup(algebra(q, g))).to_string();
  };
  EXPECT_EQ(structure(2, "C2"), "C2");
  EXPECT_EQ(structure(2, "C3"), "C3");
  EXPECT_EQ(structure(3, "C2"), "C2^2");
  EXPECT_EQ(structure(2, "C4"), "C4 x C2");
  EXPECT_EQ(structure(4, "C4"), "C4^2 x C2^2 x C3");
  EXPECT_EQ(structure(2, "C8"), "C8 x C4 x C2^2");
  EXPECT_EQ(structure(5, "C2"), "C4^2");
}

TEST(UnitGroup, DihedralRecognition) {
  UnitGroup const u(algebra(2, "D6"));
  EXPECT_EQ(u.size(), 12u);
  EXPECT_FALSE(u.is_abelian());
  auto const w = recognize_dihedral(u);
  ASSERT_TRUE(w);
  EXPECT_EQ(u.element_order(w->rotation), 6u);
  EXPECT_EQ(u.element_order(w->reflection), 2u);
  EXPECT_EQ(describe(classify(u)), "D12");
  EXPECT_EQ(descriptor_order(classify(u)), 12u);

  UnitGroup const v(algebra(2, "D8"));
  EXPECT_FALSE(recognize_dihedral(v));
  EXPECT_EQ(describe(classify(v)).rfind("unclassified, order 128", 0), 0u);
}

TEST(UnitGroup, AbelianUnitsOfAbelianAlgebras) {
  for (auto [q, g] : std::vector<std::pair<unsigned, std::string>>{
           {2, "C2xC2"}, {3, "C3"}, {7, "C2"}, {2, "C5"}}) {
    UnitGroup const u(algebra(q, g));
    EXPECT_TRUE(u.is_abelian());
    auto const t = abelian_invariants(u);
    EXPECT_EQ(t.order(), u.size());
    EXPECT_EQ(t.order_spectrum(), u.spectrum());
    EXPECT_EQ(t.exponent(), exponent(u));
  }
  EXPECT_THROW(abelian_invariants(UnitGroup(algebra(2, "D6"))),
               std::invalid_argument);
}

TEST(UnitGroup, ClosureOfGenerators) {
  UnitGroup const u(algebra(3, "C2"));
  AlgebraElement const minus_one =
      FieldElement(u.algebra()->field(), 2) * AlgebraElement::one(u.algebra());
  AlgebraElement const gens[] = {minus_one};
  EXPECT_EQ(closure(u, gens), 2u);
  AlgebraElement const both[] = {minus_one, AlgebraElement::embed(u.algebra(), 1)};
  EXPECT_EQ(closure(u, both), 4u);
}
