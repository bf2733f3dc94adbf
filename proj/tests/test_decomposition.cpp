#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "kgunits/decomposition.hpp"
#include "kgunits/finite_field.hpp"

using namespace kgunits;

namespace {

AlgebraPtr algebra(unsigned q, std::string const& g) {
  return Algebra::make(make_field_of_order(q), group_by_label(g));
}

std::uint64_t ipow_u(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) {
    r *= b;
  }
  return r;
}

std::string elementary_label(unsigned p, unsigned n) {
  if (n == 1) {
    return "C" + std::to_string(p);
  }
  if (p == 2 && n == 2) {
    return "C2xC2";
  }
  if (p == 2 && n == 3) {
    return "C2^3";
  }
  return "C3xC3";
}

}  // namespace

TEST(Decomposition, KnownSummands) {
  auto dec = [](unsigned q, std::string const& g) {
    return decompose_abelian(*algebra(q, g)).to_string();
  };
  EXPECT_EQ(dec(2, "C5"), "F2 + F16");
  EXPECT_EQ(dec(2, "C7"), "F2 + F8^2");
  EXPECT_EQ(dec(3, "C4"), "F3^2 + F9");
  EXPECT_EQ(dec(2, "C6"), "F2[C2] + F4[C2]");
  EXPECT_EQ(dec(2, "C9"), "F2 + F4 + F64");
  EXPECT_EQ(dec(2, "C3xC3"), "F2 + F4^4");
  EXPECT_EQ(dec(5, "C4"), "F5^4");
  EXPECT_EQ(dec(5, "C2xC2"), "F5^4");
  EXPECT_EQ(dec(2, "C4"), "F2[C4]");
  EXPECT_EQ(dec(3, "C6"), "F3[C3]^2");
  EXPECT_THROW(decompose_abelian(*algebra(2, "D6")), std::invalid_argument);
}

// F_{p^k} C_p^n has unit group C_p^{k(p^n - 1)} x C_{p^k - 1}; checked
// against enumeration for every case with p^{k p^n} < 1024.
TEST(Decomposition, ElementaryModularGrid) {
  std::size_t cases = 0;
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    for (unsigned n = 1; n <= 3; ++n) {
      for (unsigned k = 1; k <= 9; ++k) {
        std::uint64_t const q = ipow_u(p, k);
        if (q > 1023) {
          break;
        }
        unsigned const pn = static_cast<unsigned>(ipow_u(p, n));
        long double const size = std::pow(static_cast<long double>(q), pn);
        if (size >= 1024) {
          continue;
        }
        ++cases;
        auto const a = algebra(static_cast<unsigned>(q), elementary_label(p, n));
        UnitGroup const u(a);
        std::vector<std::uint64_t> orders(k * (pn - 1), p);
        orders.push_back(q - 1);
        EXPECT_EQ(abelian_invariants(u), AbelianType::from_cyclic_orders(orders))
            << a->label();
        EXPECT_EQ(elementary_modular_units(p, k, n),
                  AbelianType::from_cyclic_orders(orders));
        EXPECT_EQ(u.size(), (q - 1) * (ipow_u(q, pn) / q));
      }
    }
  }
  EXPECT_EQ(cases, 9u);
}

TEST(Decomposition, PredictionMatchesEnumeration) {
  for (auto [q, g] : std::vector<std::pair<unsigned, std::string>>{
           {2, "C3"}, {2, "C5"}, {2, "C6"}, {2, "C7"}, {2, "C3xC3"},
           {2, "C9"}, {3, "C4"}, {3, "C5"}, {4, "C3"}, {5, "C3"},
           {5, "C4"}, {7, "C3"}, {9, "C2"}, {4, "C2xC2"}}) {
    auto const a = algebra(q, g);
    auto const s = decompose_abelian(*a);
    UnitGroup const u(a);
    EXPECT_EQ(s.dimension(), a->dimension());
    EXPECT_EQ(predicted_unit_count(s), u.size()) << a->label();
    if (auto const t = predicted_unit_structure(s)) {
      EXPECT_EQ(*t, abelian_invariants(u)) << a->label();
    }
  }
  // F2[C4] is not elementary: no closed form, count still multiplies out.
  auto const s = decompose_abelian(*algebra(2, "C4"));
  EXPECT_FALSE(predicted_unit_structure(s));
  EXPECT_EQ(predicted_unit_count(s), 8u);
}

TEST(Decomposition, IdempotentsMatchEnumeration) {
  for (auto [q, g] : std::vector<std::pair<unsigned, std::string>>{
           {2, "C3"}, {2, "C5"}, {2, "C7"}, {3, "C4"}, {4, "C3"}, {5, "C4"},
           {3, "C2"}, {5, "C3"}}) {
    auto const a    = algebra(q, g);
    auto const crt  = primitive_idempotents(a);
    auto const enu  = primitive_idempotents_by_enumeration(a);
    std::set<std::uint64_t> x, y;
    for (auto const& e : crt) {
      EXPECT_EQ(e * e, e);
      x.insert(e.index());
    }
    for (auto const& e : enu) {
      y.insert(e.index());
    }
    EXPECT_EQ(x, y) << a->label();
    EXPECT_TRUE(is_complete_orthogonal_central(crt));
    EXPECT_EQ(crt.size(), decompose_abelian(*a).blocks().size());

    auto const cert = certify_decomposition(a);
    std::vector<std::uint64_t> dims, blocks;
    for (auto const& e : cert.idempotents) {
      dims.push_back(ideal_dimension(e));
    }
    for (auto const& b : cert.summands.blocks()) {
      blocks.push_back(b.dimension());
    }
    std::sort(dims.begin(), dims.end());
    std::sort(blocks.begin(), blocks.end());
    EXPECT_EQ(dims, blocks);
  }
  EXPECT_THROW(primitive_idempotents(algebra(2, "C2")), std::invalid_argument);
}

TEST(Decomposition, NonOrthogonalSetsRejected) {
  auto const a   = algebra(3, "C2");
  auto const one = AlgebraElement::one(a);
  std::vector<AlgebraElement> twice{one, one};
  EXPECT_FALSE(is_complete_orthogonal_central(twice));
  std::vector<AlgebraElement> single{one};
  EXPECT_TRUE(is_complete_orthogonal_central(single));
}

TEST(Decomposition, Semisimplicity) {
  EXPECT_TRUE(is_semisimple(*algebra(2, "C3")));
  EXPECT_FALSE(is_semisimple(*algebra(2, "C6")));
  EXPECT_TRUE(is_semisimple(*algebra(5, "C4")));
  EXPECT_FALSE(is_semisimple(*algebra(3, "D6")));
}
