#include <gtest/gtest.h>

#include "kgunits/kgunits.hpp"

using namespace kgunits;

namespace {

Catalog const& catalog() {
  static Catalog const c = build_catalog(kCatalogBound, 4);
  return c;
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

TEST(Catalog, RowCountAndOrdering) {
  std::size_t expected = 0;
  for (unsigned q = 2; q < 1024; ++q) {
    if (!is_prime_power(q)) {
      continue;
    }
    std::uint64_t size = 1;
    for (unsigned n = 1; n <= 9; ++n) {
      size *= q;
      if (size >= 1024) {
        break;
      }
      expected += groups_of_order(n).size();
    }
  }
  auto const& c = catalog();
  EXPECT_EQ(c.rows.size(), expected);
  for (std::size_t i = 1; i < c.rows.size(); ++i) {
    auto const& a = c.rows[i - 1];
    auto const& b = c.rows[i];
    EXPECT_LE(std::make_tuple(a.size, a.field->order()),
              std::make_tuple(b.size, b.field->order()));
  }
  EXPECT_TRUE(c.consistent());
}

TEST(Catalog, RowsAgreeWithEnumeration) {
  for (auto const& row : catalog().rows) {
    std::uint64_t expected_size = 1;
    for (std::size_t i = 0; i < row.group->order(); ++i) {
      expected_size *= row.field->order();
    }
    EXPECT_EQ(row.size, expected_size);
    EXPECT_LT(row.size, 1024u);
    EXPECT_FALSE(row.extension);
    if (row.group->is_abelian()) {
      EXPECT_EQ(AbelianType::parse(row.structure).order(), row.unit_count);
      EXPECT_EQ(row.structure, row.enumerated_structure);
      EXPECT_NE(row.decomposition, "—");
      ASSERT_TRUE(row.predicted_unit_count);
      EXPECT_EQ(*row.predicted_unit_count, row.unit_count) << row.subject();
      if (row.predicted_structure) {
        EXPECT_EQ(*row.predicted_structure, row.structure) << row.subject();
      }
    } else {
      EXPECT_EQ(row.decomposition, "—");
    }
  }
}

TEST(Catalog, SelectedRows) {
  auto const& c = catalog();
  auto const* f2d6 = c.find("F2", "D6");
  ASSERT_NE(f2d6, nullptr);
  EXPECT_EQ(f2d6->structure, "D12");
  EXPECT_EQ(f2d6->method, "presentation");
  auto const* f2d8 = c.find("F2", "D8");
  ASSERT_NE(f2d8, nullptr);
  EXPECT_EQ(f2d8->structure, "presented(F2[D8])");
  EXPECT_EQ(f2d8->unit_count, 128u);
  auto const* f3d6 = c.find("F3", "D6");
  ASSERT_NE(f3d6, nullptr);
  EXPECT_EQ(f3d6->unit_count, 324u);
  EXPECT_EQ(f3d6->presentations.size(), 2u);
  auto const* f4c4 = c.find("F4", "C4");
  ASSERT_NE(f4c4, nullptr);
  EXPECT_EQ(f4c4->structure, "C4^2 x C2^2 x C3");
  EXPECT_EQ(f4c4->method, "enumeration");
  EXPECT_EQ(f4c4->involutions, 16u);
  EXPECT_EQ(c.find("F2", "C2^3")->method, "lemma");
  EXPECT_EQ(c.find("F3", "C4")->method, "decomposition");
  EXPECT_EQ(c.find("F3", "C4")->decomposition, "F3^2 + F9");
  EXPECT_EQ(c.find("F2", "C4xC2")->involutions, 64u);
  EXPECT_EQ(c.find("F2", "C8")->involutions, 16u);
  EXPECT_EQ(c.find("F31", "C2")->decomposition, "F31^2");
  EXPECT_EQ(c.find("F2", "C1")->paper_row->unit_count, 1u);
  EXPECT_EQ(c.find("F7", "C2")->paper_row, nullptr);
  EXPECT_EQ(c.find("F2", "C9")->structure, "C9 x C3 x C7");
}

TEST(Catalog, JsonIsDeterministic) {
  auto const a = to_json(build_catalog(kCatalogBound, 1)).dump();
  auto const b = to_json(catalog()).dump();
  EXPECT_EQ(a, b);
  EXPECT_NE(render_text(catalog()).find("C4^2 x C2^2 x C3"), std::string::npos);
}

TEST(Verify, PublishedDatasetHasOnlyKnownTypos) {
  auto const r = verify(catalog());
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_EQ(r.count(CheckStatus::mismatch), 0u);
  EXPECT_EQ(r.table_rows_checked, 37u);
  EXPECT_EQ(expected_dataset().table_row_count(), 37u);
  std::vector<std::pair<std::string, std::string>> typos;
  for (auto const& c : r.checks) {
    if (c.status == CheckStatus::typo) {
      typos.emplace_back(c.subject, c.item);
    }
  }
  std::vector<std::pair<std::string, std::string>> const expected{
      {"F2[C5]", "decomposition"},
      {"F2[C7]", "decomposition"},
      {"F3[C4]", "decomposition_rendered"},
      {"F2[C8]", "structure"},
      {"F2[D6]", "group_presentation"}};
  EXPECT_EQ(typos, expected);
  EXPECT_EQ(r.count(CheckStatus::info), 1u);
}

TEST(Verify, MutatedDatasetsFail) {
  auto const& c = catalog();
  {
    ExpectedDataset d = expected_dataset();
    for (auto& claim : d.claims) {
      if (claim.table_row && claim.subject() == "F5[C4]") {
        claim.unit_count = 255;
      }
    }
    EXPECT_EQ(verify(c, d).exit_code(), 1);
  }
  {
    // Without its annotation the F2C7 misprint is a plain mismatch.
    ExpectedDataset d = expected_dataset();
    for (auto& claim : d.claims) {
      if (claim.table_row && claim.subject() == "F2[C7]") {
        claim.typos.clear();
      }
    }
    auto const r = verify(c, d);
    EXPECT_EQ(r.exit_code(), 1);
    EXPECT_EQ(r.count(CheckStatus::typo), 4u);
  }
  {
    // An annotation whose correction the oracle does not confirm.
    ExpectedDataset d = expected_dataset();
    for (auto& claim : d.claims) {
      if (claim.table_row && claim.subject() == "F2[C5]") {
        claim.typos.front().correction = "F2 + F{2^2}^2";
      }
    }
    EXPECT_EQ(verify(c, d).exit_code(), 1);
  }
  {
    Catalog broken = c;
    broken.rows.front().inconsistencies.push_back("injected");
    EXPECT_EQ(verify(broken).exit_code(), 2);
    EXPECT_FALSE(broken.consistent());
  }
}

TEST(Verify, DecompositionNormalization) {
  EXPECT_EQ(normalize_decomposition("F2 + F{2^2}^4"), "F2 + F4^4");
  EXPECT_EQ(normalize_decomposition("F2C2 + F{2^2}C2"), "F2[C2] + F4[C2]");
  EXPECT_EQ(normalize_decomposition("(F2C2)C2"), "F2[C2^2]");
  EXPECT_EQ(normalize_decomposition("F{3^2}^2"), "F9^2");
  EXPECT_FALSE(normalize_decomposition("F3^2 + F3_2"));
  EXPECT_FALSE(normalize_decomposition("G2"));
}
