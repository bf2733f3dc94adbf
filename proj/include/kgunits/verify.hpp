// Comparison of a computed catalog with the published dataset.
#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kgunits/abelian_type.hpp"
#include "kgunits/catalog.hpp"
#include "kgunits/decomposition.hpp"
#include "kgunits/presentations.hpp"
#include "kgunits/published.hpp"

namespace kgunits {

namespace detail {

  // Printed decompositions: sums of terms such as "F2", "F{2^2}^4",
  // "F2C2", "F{2^2}C2" or "(F2C2)C2", re-rendered in the catalog grammar.
  class DecompositionParser {
   public:
    explicit DecompositionParser(std::string const& text) : text_(text) {}

    std::optional<std::string> parse() {
      std::vector<Block> blocks;
      while (true) {
        auto term = this->term();
        if (!term) {
          return std::nullopt;
        }
        unsigned mult = 1;
        if (eat('^')) {
          auto m = number();
          if (!m || *m == 0) {
            return std::nullopt;
          }
          mult = static_cast<unsigned>(*m);
        }
        for (unsigned i = 0; i < mult; ++i) {
          blocks.push_back(*term);
        }
        skip();
        if (pos_ == text_.size()) {
          break;
        }
        if (!eat('+')) {
          return std::nullopt;
        }
      }
      return SummandList(std::move(blocks)).to_string();
    }

   private:
    void skip() {
      while (pos_ < text_.size()
             && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
    }
    bool eat(char c) {
      skip();
      if (pos_ < text_.size() && text_[pos_] == c) {
        ++pos_;
        return true;
      }
      return false;
    }
    std::optional<std::uint64_t> number() {
      skip();
      std::size_t const start = pos_;
      while (pos_ < text_.size()
             && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      if (start == pos_ || pos_ - start > 9) {
        return std::nullopt;
      }
      return std::stoull(text_.substr(start, pos_ - start));
    }

    std::optional<std::uint64_t> field_order() {
      if (!eat('F')) {
        return std::nullopt;
      }
      if (eat('{')) {
        auto p = number();
        if (!p || !eat('^')) {
          return std::nullopt;
        }
        auto e = number();
        if (!e || !eat('}') || *e > 30) {
          return std::nullopt;
        }
        return ipow(*p, static_cast<unsigned>(*e));
      }
      return number();
    }

    // Group suffixes "C<n>" directly after a field or a parenthesised term.
    std::optional<AbelianType> suffixes(AbelianType acc) {
      while (pos_ < text_.size() && text_[pos_] == 'C') {
        ++pos_;
        auto n = number();
        if (!n || *n == 0) {
          return std::nullopt;
        }
        acc = acc * AbelianType::cyclic(*n);
      }
      return acc;
    }

    std::optional<Block> term() {
      std::optional<Block> base;
      if (eat('(')) {
        base = term();
        if (!base || !eat(')')) {
          return std::nullopt;
        }
      } else {
        auto q = field_order();
        if (!q || *q < 2) {
          return std::nullopt;
        }
        base = Block{*q, 1, AbelianType{}};
      }
      auto g = suffixes(base->p_group);
      if (!g) {
        return std::nullopt;
      }
      base->p_group = *g;
      return base;
    }

    std::string text_;
    std::size_t pos_ = 0;
  };

}  // namespace detail

// Canonical rendering of a printed decomposition, or nullopt if it does not
// parse.
inline std::optional<std::string> normalize_decomposition(
    std::string const& printed) {
  return detail::DecompositionParser(printed).parse();
}

enum class CheckStatus { match, typo, mismatch, info };

inline char const* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::match:
      return "MATCH";
    case CheckStatus::typo:
      return "TYPO";
    case CheckStatus::mismatch:
      return "MISMATCH";
    case CheckStatus::info:
      return "INFO";
  }
  return "?";
}

struct CheckResult {
  std::string subject;  // "F2[C5]"
  std::string item;     // "decomposition", "unit_count", ...
  Source      source;
  bool        table_row = false;
  CheckStatus status    = CheckStatus::mismatch;
  std::string printed;
  std::string computed;
  std::string correction;  // for TYPO: the annotated intended value
  std::string note;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> inconsistencies;
  std::size_t              table_rows_checked = 0;

  std::size_t count(CheckStatus s) const {
    std::size_t n = 0;
    for (auto const& c : checks) {
      n += c.status == s ? 1 : 0;
    }
    return n;
  }

  // 0: all match (typos allowed); 1: some mismatch; 2: internal
  // inconsistency in the computed catalog.
  int exit_code() const {
    if (!inconsistencies.empty()) {
      return 2;
    }
    return count(CheckStatus::mismatch) == 0 ? 0 : 1;
  }
};

namespace detail {

  struct Comparison {
    bool        equal;
    std::string computed;
  };

  inline bool same_structure(std::string const& printed,
                             std::string const& computed) {
    if (printed == computed) {
      return true;
    }
    try {
      return AbelianType::parse(printed) == AbelianType::parse(computed);
    } catch (std::invalid_argument const&) {
      return false;
    }
  }

  // Compares one printed item against a catalog row.
  inline Comparison compare_item(std::string const& item,
                                 std::string const& printed,
                                 CatalogRow const&  row) {
    if (item == "size") {
      return {std::to_string(row.size) == printed, std::to_string(row.size)};
    }
    if (item == "unit_count") {
      return {std::to_string(row.unit_count) == printed,
              std::to_string(row.unit_count)};
    }
    if (item == "involutions") {
      return {std::to_string(row.involutions) == printed,
              std::to_string(row.involutions)};
    }
    if (item == "exponent") {
      return {std::to_string(row.exponent) == printed,
              std::to_string(row.exponent)};
    }
    if (item == "structure") {
      return {same_structure(printed, row.structure), row.structure};
    }
    if (item == "decomposition" || item == "decomposition_rendered") {
      auto const norm = normalize_decomposition(printed);
      return {norm && *norm == row.decomposition, row.decomposition};
    }
    if (item == "presentation") {
      for (auto const& pc : row.presentations) {
        if (pc.key == printed) {
          std::string c = pc.certified ? "certified" : to_string(pc.failed_step);
          if (pc.presented_order) {
            c += ", presented order " + std::to_string(*pc.presented_order);
          }
          return {pc.certified, c};
        }
      }
      return {false, "no such presentation"};
    }
    if (item == "group_presentation") {
      auto const p  = parse_presentation(printed);
      bool const ok = presents_group(p, *row.group);
      std::string c;
      try {
        c = "presents order " + std::to_string(coset_enumeration(p));
      } catch (CosetLimitExceeded const& e) {
        c = e.what();
      }
      return {ok, c};
    }
    throw std::logic_error("unknown claim item " + item);
  }

  inline std::vector<std::pair<std::string, std::string>> claim_items(
      PublishedClaim const& c) {
    std::vector<std::pair<std::string, std::string>> items;
    auto add = [&](char const* name, auto const& v) {
      if (v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(*v)>,
                                     std::string>) {
          items.emplace_back(name, *v);
        } else {
          items.emplace_back(name, std::to_string(*v));
        }
      }
    };
    add("size", c.size);
    add("decomposition", c.decomposition);
    add("decomposition_rendered", c.decomposition_rendered);
    add("unit_count", c.unit_count);
    add("structure", c.structure);
    add("presentation", c.presentation);
    add("involutions", c.involutions);
    add("exponent", c.exponent);
    add("group_presentation", c.group_presentation);
    return items;
  }

}  // namespace detail

inline VerifyReport verify(Catalog const&         cat,
                           ExpectedDataset const& data = expected_dataset()) {
  VerifyReport report;
  for (auto const& row : cat.rows) {
    for (auto const& why : row.inconsistencies) {
      report.inconsistencies.push_back(row.subject() + ": " + why);
    }
  }
  for (auto const& claim : data.claims) {
    CatalogRow const* row = cat.find(claim.field, claim.group);
    report.table_rows_checked += claim.table_row && row ? 1 : 0;
    for (auto const& [item, printed] : detail::claim_items(claim)) {
      CheckResult r;
      r.subject   = claim.subject();
      r.item      = item;
      r.source    = claim.source;
      r.table_row = claim.table_row;
      r.printed   = printed;
      if (row == nullptr) {
        r.status = CheckStatus::mismatch;
        r.note   = "no catalog row below bound " + std::to_string(cat.bound);
        report.checks.push_back(std::move(r));
        continue;
      }
      auto const      cmp  = detail::compare_item(item, printed, *row);
      TypoNote const* typo = claim.typo_for(item);
      r.computed           = cmp.computed;
      if (cmp.equal) {
        r.status = typo == nullptr ? CheckStatus::match : CheckStatus::mismatch;
        if (typo != nullptr) {
          r.note = "annotated misprint not reproduced";
        }
      } else if (typo == nullptr) {
        r.status = CheckStatus::mismatch;
      } else {
        r.correction = typo->correction;
        r.note       = typo->note;
        bool resolved = false;
        if (typo->kind == TypoNote::Kind::value) {
          resolved = detail::compare_item(item, typo->correction, *row).equal;
        } else if (auto const* other
                   = cat.find(claim.field, typo->correction)) {
          resolved = detail::compare_item(item, printed, *other).equal;
          r.computed = cmp.computed + " (" + other->subject() + ": "
                       + detail::compare_item(item, printed, *other).computed
                       + ")";
        }
        r.status = resolved ? CheckStatus::typo : CheckStatus::mismatch;
      }
      report.checks.push_back(std::move(r));
    }
  }
  // Alternative printings of a presentation are reported, not judged.
  for (auto const& pp : data.presentations) {
    if (!pp.alternative) {
      continue;
    }
    CheckResult r;
    r.subject = pp.field + "[" + pp.group + "]";
    r.item    = "presentation_variant";
    r.source  = pp.source;
    r.status  = CheckStatus::info;
    r.printed = pp.key;
    if (auto const* row = cat.find(pp.field, pp.group)) {
      r.computed = detail::compare_item("presentation", pp.key, *row).computed;
    }
    report.checks.push_back(std::move(r));
  }
  return report;
}

}  // namespace kgunits
