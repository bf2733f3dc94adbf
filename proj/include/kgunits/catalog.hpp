// The catalog of unit groups U(KG) for every finite field K and group G of
// order at most 9 with q^{|G|} below a bound, each row certified at least by
// exhaustive enumeration.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "kgunits/decomposition.hpp"
#include "kgunits/isoprobe.hpp"
#include "kgunits/presentations.hpp"
#include "kgunits/published.hpp"
#include "kgunits/unit_group.hpp"

namespace kgunits {

inline constexpr std::uint64_t kCatalogBound = 1024;

struct PresentationCheck {
  std::string                  key;
  Source                       source;
  bool                         alternative = false;
  bool                         certified   = false;
  CommutatorConvention         convention  = CommutatorConvention::inverse_first;
  CertificateStep              failed_step = CertificateStep::none;
  std::vector<std::size_t>     failing_relators;
  std::uint64_t                closure_size = 0;
  std::optional<std::uint64_t> presented_order;
  std::string                  enumeration_error;
};

struct CatalogRow {
  Field         field;
  GroupPtr      group;
  std::uint64_t size      = 0;
  bool          extension = false;  // size at or above 1024

  std::string   decomposition = "—";
  std::uint64_t unit_count    = 0;
  std::string   structure;
  std::string   method;  // enumeration | lemma | decomposition | presentation

  std::string                  enumerated_structure;
  std::optional<std::string>   predicted_structure;
  std::optional<std::uint64_t> predicted_unit_count;
  std::uint64_t                involutions = 0;
  std::uint64_t                exponent    = 0;

  std::vector<PresentationCheck> presentations;
  std::vector<std::string>       inconsistencies;

  PublishedClaim const* paper_row = nullptr;

  std::string field_label() const {
    return field->label();
  }
  std::string group_label() const {
    return group->label();
  }
  std::string subject() const {
    return field_label() + "[" + group_label() + "]";
  }
};

struct Catalog {
  std::uint64_t           bound = kCatalogBound;
  std::vector<CatalogRow> rows;

  CatalogRow const* find(std::string const& field,
                         std::string const& group) const {
    for (auto const& r : rows) {
      if (r.field_label() == field && r.group_label() == group) {
        return &r;
      }
    }
    return nullptr;
  }

  bool consistent() const {
    return std::all_of(rows.begin(), rows.end(), [](CatalogRow const& r) {
      return r.inconsistencies.empty();
    });
  }
};

namespace detail {

  // G an elementary abelian p-group for p = char K: the closed form for
  // F_{p^k} C_p^n applies directly.
  inline bool lemma_applies(Algebra const& a) {
    if (!a.is_commutative()) {
      return false;
    }
    auto const t = abelian_invariants(a.group());
    if (t.is_trivial()) {
      return false;
    }
    return t.primary_parts().size() == 1
           && t.primary_parts().begin()->first == a.field()->characteristic()
           && is_elementary(t);
  }

  inline void certify_presentations(CatalogRow& row, UnitGroup const& u) {
    for (auto const& pp : expected_dataset().presentations) {
      if (pp.field != row.field_label() || pp.group != row.group_label()) {
        continue;
      }
      auto const        cc = certify_claim(u, pp.claim);
      PresentationCheck pc;
      pc.key               = pp.key;
      pc.source            = pp.source;
      pc.alternative       = pp.alternative;
      pc.certified         = cc.certificate.certified();
      pc.convention        = cc.convention;
      pc.failed_step       = cc.certificate.failed_step;
      pc.failing_relators  = cc.certificate.failing_relators;
      pc.closure_size      = cc.certificate.closure_size;
      pc.presented_order   = cc.certificate.presented_order;
      pc.enumeration_error = cc.certificate.enumeration_error;
      row.presentations.push_back(std::move(pc));
    }
  }

  inline CatalogRow build_row(Field const& f, GroupPtr const& g) {
    CatalogRow row;
    row.field     = f;
    row.group     = g;
    auto const a  = Algebra::make(f, g);
    row.size      = a->size();
    row.extension = row.size >= kCatalogBound;

    UnitGroup const u(a);
    row.unit_count  = u.size();
    row.involutions = count_order_dividing(u.spectrum(), 2);
    row.exponent    = exponent(u);
    auto const desc = classify(u);
    row.enumerated_structure = describe(desc);
    row.structure            = row.enumerated_structure;
    row.method               = "enumeration";

    if (a->is_commutative()) {
      std::optional<SummandList> s;
      try {
        s = decompose_abelian(*a);
      } catch (std::out_of_range const&) {
        // splitting field beyond the supported field orders
      }
      if (s) {
        row.decomposition        = s->to_string();
        row.predicted_unit_count = predicted_unit_count(*s);
        if (*row.predicted_unit_count != row.unit_count) {
          row.inconsistencies.push_back(
              "block unit counts multiply to "
              + std::to_string(*row.predicted_unit_count) + ", not |U| = "
              + std::to_string(row.unit_count));
        }
        if (auto const p = predicted_unit_structure(*s)) {
          row.predicted_structure = p->to_string();
          if (!(AbelianType::parse(row.enumerated_structure) == *p)) {
            row.inconsistencies.push_back("predicted structure "
                                          + p->to_string()
                                          + " differs from enumeration");
          }
          row.method = lemma_applies(*a) ? "lemma" : "decomposition";
        }
      }
      if (AbelianType::parse(row.structure).order() != row.unit_count) {
        row.inconsistencies.push_back("structure " + row.structure
                                      + " has the wrong order");
      }
    } else {
      certify_presentations(row, u);
      PresentationCheck const* primary = nullptr;
      for (auto const& pc : row.presentations) {
        if (pc.certified && !pc.alternative) {
          primary = &pc;
          break;
        }
      }
      if (primary != nullptr) {
        row.method = "presentation";
        if (!std::holds_alternative<DihedralDescriptor>(desc)) {
          row.structure = describe(PresentedDescriptor{primary->key, u.size()});
        }
      }
      if (descriptor_order(desc) != row.unit_count) {
        row.inconsistencies.push_back("structure order differs from |U|");
      }
    }
    return row;
  }

}  // namespace detail

// One row per (field, group) with q^{|G|} < bound, q < 1024 and |G| <= 9;
// sorted by size, then field order, then group label.  Rows are computed
// in parallel and assembled in order.
inline Catalog build_catalog(std::uint64_t bound = kCatalogBound,
                             unsigned      jobs  = 1) {
  Catalog cat;
  cat.bound = bound;
  std::vector<std::pair<Field, GroupPtr>> cases;
  for (auto const& f : detail::fields_below(1024)) {
    for (unsigned n = 1; n <= 9; ++n) {
      std::uint64_t const q = f->order();
      std::uint64_t size = 1;
      for (unsigned i = 0; i < n && size < bound; ++i) {
        size *= q;
      }
      if (size >= bound) {
        break;
      }
      for (auto const& g : groups_of_order(n)) {
        cases.emplace_back(f, g);
      }
    }
  }
  std::sort(cases.begin(), cases.end(), [](auto const& x, auto const& y) {
    auto key = [](auto const& c) {
      return std::make_tuple(detail::ipow(c.first->order(), static_cast<unsigned>(c.second->order())),
                             c.first->order(), c.second->label());
    };
    return key(x) < key(y);
  });
  cat.rows.resize(cases.size());
  detail::parallel_for(cases.size(), jobs, [&](std::size_t i) {
    cat.rows[i] = detail::build_row(cases[i].first, cases[i].second);
  });
  for (auto& row : cat.rows) {
    for (auto const& c : expected_dataset().claims) {
      if (c.table_row && c.field == row.field_label()
          && c.group == row.group_label()) {
        row.paper_row = &c;
      }
    }
  }
  return cat;
}

}  // namespace kgunits
