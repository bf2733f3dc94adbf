// JSON and plain-text rendering of catalogs, verification and scan reports.
#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "kgunits/catalog.hpp"
#include "kgunits/isoprobe.hpp"
#include "kgunits/verify.hpp"

namespace kgunits {

using Json = nlohmann::ordered_json;

namespace detail {

  // Display width of UTF-8 text (one column per code point).
  inline std::size_t display_width(std::string const& s) {
    std::size_t n = 0;
    for (unsigned char c : s) {
      n += (c & 0xC0) != 0x80 ? 1 : 0;
    }
    return n;
  }

  inline std::string render_table(
      std::vector<std::string> const&              header,
      std::vector<std::vector<std::string>> const& rows) {
    std::vector<std::size_t> w(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) {
      w[i] = display_width(header[i]);
    }
    for (auto const& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        w[i] = std::max(w[i], display_width(r[i]));
      }
    }
    std::string out;
    auto line = [&](std::vector<std::string> const& r) {
      std::string l;
      for (std::size_t i = 0; i < r.size(); ++i) {
        l += r[i];
        if (i + 1 < r.size()) {
          l += std::string(w[i] - display_width(r[i]) + 2, ' ');
        }
      }
      out += l + "\n";
    };
    line(header);
    std::vector<std::string> rule;
    for (auto x : w) {
      rule.emplace_back(x, '-');
    }
    line(rule);
    for (auto const& r : rows) {
      line(r);
    }
    return out;
  }

  template <class T>
  Json opt(std::optional<T> const& v) {
    return v ? Json(*v) : Json(nullptr);
  }

}  // namespace detail

inline Json to_json(PublishedClaim const& c) {
  Json j;
  j["source"]        = to_string(c.source);
  j["size"]          = detail::opt(c.size);
  j["decomposition"] = detail::opt(c.decomposition);
  if (c.decomposition_rendered) {
    j["decomposition_rendered"] = *c.decomposition_rendered;
  }
  j["unit_count"]   = detail::opt(c.unit_count);
  j["structure"]    = detail::opt(c.structure);
  j["presentation"] = detail::opt(c.presentation);
  Json typos        = Json::array();
  for (auto const& t : c.typos) {
    typos.push_back({{"item", t.item},
                     {"kind", t.kind == TypoNote::Kind::value ? "value"
                                                              : "subject"},
                     {"correction", t.correction},
                     {"note", t.note}});
  }
  j["typos"] = typos;
  return j;
}

inline Json to_json(PresentationCheck const& p) {
  Json j;
  j["key"]              = p.key;
  j["source"]           = to_string(p.source);
  j["alternative"]      = p.alternative;
  j["certified"]        = p.certified;
  j["convention"]       = to_string(p.convention);
  j["failed_step"]      = to_string(p.failed_step);
  j["failing_relators"] = p.failing_relators;
  j["closure"]          = p.closure_size;
  j["presented_order"]  = detail::opt(p.presented_order);
  if (!p.enumeration_error.empty()) {
    j["enumeration_error"] = p.enumeration_error;
  }
  return j;
}

inline Json to_json(CatalogRow const& r) {
  Json j;
  j["field"]         = r.field_label();
  j["p"]             = r.field->characteristic();
  j["k"]             = r.field->degree();
  j["group"]         = r.group_label();
  j["size"]          = r.size;
  j["decomposition"] = r.decomposition;
  j["unit_count"]    = r.unit_count;
  j["structure"]     = r.structure;
  j["method"]        = r.method;
  j["extension"]     = r.extension;
  j["checks"]        = {
      {"enumerated_structure", r.enumerated_structure},
      {"predicted_structure", detail::opt(r.predicted_structure)},
      {"predicted_unit_count", detail::opt(r.predicted_unit_count)},
      {"involutions", r.involutions},
      {"exponent", r.exponent},
      {"inconsistencies", r.inconsistencies},
  };
  if (!r.presentations.empty()) {
    Json ps = Json::array();
    for (auto const& p : r.presentations) {
      ps.push_back(to_json(p));
    }
    j["presentations"] = ps;
  }
  j["paper_row"] = r.paper_row ? to_json(*r.paper_row) : Json(nullptr);
  return j;
}

inline Json to_json(Catalog const& c) {
  Json rows = Json::array();
  for (auto const& r : c.rows) {
    rows.push_back(to_json(r));
  }
  Json j;
  j["bound"] = c.bound;
  j["rows"]  = rows;
  return j;
}

inline std::string render_text(Catalog const& c) {
  std::vector<std::vector<std::string>> rows;
  for (auto const& r : c.rows) {
    rows.push_back({r.subject(), std::to_string(r.size), r.decomposition,
                    std::to_string(r.unit_count), r.structure,
                    r.method + (r.extension ? " (extension)" : "")});
  }
  return detail::render_table(
      {"KG", "|KG|", "decomposition", "|U|", "U(KG)", "method"}, rows);
}

inline Json to_json(VerifyReport const& v) {
  Json checks = Json::array();
  for (auto const& c : v.checks) {
    Json j;
    j["subject"]  = c.subject;
    j["item"]     = c.item;
    j["source"]   = to_string(c.source);
    j["table_row"] = c.table_row;
    j["status"]   = to_string(c.status);
    j["printed"]  = c.printed;
    j["computed"] = c.computed;
    if (!c.correction.empty()) {
      j["correction"] = c.correction;
    }
    if (!c.note.empty()) {
      j["note"] = c.note;
    }
    checks.push_back(std::move(j));
  }
  Json j;
  j["checks"]  = checks;
  j["summary"] = {{"match", v.count(CheckStatus::match)},
                  {"typo", v.count(CheckStatus::typo)},
                  {"mismatch", v.count(CheckStatus::mismatch)},
                  {"info", v.count(CheckStatus::info)},
                  {"table_rows_checked", v.table_rows_checked}};
  j["inconsistencies"] = v.inconsistencies;
  j["exit_code"]       = v.exit_code();
  return j;
}

inline std::string render_text(VerifyReport const& v) {
  std::vector<std::vector<std::string>> rows;
  for (auto const& c : v.checks) {
    std::string detail = c.computed;
    if (!c.correction.empty()) {
      detail += "  [intended: " + c.correction + "]";
    }
    if (!c.note.empty()) {
      detail += "  " + c.note;
    }
    rows.push_back({to_string(c.status), c.subject, c.item,
                    to_string(c.source), c.printed, detail});
  }
  std::ostringstream out;
  out << detail::render_table(
      {"status", "algebra", "item", "source", "printed", "computed"}, rows);
  out << "\n"
      << v.count(CheckStatus::match) << " match, "
      << v.count(CheckStatus::typo) << " typo, "
      << v.count(CheckStatus::mismatch) << " mismatch, "
      << v.count(CheckStatus::info) << " info; " << v.table_rows_checked
      << " table rows checked\n";
  for (auto const& i : v.inconsistencies) {
    out << "INCONSISTENT " << i << "\n";
  }
  return out.str();
}

inline std::string scan_headline(ScanReport const& s) {
  if (!s.minimum) {
    return "no isomorphic pair of non-isomorphic groups below "
           + std::to_string(s.bound);
  }
  auto const& m = s.pairs[*s.minimum];
  std::string h = "minimum counterexample: " + m.field->label() + "["
                  + m.g->label() + "] = " + m.field->label() + "["
                  + m.h->label() + "], size " + std::to_string(m.size);
  if (m.verdict.witness) {
    h += ", isomorphism verified on "
         + std::to_string(m.verdict.witness->verified_products)
         + " basis products (checksum " + m.verdict.witness->checksum + ")";
  }
  h += s.minimality_verified() ? "; every smaller pair separated"
                               : "; minimality NOT verified";
  return h;
}

inline Json to_json(ScanReport const& s) {
  Json pairs = Json::array();
  for (auto const& r : s.pairs) {
    Json j;
    j["size"]    = r.size;
    j["field"]   = r.field->label();
    j["g"]       = r.g->label();
    j["h"]       = r.h->label();
    j["verdict"] = to_string(r.verdict.verdict);
    if (!r.verdict.invariant.empty()) {
      j["invariant"] = r.verdict.invariant;
      j["value_g"]   = r.verdict.value_a;
      j["value_h"]   = r.verdict.value_b;
    }
    if (r.verdict.witness) {
      j["verified_products"] = r.verdict.witness->verified_products;
      j["checksum"]          = r.verdict.witness->checksum;
    }
    pairs.push_back(std::move(j));
  }
  Json j;
  j["bound"]    = s.bound;
  j["headline"] = scan_headline(s);
  j["minimum"]  = s.minimum ? Json(*s.minimum) : Json(nullptr);
  j["inconclusive_below_minimum"] = s.inconclusive_below_minimum;
  j["pairs"]    = pairs;
  return j;
}

inline std::string render_text(ScanReport const& s) {
  std::vector<std::vector<std::string>> rows;
  for (auto const& r : s.pairs) {
    std::string why = r.verdict.invariant.empty()
                          ? ""
                          : r.verdict.invariant + ": " + r.verdict.value_a
                                + " vs " + r.verdict.value_b;
    if (r.verdict.witness) {
      why = "witness " + r.verdict.witness->checksum;
    }
    rows.push_back({std::to_string(r.size), r.field->label(), r.g->label(),
                    r.h->label(), to_string(r.verdict.verdict), why});
  }
  return scan_headline(s) + "\n\n"
         + detail::render_table({"size", "K", "G", "H", "verdict", "evidence"},
                                rows);
}

}  // namespace kgunits
