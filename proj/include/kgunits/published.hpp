// Published unit-group results for |KG| < 1024, transcribed verbatim into
// ASCII (F{2^2} for the field of order 2^2, "+" for direct sum, "x" for
// direct product), including known misprints.  Each misprint carries an
// annotation naming the corrected value; verification accepts a misprint
// only when the computed value agrees with the correction.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kgunits/field_spec.hpp"
#include "kgunits/presentations.hpp"

namespace kgunits {

enum class Source { table, prose, both };

inline char const* to_string(Source s) {
  switch (s) {
    case Source::table:
      return "table";
    case Source::prose:
      return "prose";
    case Source::both:
      return "both";
  }
  return "?";
}

struct TypoNote {
  enum class Kind {
    value,    // printed value wrong; correction is the intended value
    subject,  // printed value belongs to another algebra; correction is its
              // group label
  };
  std::string item;
  Kind        kind;
  std::string correction;
  std::string note;
};

struct PublishedClaim {
  std::string field;  // "F2", "F4", ...
  std::string group;  // catalog label
  Source      source    = Source::prose;
  bool        table_row = false;

  std::optional<std::uint64_t> size;
  std::optional<std::string>   decomposition;
  // Typeset form of the decomposition where it differs from the source text.
  std::optional<std::string>   decomposition_rendered;
  std::optional<std::uint64_t> unit_count;
  std::optional<std::string>   structure;     // abelian grammar or "D12"
  std::optional<std::string>   presentation;  // key into the presentations
  std::optional<std::uint64_t> involutions;   // units of order 1 or 2
  std::optional<std::uint64_t> exponent;
  std::optional<std::string>   group_presentation;  // of G itself

  std::vector<TypoNote> typos;

  std::string subject() const {
    return field + "[" + group + "]";
  }
  TypoNote const* typo_for(std::string const& item) const {
    for (auto const& t : typos) {
      if (t.item == item) {
        return &t;
      }
    }
    return nullptr;
  }
};

struct PublishedPresentation {
  std::string       key;
  std::string       field;
  std::string       group;
  Source            source;
  // An alternative printing of another key's relators: reported, never
  // treated as a claim on its own.
  bool              alternative = false;
  PresentationClaim claim;
};

struct ExpectedDataset {
  std::vector<PublishedClaim>        claims;
  std::vector<PublishedPresentation> presentations;

  std::size_t table_row_count() const {
    std::size_t n = 0;
    for (auto const& c : claims) {
      n += c.table_row ? 1 : 0;
    }
    return n;
  }
};

namespace detail {

  inline std::string field_text(unsigned p, unsigned n) {
    return n == 1 ? "F" + std::to_string(p)
                  : "F{" + std::to_string(p) + "^" + std::to_string(n) + "}";
  }

  inline std::string cyc(std::uint64_t n) {
    return "C" + std::to_string(n);
  }

  inline PublishedClaim table_row(std::string                field,
                                  std::string                group,
                                  std::uint64_t              size,
                                  std::optional<std::string> decomposition,
                                  std::uint64_t              units,
                                  std::string                structure) {
    PublishedClaim c;
    c.field         = std::move(field);
    c.group         = std::move(group);
    c.source        = Source::table;
    c.table_row     = true;
    c.size          = size;
    c.decomposition = std::move(decomposition);
    c.unit_count    = units;
    if (structure.rfind("presentation:", 0) == 0) {
      c.presentation = structure.substr(13);
    } else {
      c.structure = std::move(structure);
    }
    return c;
  }

  inline std::vector<PublishedClaim> table_rows() {
    using std::nullopt;
    std::vector<PublishedClaim> t;
    t.push_back(table_row("F2", "C1", 2, "F2", 1, "C1"));
    t.push_back(table_row("F2", "C2", 4, nullopt, 2, "C2"));
    t.push_back(table_row("F2", "C3", 8, "F2 + F{2^2}", 3, "C3"));
    t.push_back(table_row("F2", "C2xC2", 16, "(F2C2)C2", 8, "C2^3"));
    t.push_back(table_row("F2", "C4", 16, nullopt, 8, "C2 x C4"));
    t.push_back(table_row("F2", "C5", 32, "F2 + F{2^2}", 15, "C15"));
    t.back().typos.push_back({"decomposition", TypoNote::Kind::value,
                              "F2 + F{2^4}",
                              "exponent 2 printed for 4; x^4 + x^3 + x^2 "
                              "+ x + 1 is irreducible over F2"});
    t.push_back(table_row("F2", "C6", 64, "F2C2 + F{2^2}C2", 24, "C2^3 x C3"));
    t.push_back(table_row("F2", "D6", 64, nullopt, 12, "D12"));
    t.push_back(table_row("F2", "C7", 128, "F2 + F{2^3}", 49, "C7^2"));
    t.back().typos.push_back({"decomposition", TypoNote::Kind::value,
                              "F2 + F{2^3}^2",
                              "multiplicity 2 of F{2^3} missing; x^7 - 1 "
                              "has two cubic factors over F2"});
    t.push_back(table_row("F2", "C2^3", 256, nullopt, 128, "C2^7"));
    t.push_back(table_row("F2", "C4xC2", 256, nullopt, 128, "C2^5 x C4"));
    t.push_back(table_row("F2", "C8", 256, nullopt, 128, "C8 x C4 x C2^2"));
    t.push_back(table_row("F2", "D8", 256, nullopt, 128,
                          "presentation:F2[D8]"));
    t.push_back(table_row("F2", "Q8", 256, nullopt, 128,
                          "presentation:F2[Q8]"));
    t.push_back(table_row("F2", "C3xC3", 512, "F2 + F{2^2}^4", 81, "C3^4"));
    t.push_back(table_row("F2", "C9", 512, "F2 + F{2^2} + F{2^6}", 189,
                          "C3 x C63"));
    t.push_back(table_row("F4", "C1", 4, "F{2^2}", 3, "C3"));
    t.push_back(table_row("F4", "C2", 16, nullopt, 12, "C2^2 x C3"));
    t.push_back(table_row("F4", "C3", 64, "F{2^2}^3", 27, "C3^3"));
    t.push_back(table_row("F4", "C2xC2", 256, nullopt, 192, "C2^6 x C3"));
    t.push_back(table_row("F4", "C4", 256, nullopt, 192,
                          "C2^2 x C4^2 x C3"));
    t.push_back(table_row("F3", "C1", 3, "F3", 2, "C2"));
    t.push_back(table_row("F3", "C2", 9, "F3^2", 4, "C2^2"));
    t.push_back(table_row("F3", "C3", 27, nullopt, 18, "C3^2 x C2"));
    t.push_back(table_row("F3", "C2xC2", 81, "F3^4", 16, "C2^4"));
    t.push_back(table_row("F3", "C4", 81, "F3^2 + F{3^2}", 32, "C2^2 x C8"));
    t.back().decomposition_rendered = "F3^2 + F3_2";
    t.back().typos.push_back({"decomposition_rendered", TypoNote::Kind::value,
                              "F3^2 + F{3^2}",
                              "typeset with the field exponent as a "
                              "subscript"});
    t.push_back(table_row("F3", "C5", 243, "F3 + F{3^4}", 160, "C2 x C80"));
    t.push_back(table_row("F3", "C6", 729, nullopt, 324, "C3^4 x C2^2"));
    t.push_back(table_row("F3", "D6", 729, nullopt, 324,
                          "presentation:F3[D6]"));
    t.push_back(table_row("F9", "C1", 9, "F{3^2}", 8, "C8"));
    t.push_back(table_row("F9", "C2", 81, "F{3^2}^2", 64, "C8^2"));
    t.push_back(table_row("F9", "C3", 729, nullopt, 648, "C3^4 x C8"));
    t.push_back(table_row("F5", "C1", 5, "F5", 4, "C4"));
    t.push_back(table_row("F5", "C2", 25, "F5^2", 16, "C4^2"));
    t.push_back(table_row("F5", "C3", 125, "F5 + F{5^2}", 96, "C4 x C24"));
    t.push_back(table_row("F5", "C2xC2", 625, "F5^4", 256, "C4^4"));
    t.push_back(table_row("F5", "C4", 625, "F5^4", 256, "C4^4"));
    return t;
  }

  inline PublishedClaim prose(std::string field, std::string group) {
    PublishedClaim c;
    c.field  = std::move(field);
    c.group  = std::move(group);
    c.source = Source::prose;
    return c;
  }

  // Closed-form families for |G| <= 4 over F_{2^k}, F_{3^k} and p > 3.
  inline std::vector<PublishedClaim> family_claims() {
    std::vector<PublishedClaim> out;
    auto in_range = [](std::uint64_t q, unsigned n) {
      return ipow(q, n) < 1024;
    };
    for (unsigned p = 2; p < 1024; ++p) {
      if (!is_prime(p)) {
        continue;
      }
      for (unsigned k = 1; ipow(p, k) < 1024; ++k) {
        std::uint64_t const q  = ipow(p, k);
        std::string const   fl = "F" + std::to_string(q);
        std::string const   ft = field_text(p, k);
        {
          auto c          = prose(fl, "C1");
          c.decomposition = ft;
          c.structure     = cyc(q - 1);
          out.push_back(std::move(c));
        }
        if (in_range(q, 2)) {
          auto c = prose(fl, "C2");
          if (p == 2) {
            c.structure = "C2^" + std::to_string(k) + " x " + cyc(q - 1);
          } else {
            c.decomposition = ft + "^2";
            c.structure     = cyc(q - 1) + "^2";
          }
          out.push_back(std::move(c));
        }
        if (in_range(q, 3)) {
          auto c = prose(fl, "C3");
          if (p == 3) {
            c.structure = "C3^" + std::to_string(2 * k) + " x " + cyc(q - 1);
          } else if ((q - 1) % 3 == 0) {
            c.decomposition = ft + "^3";
            c.structure     = cyc(q - 1) + "^3";
          } else {
            c.decomposition = ft + " + " + field_text(p, 2 * k);
            c.structure     = cyc(q - 1) + " x " + cyc(q * q - 1);
          }
          out.push_back(std::move(c));
        }
        if (p > 3 && in_range(q, 4)) {
          auto c          = prose(fl, "C2xC2");
          c.decomposition = ft + "^4";
          out.push_back(std::move(c));
          auto d          = prose(fl, "C4");
          d.decomposition = (q - 1) % 4 == 0
                                ? ft + "^4"
                                : ft + "^2 + " + field_text(p, 2 * k);
          out.push_back(std::move(d));
        }
      }
    }
    return out;
  }

  inline std::vector<PublishedClaim> case_claims() {
    std::vector<PublishedClaim> out;
    {
      auto c       = prose("F2", "C4");
      c.unit_count = 8;
      c.exponent   = 4;
      out.push_back(std::move(c));
    }
    {
      // The C4 argument concludes with U(F2C8) in place of U(F2C4).
      auto c      = prose("F2", "C8");
      c.structure = "C2 x C4";
      c.typos.push_back({"structure", TypoNote::Kind::subject, "C4",
                         "the argument is about F2C4; C8 is a slip"});
      out.push_back(std::move(c));
    }
    {
      auto c          = prose("F2", "C5");
      c.decomposition = "F2 + F{2^4}";
      out.push_back(std::move(c));
    }
    {
      auto c          = prose("F2", "C6");
      c.decomposition = "F2C2 + F{2^2}C2";
      c.structure     = "C2^3 x C3";
      out.push_back(std::move(c));
    }
    {
      auto c               = prose("F2", "D6");
      c.presentation       = "F2[D6]";
      c.group_presentation = "x,y | x^3 = y^1 = 1, yxy = x^2";
      c.typos.push_back({"group_presentation", TypoNote::Kind::value,
                         "x,y | x^3 = y^2 = 1, yxy = x^2",
                         "y^1 = 1 collapses the group; y^2 intended"});
      out.push_back(std::move(c));
    }
    {
      auto c          = prose("F2", "C7");
      c.decomposition = "F2 + F{2^3}^2";
      c.structure     = "C7^2";
      out.push_back(std::move(c));
    }
    {
      auto c               = prose("F2", "C4xC2");
      c.exponent           = 4;
      c.unit_count         = 128;
      c.involutions        = 64;
      c.structure          = "C2^5 x C4";
      c.group_presentation = "x,y | x^4 = y^2 = 1 = [x,y]";
      out.push_back(std::move(c));
    }
    {
      auto c        = prose("F2", "C8");
      c.unit_count  = 128;
      c.exponent    = 8;
      c.involutions = 16;
      c.structure   = "C8 x C4 x C2 x C2";
      out.push_back(std::move(c));
    }
    {
      auto c               = prose("F2", "D8");
      c.presentation       = "F2[D8]";
      c.group_presentation = "x,y | x^4 = y^2 = 1, [x,y] = x^2";
      out.push_back(std::move(c));
    }
    {
      auto c               = prose("F2", "Q8");
      c.presentation       = "F2[Q8]";
      c.group_presentation = "x,y | x^4 = 1, x^2 = y^2, [x,y] = x^2";
      out.push_back(std::move(c));
    }
    {
      auto c          = prose("F2", "C3xC3");
      c.decomposition = "F2 + F{2^2}^4";
      c.structure     = "C3^4";
      out.push_back(std::move(c));
    }
    {
      auto c          = prose("F2", "C9");
      c.decomposition = "F2 + F{2^2} + F{2^6}";
      out.push_back(std::move(c));
    }
    {
      auto c      = prose("F4", "C2xC2");
      c.structure = "C2^6 x C3";
      out.push_back(std::move(c));
    }
    {
      auto c        = prose("F4", "C4");
      c.exponent    = 12;
      c.unit_count  = 192;
      c.involutions = 16;
      c.structure   = "C2^2 x C4^2 x C3";
      out.push_back(std::move(c));
    }
    {
      auto c          = prose("F3", "C2xC2");
      c.decomposition = "F3^4";
      out.push_back(std::move(c));
    }
    {
      auto c          = prose("F3", "C4");
      c.decomposition = "F3^2 + F{3^2}";
      out.push_back(std::move(c));
    }
    {
      auto c          = prose("F3", "C5");
      c.decomposition = "F3 + F{3^4}";
      out.push_back(std::move(c));
    }
    {
      auto c      = prose("F3", "C6");
      c.structure = "C3^4 x C2^2";
      out.push_back(std::move(c));
    }
    {
      auto c               = prose("F3", "D6");
      c.presentation       = "F3[D6]";
      c.group_presentation = "x,y | x^3 = y^2 = 1, [x,y] = x";
      out.push_back(std::move(c));
    }
    return out;
  }

  inline std::vector<PublishedPresentation> presentation_data() {
    std::string const d8
        = "x^4 = y^2 = [a,x]^2 = [a,y]^2 = a^4 = 1, [x,y] = x^2, "
          "[a^2,x] = [a^2,y] = [a,x,y] = [x^2,a] = 1";
    std::string const q8
        = "x^4 = [a,x]^2 = [a,y]^2 = a^4 = 1, y^2 = x^2, [x,y] = x^2, "
          "[a^2,x] = [a^2,y] = [a,x,y] = [x^2,a] = 1";
    std::string const d6_head
        = "v1^6 = v2^6 = v3^3 = [v1^3,v2] = [v1^3,v3] = [v2^2,v1] = "
          "[v2^2,v3] = 1, v3v2 = v1v2v1v3^2, ";
    std::string const d6_tail = ", v2v1 = v1^2v2v1^2v2v1v2^-1v1^2";
    std::vector<std::string> const xya = {"x", "y", "a"};
    std::vector<std::string> const xy_a = {"x", "y", "x + y + x*y"};
    std::vector<std::string> const vs = {"v1", "v2", "v3"};
    std::vector<std::string> const vvals
        = {"-x^2", "1 - x^2 + y", "1 + (x - x^2)(1 - y)"};
    return {
        {"F2[D6]", "F2", "D6", Source::prose, false,
         {"D12", {"w", "y"}, {"1 + x^2 + y + x*y + x^2*y", "y"},
          "w^6 = y^2 = 1, ywy = w^5"}},
        {"F2[D8]", "F2", "D8", Source::both, false, {"F2[D8]", xya, xy_a, d8}},
        {"F2[Q8]", "F2", "Q8", Source::both, false, {"F2[Q8]", xya, xy_a, q8}},
        {"F3[D6]", "F3", "D6", Source::table, false,
         {"F3[D6]", vs, vvals, d6_head + "v3v1 = v2v1^5v2^5v3" + d6_tail}},
        {"F3[D6]/prose", "F3", "D6", Source::prose, true,
         {"F3[D6]", vs, vvals, d6_head + "v3v1 = v2v1^5v3^5" + d6_tail}},
    };
  }

}  // namespace detail

inline ExpectedDataset const& expected_dataset() {
  static ExpectedDataset const data = [] {
    ExpectedDataset d;
    d.claims = detail::table_rows();
    // A table row also stated in closed form elsewhere is tagged "both".
    auto families = detail::family_claims();
    for (auto& row : d.claims) {
      for (auto const& f : families) {
        if (f.field == row.field && f.group == row.group) {
          row.source = Source::both;
        }
      }
    }
    for (auto& f : families) {
      d.claims.push_back(std::move(f));
    }
    for (auto& c : detail::case_claims()) {
      d.claims.push_back(std::move(c));
    }
    d.presentations = detail::presentation_data();
    return d;
  }();
  return data;
}

inline PublishedPresentation const* find_presentation(std::string const& key) {
  for (auto const& p : expected_dataset().presentations) {
    if (p.key == key) {
      return &p;
    }
  }
  return nullptr;
}

}  // namespace kgunits
