// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.  All comparisons are exact integers or exact strings.
#include <array>
#include <chrono>
#include <functional>
#include <cstdio>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

#include "kgunits/kgunits.hpp"

using namespace kgunits;

namespace {

// Involution counts (units of order <= 2) stated in the counting arguments.
constexpr std::uint64_t kInvolutionsF2C4xC2 = 64;  // 2^6
constexpr std::uint64_t kInvolutionsF2C8    = 16;  // 2^4
constexpr std::uint64_t kInvolutionsF4C4    = 16;  // 2^4
constexpr std::uint64_t kMinimumSize        = 625;
constexpr std::size_t   kMinimumProducts    = 16;
constexpr std::size_t   kTableRows          = 37;

struct Outcome {
  bool        pass = true;
  std::string detail;
  void fail(std::string const& why) {
    if (pass) {
      detail.clear();
    }
    pass = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
};

Field field_of(std::string const& label) {
  return make_field_of_order(std::stoull(label.substr(1)));
}

std::map<std::string, std::unique_ptr<UnitGroup>>& unit_cache() {
  static std::map<std::string, std::unique_ptr<UnitGroup>> c;
  return c;
}

UnitGroup const& units(std::string const& field, std::string const& group) {
  auto& slot = unit_cache()[field + "[" + group + "]"];
  if (!slot) {
    slot = std::make_unique<UnitGroup>(
        Algebra::make(field_of(field), group_by_label(group)));
  }
  return *slot;
}

// 1. Unit counts and structures of the table rows, from enumeration alone.
Outcome table_reproduction() {
  Outcome     o;
  std::size_t rows = 0;
  for (auto const& c : expected_dataset().claims) {
    if (!c.table_row) {
      continue;
    }
    ++rows;
    auto const& u = units(c.field, c.group);
    if (u.size() != *c.unit_count) {
      o.fail(c.subject() + " |U| " + std::to_string(u.size()));
    }
    if (c.structure && *c.structure == "D12") {
      if (!recognize_dihedral(u) || u.size() != 12) {
        o.fail(c.subject() + " not dihedral of order 12");
      }
    } else if (c.structure) {
      auto const t = abelian_type_from_spectrum(u.spectrum());
      if (!u.is_abelian() || !(t == AbelianType::parse(*c.structure))) {
        o.fail(c.subject() + " structure " + t.to_string());
      }
    } else if (c.presentation) {
      auto const* pp = find_presentation(*c.presentation);
      if (pp == nullptr || !certify_claim(u, pp->claim).certificate.certified()) {
        o.fail(c.subject() + " presentation not certified");
      }
    }
  }
  if (rows != kTableRows) {
    o.fail(std::to_string(rows) + " rows");
  }
  if (o.pass) {
    o.detail = std::to_string(rows) + " rows: unit counts and structures equal";
  }
  return o;
}

// 2. U(F_{p^k} C_p^n) = C_p^{k p^n - k} x C_{p^k - 1} whenever p^{k p^n} < 1024.
Outcome elementary_grid() {
  Outcome     o;
  std::size_t cases = 0;
  std::map<std::pair<unsigned, unsigned>, std::string> const labels{
      {{2, 1}, "C2"}, {{2, 2}, "C2xC2"}, {{2, 3}, "C2^3"},
      {{3, 1}, "C3"}, {{3, 2}, "C3xC3"}, {{5, 1}, "C5"}, {{7, 1}, "C7"}};
  for (auto const& [pn_key, label] : labels) {
    auto const [p, n] = pn_key;
    std::uint64_t const pn = detail::ipow(p, n);
    for (unsigned k = 1;; ++k) {
      std::uint64_t const q = detail::ipow(p, k);
      // p^{k p^n} < 1024 with overflow-safe accumulation
      std::uint64_t size = 1;
      for (std::uint64_t i = 0; i < pn && size < 1024; ++i) {
        size *= q;
      }
      if (size >= 1024) {
        break;
      }
      ++cases;
      auto const& u = units("F" + std::to_string(q), label);
      std::vector<std::uint64_t> orders(k * (pn - 1), p);
      orders.push_back(q - 1);
      auto const expected = AbelianType::from_cyclic_orders(orders);
      auto const got      = abelian_type_from_spectrum(u.spectrum());
      if (!(got == expected)) {
        o.fail("F" + std::to_string(q) + "[" + label + "] " + got.to_string());
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(cases) + " (p,k,n) cases";
  }
  return o;
}

std::string replace_once(std::string s, std::string const& from,
                         std::string const& to) {
  auto const at = s.find(from);
  if (at == std::string::npos) {
    throw std::logic_error("mutation anchor '" + from + "' not found");
  }
  return s.replace(at, from.size(), to);
}

// 3. The four nonabelian presentations, plus mutations that must fail.
Outcome presentations() {
  Outcome o;
  struct Expect {
    char const*   key;
    std::uint64_t order;
  };
  for (auto const& e : {Expect{"F2[D6]", 12}, Expect{"F2[D8]", 128},
                        Expect{"F2[Q8]", 128}, Expect{"F3[D6]", 324}}) {
    auto const* pp = find_presentation(e.key);
    auto const& u  = units(pp->field, pp->group);
    auto const  c  = certify_claim(u, pp->claim);
    if (!c.certificate.certified() || c.certificate.presented_order != e.order
        || u.size() != e.order) {
      o.fail(std::string(e.key) + ": " + to_string(c.certificate.failed_step));
    }
  }
  // Mutations: drop one defining relation; swap the y^2 relation between
  // the D8 and Q8 presentations.
  struct Mutation {
    char const* key;
    std::string from, to;
  };
  std::vector<Mutation> const mutations{
      {"F2[D6]", "w^6 = ", ""},
      {"F2[D6]", ", ywy = w^5", ""},
      {"F2[D8]", "[x,y] = x^2, ", ""},
      {"F2[D8]", "a^4 = 1", "1 = 1"},
      {"F2[D8]", "x^4 = y^2 = ", "x^4 = y^2*x^-2 = "},
      {"F2[Q8]", "y^2 = x^2, ", "y^2 = 1, "},
      {"F2[Q8]", "[x,y] = x^2, ", ""},
      {"F3[D6]", "v3^3 = ", ""},
      {"F3[D6]", "v3v2 = v1v2v1v3^2, ", ""},
  };
  std::size_t rejected = 0;
  for (auto const& m : mutations) {
    auto const* pp    = find_presentation(m.key);
    auto        claim = pp->claim;
    claim.relators    = replace_once(claim.relators, m.from, m.to);
    auto const c      = certify_claim(units(pp->field, pp->group), claim);
    if (c.certificate.certified()) {
      o.fail(std::string(m.key) + " mutation '" + m.from + "' certified");
    } else {
      ++rejected;
    }
  }
  // Census of every single-relator drop: a drop that still certifies is a
  // relator implied by the others, which the certificate confirms.
  std::size_t drops = 0, implied = 0;
  for (auto const* key : {"F2[D6]", "F2[D8]", "F2[Q8]", "F3[D6]"}) {
    auto const* pp = find_presentation(key);
    auto const& u  = units(pp->field, pp->group);
    auto const  full = certify_claim(u, pp->claim);
    std::vector<AlgebraElement> gens;
    for (auto const& v : pp->claim.generator_values) {
      gens.push_back(parse_element(u.algebra(), v));
    }
    for (std::size_t i = 0; i < full.presentation.relators.size(); ++i) {
      FpGroup q = full.presentation;
      q.relators.erase(q.relators.begin() + static_cast<std::ptrdiff_t>(i));
      ++drops;
      implied += certify_unit_group_presentation(u, q, gens).certified() ? 1 : 0;
    }
  }
  // F3[D6]: which printed variant certifies.
  std::string variants;
  bool        any = false;
  for (auto const* key : {"F3[D6]", "F3[D6]/prose"}) {
    auto const* pp = find_presentation(key);
    auto const  c  = certify_claim(units("F3", "D6"), pp->claim);
    any            = any || c.certificate.certified();
    variants += std::string(variants.empty() ? "" : ", ") + to_string(pp->source)
                + " variant "
                + (c.certificate.certified() ? "certifies"
                                             : to_string(c.certificate.failed_step));
  }
  if (!any) {
    o.fail("no F3[D6] variant certifies");
  }
  if (o.pass) {
    o.detail = "4 certified (12, 128, 128, 324); " + std::to_string(rejected)
               + " mutations rejected (" + std::to_string(implied) + " of "
               + std::to_string(drops)
               + " single-relator drops are implied by the rest); F3[D6]: "
               + variants;
  }
  return o;
}

// 4. Blockwise prediction against enumeration on every commutative row.
Outcome decomposition_oracle(Catalog const& cat) {
  Outcome     o;
  std::size_t rows = 0, structures = 0;
  for (auto const& row : cat.rows) {
    if (!row.group->is_abelian()) {
      continue;
    }
    ++rows;
    auto const a = Algebra::make(row.field, row.group);
    auto const s = decompose_abelian(*a);
    auto const& u = units(row.field_label(), row.group_label());
    if (predicted_unit_count(s) != u.size()) {
      o.fail(row.subject() + " block product " +
             std::to_string(predicted_unit_count(s)));
    }
    if (auto const t = predicted_unit_structure(s)) {
      ++structures;
      if (!(*t == abelian_type_from_spectrum(u.spectrum()))) {
        o.fail(row.subject() + " predicted " + t->to_string());
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(rows) + " commutative rows, "
               + std::to_string(structures) + " structures predicted";
  }
  return o;
}

// 5. Minimum counterexample and separation of every smaller pair.
Outcome counterexample(ScanReport const& s) {
  Outcome o;
  if (!s.minimum) {
    o.fail("no isomorphic pair found");
    return o;
  }
  auto const& m = s.pairs[*s.minimum];
  if (m.size != kMinimumSize || m.field->label() != "F5" || m.g->label() != "C4"
      || m.h->label() != "C2xC2") {
    o.fail("minimum is " + m.field->label() + "[" + m.g->label() + "] ~ "
           + m.field->label() + "[" + m.h->label() + "]");
  }
  if (!m.verdict.witness || m.verdict.witness->verified_products != kMinimumProducts) {
    o.fail("witness not verified on all basis products");
  }
  std::size_t below = 0, inconclusive = 0;
  for (auto const& p : s.pairs) {
    if (p.size < kMinimumSize) {
      ++below;
      if (p.verdict.verdict == Verdict::inconclusive) {
        ++inconclusive;
      } else if (p.verdict.verdict != Verdict::not_isomorphic) {
        o.fail(p.field->label() + "[" + p.g->label() + "] isomorphic below 625");
      }
    }
  }
  if (inconclusive != 0) {
    o.fail(std::to_string(inconclusive) + " inconclusive below 625");
  }
  if (o.pass) {
    o.detail = "F5[C4] = F5[C2xC2] at 625, " + std::to_string(kMinimumProducts)
               + " products, checksum " + m.verdict.witness->checksum + "; "
               + std::to_string(below) + " smaller pairs separated";
  }
  return o;
}

// 6. Units of order <= 2.
Outcome involutions() {
  Outcome o;
  struct Case {
    char const*   field;
    char const*   group;
    std::uint64_t expected;
  };
  std::string got;
  for (auto const& c : {Case{"F2", "C4xC2", kInvolutionsF2C4xC2},
                        Case{"F2", "C8", kInvolutionsF2C8},
                        Case{"F4", "C4", kInvolutionsF4C4}}) {
    auto const n = count_order_dividing(units(c.field, c.group).spectrum(), 2);
    got += std::string(got.empty() ? "" : ", ") + c.field + "[" + c.group
           + "] " + std::to_string(n);
    if (n != c.expected) {
      o.fail(std::string(c.field) + "[" + c.group + "] has " + std::to_string(n));
    }
  }
  if (o.pass) {
    o.detail = got;
  }
  return o;
}

// 7. The verifier flags exactly the known misprints, each oracle-resolved.
Outcome typo_adjudication(Catalog const& cat) {
  Outcome    o;
  auto const r = verify(cat);
  std::set<std::pair<std::string, std::string>> typos;
  for (auto const& c : r.checks) {
    if (c.status == CheckStatus::typo) {
      typos.emplace(c.subject, c.item);
    }
    if (c.status == CheckStatus::mismatch) {
      o.fail("mismatch " + c.subject + " " + c.item);
    }
  }
  std::set<std::pair<std::string, std::string>> const expected{
      {"F2[C5]", "decomposition"},
      {"F2[C7]", "decomposition"},
      {"F3[C4]", "decomposition_rendered"},
      {"F2[C8]", "structure"},
      {"F2[D6]", "group_presentation"}};
  if (typos != expected) {
    o.fail(std::to_string(typos.size()) + " typos flagged");
  }
  if (r.exit_code() != 0) {
    o.fail("exit code " + std::to_string(r.exit_code()));
  }
  if (o.pass) {
    o.detail = std::to_string(typos.size()) + " typos, "
               + std::to_string(r.count(CheckStatus::match)) + " matches, 0 mismatches";
  }
  return o;
}

std::string run(std::string const& cmd) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) {
    throw std::runtime_error("cannot run " + cmd);
  }
  std::string           out;
  std::array<char, 4096> buf;
  std::size_t            n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) {
    out.append(buf.data(), n);
  }
  return out;
}

// 8. Two consecutive `table --format json` runs are byte-identical.
Outcome determinism() {
  Outcome           o;
  std::string const cmd = std::string("\"") + KGUNITS_CLI + "\" table --format json";
  auto const        a   = run(cmd);
  auto const        b   = run(cmd);
  if (a.empty()) {
    o.fail("no output from " + cmd);
  } else if (a != b) {
    o.fail("outputs differ");
  }
  if (o.pass) {
    o.detail = std::to_string(a.size()) + " bytes, identical";
  }
  return o;
}

}  // namespace

int main() {
  auto const start = std::chrono::steady_clock::now();
  auto const cat   = build_catalog();
  auto const scan  = scan_minimum_counterexample(kCatalogBound);

  std::vector<std::pair<std::string, std::function<Outcome()>>> const criteria{
      {"table reproduction", table_reproduction},
      {"elementary abelian grid", elementary_grid},
      {"presentation certificates", presentations},
      {"decomposition oracle", [&] { return decomposition_oracle(cat); }},
      {"minimum counterexample", [&] { return counterexample(scan); }},
      {"involution counts", involutions},
      {"typo adjudication", [&] { return typo_adjudication(cat); }},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& e) {
      o.fail(std::string("error: ") + e.what());
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " "
              << criteria[i].first << ": " << o.detail << std::endl;
  }
  auto const secs = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  std::cout << (criteria.size() - failures) << "/" << criteria.size()
            << " criteria passed in " << secs << " s" << std::endl;
  return failures == 0 ? 0 : 1;
}
