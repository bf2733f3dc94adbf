// kgunits: unit groups of small group algebras from the command line.
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "kgunits/kgunits.hpp"

namespace {

using namespace kgunits;

struct Options {
  std::string   format = "text";
  std::uint64_t bound  = kCatalogBound;
  unsigned      jobs   = std::max(1u, std::thread::hardware_concurrency());
};

Field parse_field(std::string const& label) {
  if (label.size() < 2 || label[0] != 'F') {
    throw std::invalid_argument("unknown field label '" + label
                                + "' (expected F2, F4, F3, F9, ...)");
  }
  std::size_t   used = 0;
  unsigned long q    = 0;
  try {
    q = std::stoul(label.substr(1), &used);
  } catch (std::exception const&) {
    used = 0;
  }
  if (used + 1 != label.size()) {
    throw std::invalid_argument("unknown field label '" + label + "'");
  }
  return make_field_of_order(static_cast<unsigned>(q));
}

GroupPtr parse_group(std::string const& label) {
  return group_by_label(label);
}

void check_bound(Field const& f, GroupPtr const& g, std::uint64_t bound) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < g->order() && size < bound; ++i) {
    size *= f->order();
  }
  if (size >= bound) {
    throw std::invalid_argument("|" + f->label() + "[" + g->label()
                                + "]| is not below the bound "
                                + std::to_string(bound));
  }
}

void emit(Options const& o, Json const& j, std::string const& text) {
  if (o.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int cmd_table(Options const& o) {
  auto const cat = build_catalog(o.bound, o.jobs);
  emit(o, to_json(cat), render_text(cat));
  return cat.consistent() ? 0 : 2;
}

int cmd_verify(Options const& o) {
  auto const cat    = build_catalog(o.bound, o.jobs);
  auto const report = verify(cat);
  emit(o, to_json(report), render_text(report));
  return report.exit_code();
}

int cmd_scan(Options const& o) {
  auto const s = scan_minimum_counterexample(o.bound, o.jobs);
  emit(o, to_json(s), render_text(s));
  return s.minimality_verified() ? 0 : 1;
}

int cmd_unit_group(Options const& o, std::string const& fl,
                   std::string const& gl) {
  auto const f = parse_field(fl);
  auto const g = parse_group(gl);
  check_bound(f, g, o.bound);
  auto const row = detail::build_row(f, g);
  auto const a   = Algebra::make(f, g);
  UnitGroup const u(a);
  Json j = to_json(row);
  j.erase("paper_row");
  j["spectrum"] = Json::object();
  for (auto const& [ord, n] : u.spectrum()) {
    j["spectrum"][std::to_string(ord)] = n;
  }
  std::string text = row.subject() + "\n";
  text += "size        " + std::to_string(row.size) + "\n";
  text += "units       " + std::to_string(row.unit_count) + "\n";
  text += "structure   " + row.structure + "\n";
  text += "exponent    " + std::to_string(row.exponent) + "\n";
  text += "spectrum    " + spectrum_to_string(u.spectrum()) + "\n";
  text += "method      " + row.method + "\n";
  for (auto const& p : row.presentations) {
    text += "presentation " + p.key + ": "
            + (p.certified ? std::string("certified") : to_string(p.failed_step))
            + "\n";
  }
  emit(o, j, text);
  return row.inconsistencies.empty() ? 0 : 2;
}

int cmd_decompose(Options const& o, std::string const& fl,
                  std::string const& gl) {
  auto const f = parse_field(fl);
  auto const g = parse_group(gl);
  check_bound(f, g, o.bound);
  auto const a    = Algebra::make(f, g);
  auto const cert = certify_decomposition(a);
  Json       j;
  j["algebra"]       = a->label();
  j["decomposition"] = cert.summands.to_string();
  j["semisimple"]    = is_semisimple(*a);
  j["idempotents"]   = Json::array();
  std::string text   = cert.summands.to_string() + "\n";
  for (auto const& e : cert.idempotents) {
    j["idempotents"].push_back(e.to_string());
    text += "  idempotent " + e.to_string() + "\n";
  }
  emit(o, j, text);
  return 0;
}

int cmd_coset_count(Options const& o, std::string const& text) {
  auto const p = parse_presentation(text);
  auto const r = coset_enumeration_detailed(p);
  Json       j;
  j["presentation"]   = p.to_string();
  j["order"]          = r.order;
  j["cosets_defined"] = r.cosets_defined;
  emit(o, j, std::to_string(r.order) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unit groups of group algebras KG with |KG| < 1024"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--bound", o.bound, "Exclusive bound on |KG|")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 20))
      ->capture_default_str();
  app.add_option("--jobs", o.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);

  std::string field, group, presentation;
  auto* table  = app.add_subcommand("table", "Full catalog of unit groups");
  auto* verify = app.add_subcommand(
      "verify", "Compare the catalog with the published values");
  auto* scan = app.add_subcommand(
      "scan-iso", "Smallest isomorphic KG, KH with G, H not isomorphic");
  auto* unit = app.add_subcommand("unit-group", "Unit group of one algebra");
  unit->add_option("field", field)->required();
  unit->add_option("group", group)->required();
  auto* dec = app.add_subcommand("decompose", "Decompose one algebra");
  dec->add_option("field", field)->required();
  dec->add_option("group", group)->required();
  auto* coset = app.add_subcommand("coset-count",
                                   "Order of a finitely presented group");
  coset->add_option("presentation", presentation)->required();
  for (auto* sub : {table, verify, scan, unit, dec, coset}) {
    sub->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);
  try {
    if (*table) {
      return cmd_table(o);
    }
    if (*verify) {
      return cmd_verify(o);
    }
    if (*scan) {
      return cmd_scan(o);
    }
    if (*unit) {
      return cmd_unit_group(o, field, group);
    }
    if (*dec) {
      return cmd_decompose(o, field, group);
    }
    return cmd_coset_count(o, presentation);
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
