// wedder: Wedderburn components, Schur indices and F-critical groups from the command line.
//
//   wedder field <notation> [primes...]
//   wedder decompose <group> <field>
//   wedder indices <group> <field>
//   wedder critical <group> <field>
//   wedder enumerate <field> <max-order>
//   wedder table q200
//
// Exit codes: 0 ok, 2 parse error, 3 domain error, 4 unsupported, 1 anything else.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wedder/wedder.hpp"

namespace {

using namespace wedder;

enum class Format { Table, Json, Csv };

struct Options {
  bool json = false;
  bool csv = false;
  Format format() const { return json ? Format::Json : csv ? Format::Csv : Format::Table; }
};

void emit(const TextTable& t, Format fmt) { std::cout << (fmt == Format::Csv ? t.csv() : t.render()); }

std::string place_name(u64 place) { return place == kInfinitePrime ? "infinity" : std::to_string(place); }

void run_field(const std::string& notation, const std::vector<u64>& primes, Format fmt) {
  const Field f = parse_field(notation);
  std::vector<u64> places{kInfinitePrime};
  if (primes.empty()) {
    for (u64 p : prime_divisors(f.conductor())) places.push_back(p);
  } else {
    for (u64 p : primes) {
      if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
      places.push_back(p);
    }
  }
  if (fmt == Format::Json) {
    json j = field_to_json(f);
    j["degree"] = f.degree();
    j["totally_real"] = is_totally_real(f);
    json sp = json::array();
    for (u64 pl : places) {
      const auto s = splitting_at(f, pl);
      sp.push_back({{"place", place_name(pl)}, {"e", s.e}, {"f", s.f}, {"g", s.g}});
    }
    j["splitting"] = sp;
    std::cout << j.dump(2) << '\n';
    return;
  }
  if (fmt == Format::Table) {
    std::cout << "field:     " << format_field(f) << '\n'
              << "conductor: " << f.conductor() << '\n'
              << "degree:    " << f.degree() << '\n'
              << "signature: " << (is_totally_real(f) ? "totally real" : "totally imaginary") << "\n\n";
  }
  TextTable t({"Place", "e", "f", "g"});
  for (u64 pl : places) {
    const auto s = splitting_at(f, pl);
    t.add({place_name(pl), std::to_string(s.e), std::to_string(s.f), std::to_string(s.g)});
  }
  emit(t, fmt);
}

void run_decompose(const std::string& group, const std::string& field, Format fmt) {
  const GroupSpec g = parse_group(group);
  const Field f = parse_field(field);
  const Decomposition d = decompose(g, f);
  if (fmt == Format::Json) {
    json comps = json::array();
    for (const auto& c : d) comps.push_back(component_to_json(c));
    std::cout << json{{"group", group_to_json(g)}, {"field", field_to_json(f)}, {"components", comps},
                      {"total_dimension", total_dimension(d, f)}}
                     .dump(2)
              << '\n';
    return;
  }
  TextTable t({"Component", "Center", "Multiplicity", "Dimension"});
  for (const auto& c : d) {
    t.add({format_component(c), format_field(center_of(c)), std::to_string(c.multiplicity),
           std::to_string(dimension_over(c, f))});
  }
  emit(t, fmt);
  if (fmt == Format::Table) std::cout << "total dimension over " << format_field(f) << ": " << total_dimension(d, f) << '\n';
}

void run_indices(const std::string& group, const std::string& field, Format fmt) {
  const GroupSpec g = parse_group(group);
  const Field f = parse_field(field);
  const Decomposition d = decompose(g, f);
  TextTable t({"Component", "Schur index", "Local index", "Infinity", "Exceptional"});
  json rows = json::array();
  for (const auto& c : d) {
    try {
      const LocalIndexProfile prof = local_profile(c.algebra);
      const auto verdict = classify_exceptional(c);
      t.add({format_component(c), std::to_string(schur_index(prof)), format_local_indices(prof),
             std::to_string(prof.at(kInfinitePrime)), to_string(verdict.kind)});
      rows.push_back({{"component", component_to_json(c)}, {"schur_index", schur_index(prof)},
                      {"local_indices", profile_to_json(prof)}, {"exceptional", to_string(verdict.kind)},
                      {"reason", to_string(verdict.reason)}});
    } catch (const UnsupportedError& e) {
      t.add({format_component(c), "unsupported", "unsupported", "-", "unsupported"});
      rows.push_back({{"component", component_to_json(c)}, {"unsupported", e.what()}});
    }
  }
  if (fmt == Format::Json) {
    std::cout << json{{"group", group_to_json(g)}, {"field", field_to_json(f)}, {"components", rows}}.dump(2) << '\n';
  } else {
    emit(t, fmt);
  }
}

void run_critical(const std::string& group, const std::string& field, Format fmt) {
  const CriticalReport r = is_critical(parse_group(group), parse_field(field));
  if (fmt == Format::Json) {
    std::cout << report_to_json(r).dump(2) << '\n';
    return;
  }
  if (fmt == Format::Csv) {
    emit(critical_table(critical_rows(r)), fmt);
    return;
  }
  std::cout << "group:   " << format_group(r.group) << '\n'
            << "field:   " << format_field(r.field) << '\n'
            << "verdict: " << (r.verdict ? "true" : "false") << '\n';
  if (r.witness) {
    const LocalIndexProfile prof = local_profile(r.witness->algebra);
    std::cout << "witness: " << format_component(*r.witness) << '\n'
              << "copies:  " << r.witness->multiplicity << '\n'
              << "center:  " << format_field(center_of(*r.witness)) << '\n'
              << "index:   " << schur_index(prof) << '\n'
              << "local:   " << format_local_indices(prof) << '\n';
  }
  if (r.failed_condition) std::cout << "failed:  " << *r.failed_condition << '\n';
  for (const auto& d : r.diagnostics) std::cout << "note:    " << d << '\n';
}

void emit_rows(const std::vector<CriticalRow>& rows, Format fmt) {
  if (fmt == Format::Json) {
    json out = json::array();
    for (const auto& r : rows) out.push_back(row_to_json(r));
    std::cout << out.dump(2) << '\n';
    return;
  }
  emit(critical_table(rows), fmt);
}

void run_enumerate(const std::string& field, u64 max_order, Format fmt) {
  emit_rows(critical_rows(enumerate_critical(parse_field(field), max_order)), fmt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wedderburn decompositions, Schur indices and F-critical groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "JSON output");
  app.add_flag("--csv", opt.csv, "CSV output");
  std::string field_flag;
  std::optional<u64> max_order_flag;
  app.add_option("--field", field_flag, "Field notation (Q, CF(m), NF(m,[...]))");
  app.add_option("--max-order", max_order_flag, "Largest group order for enumerate");

  std::string notation;
  std::vector<u64> primes;
  auto* field_cmd = app.add_subcommand("field", "Describe an abelian number field");
  field_cmd->add_option("notation", notation, "Field notation");
  field_cmd->add_option("primes", primes, "Primes whose splitting to show");

  std::string group;
  std::string field_arg;
  auto* decompose_cmd = app.add_subcommand("decompose", "Wedderburn decomposition of FG");
  auto* indices_cmd = app.add_subcommand("indices", "Local and global Schur indices per component");
  auto* critical_cmd = app.add_subcommand("critical", "Decide whether G is F-critical");
  for (auto* cmd : {decompose_cmd, indices_cmd, critical_cmd}) {
    cmd->add_option("group", group, "Group, e.g. \"C5:C8(k=4)\", SL(2,3), \"C7 x Q8\"")->required();
    cmd->add_option("field", field_arg, "Field notation");
  }

  u64 max_order = 0;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "F-critical groups up to an order");
  enumerate_cmd->add_option("field", field_arg, "Field notation");
  enumerate_cmd->add_option("max-order", max_order, "Largest group order");

  std::string table_name;
  auto* table_cmd = app.add_subcommand("table", "Reproduce a stored table");
  table_cmd->add_option("name", table_name, "Table name (q200)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  auto pick_field = [&](const std::string& positional) {
    if (!positional.empty()) return positional;
    if (!field_flag.empty()) return field_flag;
    throw ParseError("a field is required (positional or --field)");
  };

  const Format fmt = opt.format();
  try {
    if (*field_cmd) {
      run_field(pick_field(notation), primes, fmt);
    } else if (*decompose_cmd) {
      run_decompose(group, pick_field(field_arg), fmt);
    } else if (*indices_cmd) {
      run_indices(group, pick_field(field_arg), fmt);
    } else if (*critical_cmd) {
      run_critical(group, pick_field(field_arg), fmt);
    } else if (*enumerate_cmd) {
      u64 n = max_order;
      if (n == 0 && max_order_flag) n = *max_order_flag;
      if (n == 0) throw ParseError("a positive max order is required (positional or --max-order)");
      run_enumerate(pick_field(field_arg), n, fmt);
    } else if (*table_cmd) {
      if (table_name != "q200") throw ParseError("unknown table '" + table_name + "' (available: q200)");
      emit_rows(critical_rows(enumerate_critical(rationals(), 200)), fmt);
    }
  } catch (const ParseError& e) {
    const std::string what = e.what();
    if (what.find("unknown group family") != std::string::npos) {
      std::cerr << "unsupported group: " << what << '\n';
    } else {
      std::cerr << "parse error: " << what << '\n';
    }
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 3;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
