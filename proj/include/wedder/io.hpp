#pragma once

// JSON, CSV and plain-table renderings of fields, groups, decompositions and
// critical reports. JSON goes through nlohmann::json.

#include <algorithm>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "json.hpp"
#include "wedder/critical.hpp"

namespace wedder {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Fields and groups

inline json field_to_json(const Field& f) {
  return {{"conductor", f.conductor()}, {"fixer", f.fixer().elements}, {"notation", format_field(f)}};
}

inline Field field_from_json(const json& j) {
  const u64 m = j.at("conductor").get<u64>();
  ResidueSubgroup h{m, j.at("fixer").get<std::vector<u64>>()};
  std::vector<i64> gens(h.elements.begin(), h.elements.end());
  const Field f = make_field(m, gens);
  if (f.fixer_in(m).size() != h.size()) throw ParseError("field JSON: fixer is not a subgroup");
  return f;
}

inline json group_to_json(const GroupSpec& g) {
  json j = std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Cyclic>) return {{"family", "cyclic"}, {"m", x.m}};
        else if constexpr (std::is_same_v<T, MetacyclicSplit>) {
          return {{"family", "metacyclic"}, {"m", x.m}, {"n", x.n}, {"k", x.k}, {"r", x.r}};
        } else if constexpr (std::is_same_v<T, QuaternionGen>) return {{"family", "quaternion"}, {"order", 4 * x.k}};
        else if constexpr (std::is_same_v<T, SL23>) return {{"family", "SL(2,3)"}};
        else if constexpr (std::is_same_v<T, SL25>) return {{"family", "SL(2,5)"}};
        else if constexpr (std::is_same_v<T, BinaryOctahedral>) return {{"family", "O*"}};
        else return {{"family", "product"}, {"base", group_to_json(*x.base)}, {"p", x.p}};
      },
      g);
  j["structure"] = format_group(g);
  return j;
}

inline GroupSpec group_from_json(const json& j) {
  const std::string family = j.at("family").get<std::string>();
  if (family == "cyclic") return Cyclic{j.at("m").get<u64>()};
  if (family == "metacyclic") {
    return make_metacyclic(j.at("m").get<u64>(), j.at("n").get<u64>(), j.at("k").get<u64>(), j.at("r").get<i64>());
  }
  if (family == "quaternion") return parse_group("Q" + std::to_string(j.at("order").get<u64>()));
  if (family == "SL(2,3)") return SL23{};
  if (family == "SL(2,5)") return SL25{};
  if (family == "O*") return BinaryOctahedral{};
  if (family == "product") return product_with_cyclic(group_from_json(j.at("base")), j.at("p").get<u64>());
  throw ParseError("group JSON: unknown family '" + family + "'");
}

// ---------------------------------------------------------------------------
// Components

inline std::string quaternion_form_name(QuaternionForm f) {
  switch (f) {
    case QuaternionForm::MinusOneMinusOne: return "(-1,-1)";
    case QuaternionForm::MinusOneMinusThree: return "(-1,-3)";
    case QuaternionForm::MinusTwoMinusFive: return "(-2,-5)";
    case QuaternionForm::ZetaForm: return "zeta";
  }
  return "?";
}

inline json algebra_to_json(const Algebra& a) {
  json params;
  if (const auto* f = std::get_if<FieldAlgebra>(&a)) {
    params = {{"field", format_field(f->field)}};
  } else if (const auto* q = std::get_if<QuaternionSymbol>(&a)) {
    params = {{"base", format_field(q->base)}, {"form", quaternion_form_name(q->form)}};
    if (q->form == QuaternionForm::ZetaForm) params["zeta"] = q->zeta;
  } else {
    const auto& c = std::get<CyclicCyclotomicAlgebra>(a);
    params = {{"center", format_field(c.center)},
              {"top_conductor", c.top_conductor},
              {"sigma", c.sigma_residue},
              {"twist_order", c.twist_order},
              {"twist_exponent", c.twist_exponent}};
  }
  return {{"kind", algebra_kind(a)}, {"parameters", params}, {"notation", format_algebra(a)}};
}

inline json component_to_json(const SimpleComponent& c) {
  return {{"size", c.matrix_size},
          {"center", format_field(center_of(c))},
          {"algebra", algebra_to_json(c.algebra)},
          {"multiplicity", c.multiplicity}};
}

inline json profile_to_json(const LocalIndexProfile& p) {
  json out = json::array();
  for (const auto& [place, idx] : p.entries) {
    out.push_back({{"place", place == kInfinitePrime ? json("infinity") : json(place)}, {"index", idx}});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tables

/// Fixed-column text table; cells are left aligned and separated by two spaces.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  bool empty() const { return rows_.empty(); }

  std::string render() const {
    std::vector<std::size_t> w(header_.size(), 0);
    auto widen = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    };
    widen(header_);
    for (const auto& r : rows_) widen(r);
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& r) {
      std::string s;
      for (std::size_t i = 0; i < r.size(); ++i) {
        s += r[i];
        if (i + 1 < r.size()) s += std::string(w[i] - r[i].size() + 2, ' ');
      }
      os << s << '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
    return os.str();
  }

  std::string csv() const {
    std::ostringstream os;
    auto cell = [](const std::string& c) {
      if (c.find_first_of(",\"") == std::string::npos) return c;
      std::string q = "\"";
      for (char ch : c) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      return q + "\"";
    };
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << cell(r[i]);
      os << '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
    return os.str();
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// One line of the critical-group table.
struct CriticalRow {
  std::string id;
  std::string structure;
  std::string center;
  u64 schur_index = 1;
  std::string local_indices;

  friend bool operator==(const CriticalRow&, const CriticalRow&) = default;
};

/// Rows of a positive report; the witness is repeated once per copy.
inline std::vector<CriticalRow> critical_rows(const CriticalReport& r) {
  if (!r.verdict || !r.witness) return {};
  const LocalIndexProfile prof = local_profile(r.witness->algebra);
  CriticalRow row{known_smallgroup_id(r.group).value_or("-"), format_group(r.group), format_field(center_of(*r.witness)),
                  schur_index(prof), format_local_indices(prof)};
  return std::vector<CriticalRow>(r.witness->multiplicity, row);
}

inline std::vector<CriticalRow> critical_rows(const std::vector<CriticalReport>& reports) {
  std::vector<CriticalRow> out;
  for (const auto& r : reports) {
    auto rows = critical_rows(r);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

inline json row_to_json(const CriticalRow& r) {
  return {{"id", r.id}, {"structure", r.structure}, {"center", r.center}, {"schur_index", r.schur_index},
          {"local_indices", r.local_indices}};
}

inline CriticalRow row_from_json(const json& j) {
  return {j.at("id").get<std::string>(), j.at("structure").get<std::string>(), j.at("center").get<std::string>(),
          j.at("schur_index").get<u64>(), j.at("local_indices").get<std::string>()};
}

inline TextTable critical_table(const std::vector<CriticalRow>& rows) {
  TextTable t({"ID", "Structure", "Center", "Schur index", "Local index"});
  for (const auto& r : rows) t.add({r.id, r.structure, r.center, std::to_string(r.schur_index), r.local_indices});
  return t;
}

inline json report_to_json(const CriticalReport& r) {
  json j = {{"group", group_to_json(r.group)}, {"field", field_to_json(r.field)}, {"verdict", r.verdict}};
  if (r.witness) j["witness"] = component_to_json(*r.witness);
  if (r.failed_condition) j["failed_condition"] = *r.failed_condition;
  j["diagnostics"] = r.diagnostics;
  json rows = json::array();
  for (const auto& row : critical_rows(r)) rows.push_back(row_to_json(row));
  j["rows"] = rows;
  return j;
}

}  // namespace wedder
