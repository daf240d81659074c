#include "pizza/tables.hpp"

#include <json.hpp>

#include "pizza/error.hpp"

namespace pizza {

const std::vector<GoldenEntry>& golden_entries() {
  static const std::vector<GoldenEntry> entries{
      // A_2: leading, then second coefficient
      {"A:2", 3, Rational(1, 2), false, false},
      {"A:2", 5, Rational(3, 32), true, false},
      // A_3
      {"A:3", 6, Rational(-1, 6), false, false},
      {"A:3", 8, Rational(-1, 10), true, false},
      // A_6: -(3*7*11*13)/2^8, then (3^2*5^2*7*11*13)/2^13
      {"A:6", 21, Rational(-3003, 256), false, false},
      {"A:6", 23, Rational(225225, 8192), true, false},
      // A_7: (3*11*13*17*19)/2^8, then (7*11*13*17*19)/2^7
      {"A:7", 28, Rational(138567, 256), false, false},
      {"A:7", 30, Rational(323323, 128), true, false},
      // D_3
      {"D:3", 6, Rational(-1, 6), false, false},
      {"D:3", 8, Rational(-1, 10), true, false},
      // D_5: -(11*13)/(2^3*5), then -(11*13)/(2^2*3)
      {"D:5", 20, Rational(-143, 40), false, false},
      {"D:5", 22, Rational(-143, 12), true, false},
      // D_7: -(11*13*17*19*23*29*31)/(2^4*3*7), then -(5*11*17*19*23*29*31)/2^4
      {"D:7", 42, Rational(-955049953, 336), false, true},
      {"D:7", 44, Rational(-367326905, 16), true, true},
  };
  return entries;
}

Poly golden_poly(const GoldenEntry& entry) {
  const ArrangementSpec spec = ArrangementSpec::parse(entry.spec);
  const auto arity = static_cast<std::size_t>(spec.ambient_dim);
  if (entry.times_p2) return power_sum_p2(arity).scaled(entry.coeff);
  return Poly::constant(arity, entry.coeff);
}

bool matches_golden(const GoldenEntry& entry, const Poly& quotient) {
  const ArrangementSpec spec = ArrangementSpec::parse(entry.spec);
  const Poly expected = golden_poly(entry);
  if (quotient.arity() != expected.arity()) return false;
  if (spec.family == Family::A) return reduce_mod_relation(quotient, spec) == reduce_mod_relation(expected, spec);
  return quotient == expected;
}

TableScope parse_table_scope(std::string_view name) {
  if (name == "A") return TableScope::A;
  if (name == "D") return TableScope::D;
  if (name == "all") return TableScope::all;
  throw Error("unknown table '" + std::string(name) + "' (A, D, all)");
}

std::vector<TableRow> compute_tables(TableScope scope, bool extended, const ExpansionOptions& opts) {
  std::vector<TableRow> rows;
  for (const GoldenEntry& g : golden_entries()) {
    if (g.extended && !extended) continue;
    const ArrangementSpec spec = ArrangementSpec::parse(g.spec);
    if (scope == TableScope::A && spec.family != Family::A) continue;
    if (scope == TableScope::D && spec.family != Family::D) continue;
    TableRow row{g, quotient(spec, g.degree, opts), false};
    row.match = matches_golden(g, row.quotient);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_tables(const std::vector<TableRow>& rows, Format format) {
  auto expected_text = [](const GoldenEntry& g) { return g.coeff.to_string() + (g.times_p2 ? "*p2" : ""); };
  bool all = true;
  for (const TableRow& r : rows) all = all && r.match;
  if (format == Format::json) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["rows"] = nlohmann::ordered_json::array();
    for (const TableRow& r : rows) {
      const ArrangementSpec spec = ArrangementSpec::parse(r.golden.spec);
      j["rows"].push_back({{"spec", r.golden.spec},
                           {"degree", r.golden.degree},
                           {"computed", describe_quotient(r.quotient, spec)},
                           {"expected", expected_text(r.golden)},
                           {"match", r.match}});
    }
    j["all_match"] = all;
    return j.dump(2) + "\n";
  }
  if (format == Format::csv) {
    std::string out = "spec,degree,computed,expected,match\n";
    for (const TableRow& r : rows)
      out += r.golden.spec + "," + std::to_string(r.golden.degree) + "," +
             describe_quotient(r.quotient, ArrangementSpec::parse(r.golden.spec)) + "," + expected_text(r.golden) +
             "," + (r.match ? "true" : "false") + "\n";
    return out;
  }
  std::vector<std::vector<std::string>> cells{{"type", "n", "k", "|Phi+|", "d", "Z_d/J", "expected", "status"}};
  for (const TableRow& r : rows) {
    const ArrangementSpec spec = ArrangementSpec::parse(r.golden.spec);
    cells.push_back({r.golden.spec, std::to_string(spec.dimension()), std::to_string(spec.two_structure_rank()),
                     std::to_string(spec.positive_root_count), std::to_string(r.golden.degree),
                     describe_quotient(r.quotient, spec), expected_text(r.golden), r.match ? "ok" : "MISMATCH"});
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace pizza
