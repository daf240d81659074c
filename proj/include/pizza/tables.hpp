#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pizza/report.hpp"

namespace pizza {

/// Reference value of one quotient: coeff, or coeff * p2 when times_p2.
struct GoldenEntry {
  std::string spec;
  int degree = 0;
  Rational coeff;
  bool times_p2 = false;
  bool extended = false;  // only computed on request
};

const std::vector<GoldenEntry>& golden_entries();

/// The golden value as a polynomial in the arrangement's ambient variables.
Poly golden_poly(const GoldenEntry& entry);

/// Exact comparison, modulo the sum-zero relation for type A.
bool matches_golden(const GoldenEntry& entry, const Poly& quotient);

enum class TableScope { A, D, all };
TableScope parse_table_scope(std::string_view name);

struct TableRow {
  GoldenEntry golden;
  Poly quotient{1};
  bool match = false;
};

std::vector<TableRow> compute_tables(TableScope scope, bool extended, const ExpansionOptions& opts = {});

std::string render_tables(const std::vector<TableRow>& rows, Format format);

}  // namespace pizza
