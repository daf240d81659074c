#include "pizza/report.hpp"

#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "pizza/error.hpp"

namespace pizza {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

Json terms_json(const Poly& p) {
  Json out = Json::array();
  for (const Term& t : p.terms()) {
    std::vector<int> exps;
    for (std::size_t i = 0; i < p.arity(); ++i) exps.push_back(t.monomial[i]);
    out.push_back({{"exponents", exps}, {"num", t.coeff.numerator().get_str()}, {"den", t.coeff.denominator().get_str()}});
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string exps_string(const Monomial& m, std::size_t arity) {
  std::string s;
  for (std::size_t i = 0; i < arity; ++i) s += (i ? " " : "") + std::to_string(m[i]);
  return s;
}

// Left-aligned columns separated by two spaces.
std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string center_string(const std::vector<double>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + fmt(c[i]);
  return s;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw Error("unknown format '" + std::string(name) + "' (text, json, csv)");
}

std::optional<Rational> p2_multiple(const Poly& p, const ArrangementSpec& spec) {
  const std::size_t arity = p.arity();
  Poly target = power_sum_p2(arity);
  Poly value = p;
  if (spec.family == Family::A) {
    target = reduce_mod_relation(target, spec);
    value = reduce_mod_relation(value, spec);
  }
  if (value.is_zero()) return Rational(0);
  const Monomial a1sq = Monomial::variable(0, 2);
  const Rational c = value.coefficient(a1sq) / target.coefficient(a1sq);
  if (c.is_zero() || value != target.scaled(c)) return std::nullopt;
  return c;
}

std::string describe_quotient(const Poly& quotient, const ArrangementSpec& spec) {
  if (quotient.is_constant()) return quotient.is_zero() ? "0" : quotient.terms().front().coeff.to_string();
  if (auto c = p2_multiple(quotient, spec)) return c->to_string() + "*p2";
  return spec.family == Family::A ? reduce_mod_relation(quotient, spec).to_string() : quotient.to_string();
}

std::string render_expansion(const ExpansionReport& report, Format format) {
  const ArrangementSpec& spec = report.spec;
  if (format == Format::json) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["family"] = std::string(family_name(spec.family));
    j["rank"] = spec.rank;
    j["k"] = report.k;
    j["phi_plus"] = report.phi_plus_count;
    j["entries"] = Json::array();
    for (const ExpansionEntry& e : report.entries) {
      Json entry;
      entry["degree"] = e.degree;
      entry["quotient"] = e.quotient.to_string();
      entry["quotient_terms"] = terms_json(e.quotient);
      if (e.reduced_quotient) entry["reduced_quotient_terms"] = terms_json(*e.reduced_quotient);
      j["entries"].push_back(std::move(entry));
    }
    return j.dump(2) + "\n";
  }
  if (format == Format::csv) {
    std::string out = "spec,degree,kind,exponents,num,den\n";
    auto rows = [&](int d, const char* kind, const Poly& p) {
      for (const Term& t : p.terms())
        out += spec.to_string() + "," + std::to_string(d) + "," + kind + "," + exps_string(t.monomial, p.arity()) +
               "," + t.coeff.numerator().get_str() + "," + t.coeff.denominator().get_str() + "\n";
    };
    for (const ExpansionEntry& e : report.entries) {
      rows(e.degree, "quotient", e.quotient);
      if (e.reduced_quotient) rows(e.degree, "reduced", *e.reduced_quotient);
    }
    return out;
  }
  std::vector<std::vector<std::string>> rows{{"type", "n", "k", "|Phi+|", "d", "Z_d/J"}};
  for (const ExpansionEntry& e : report.entries)
    rows.push_back({spec.to_string(), std::to_string(spec.dimension()), std::to_string(report.k),
                    std::to_string(report.phi_plus_count), std::to_string(e.degree),
                    describe_quotient(e.quotient, spec)});
  return aligned(rows);
}

std::string render_conjecture(const ConjectureReport& report, Format format, bool with_runtime) {
  if (format == Format::json) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["conjecture_id"] = report.conjecture_id;
    Json params = Json::object();
    for (const auto& [k, v] : report.params) params[k] = v;
    j["params"] = params;
    j["verdict"] = verdict_name(report.verdict);
    j["witnesses"] = Json::array();
    for (const Witness& w : report.witnesses)
      j["witnesses"].push_back({{"where", w.where}, {"value", w.value}, {"note", w.note}});
    j["notes"] = report.notes;
    if (with_runtime) j["runtime_ms"] = report.runtime_ms;
    return j.dump(2) + "\n";
  }
  if (format == Format::csv) {
    std::string out = "conjecture_id,verdict,where,value,note\n";
    for (const Witness& w : report.witnesses)
      out += report.conjecture_id + "," + verdict_name(report.verdict) + "," + csv_field(w.where) + "," +
             csv_field(w.value) + "," + csv_field(w.note) + "\n";
    if (report.witnesses.empty()) out += report.conjecture_id + "," + verdict_name(report.verdict) + ",,,\n";
    return out;
  }
  std::string out = report.conjecture_id + ": " + verdict_name(report.verdict) + "\n";
  for (const auto& [k, v] : report.params) out += "  " + k + " = " + v + "\n";
  for (const Witness& w : report.witnesses) out += "  witness " + w.where + " -> " + w.value + " (" + w.note + ")\n";
  for (const std::string& n : report.notes) out += "  note: " + n + "\n";
  if (with_runtime) out += "  runtime_ms = " + fmt(report.runtime_ms) + "\n";
  return out;
}

std::string render_mc(const ArrangementSpec& spec, const BallSpec& ball, const McEstimate& est, Format format) {
  if (format == Format::json) {
    Json j{{"schema_version", kSchemaVersion}, {"spec", spec.to_string()}, {"method", "mc"},
           {"center", ball.center},          {"radius", ball.radius},       {"value", est.value},
           {"std_error", est.std_error},     {"samples", est.samples},      {"seed", est.seed}};
    return j.dump(2) + "\n";
  }
  if (format == Format::csv)
    return "spec,method,center,radius,value,std_error,samples,seed\n" + spec.to_string() + ",mc," +
           csv_field(center_string(ball.center)) + "," + fmt(ball.radius) + "," + fmt(est.value) + "," +
           fmt(est.std_error) + "," + std::to_string(est.samples) + "," + std::to_string(est.seed) + "\n";
  return spec.to_string() + " mc: " + fmt(est.value) + " +- " + fmt(est.std_error) + " (" +
         std::to_string(est.samples) + " samples, seed " + std::to_string(est.seed) + ")\n";
}

std::string render_quadrature(const ArrangementSpec& spec, const BallSpec& ball, double value, Format format) {
  if (format == Format::json) {
    Json j{{"schema_version", kSchemaVersion}, {"spec", spec.to_string()},     {"method", "quadrature"},
           {"center", ball.center},          {"radius", ball.radius},         {"value", value},
           {"error_target", kQuadratureTarget}};
    return j.dump(2) + "\n";
  }
  if (format == Format::csv)
    return "spec,method,center,radius,value,error_target\n" + spec.to_string() + ",quadrature," +
           csv_field(center_string(ball.center)) + "," + fmt(ball.radius) + "," + fmt(value) + "," +
           fmt(kQuadratureTarget) + "\n";
  return spec.to_string() + " quadrature: " + fmt(value) + " (error estimates <= " + fmt(kQuadratureTarget) + ")\n";
}

std::string render_series(const ArrangementSpec& spec, const BallSpec& ball, const std::string& method,
                          const SeriesValue& value, Format format) {
  if (format == Format::json) {
    Json j{{"schema_version", kSchemaVersion}, {"spec", spec.to_string()},   {"method", method},
           {"center", ball.center},          {"radius", ball.radius},       {"value", value.value},
           {"tail_bound", value.tail_bound}, {"degree_cap", value.degree_cap}};
    return j.dump(2) + "\n";
  }
  if (format == Format::csv)
    return "spec,method,center,radius,value,tail_bound,degree_cap\n" + spec.to_string() + "," + method + "," +
           csv_field(center_string(ball.center)) + "," + fmt(ball.radius) + "," + fmt(value.value) + "," +
           fmt(value.tail_bound) + "," + std::to_string(value.degree_cap) + "\n";
  return spec.to_string() + " " + method + ": " + fmt(value.value) + " (tail <= " + fmt(value.tail_bound) +
         ", degree cap " + std::to_string(value.degree_cap) + ")\n";
}

}  // namespace pizza
