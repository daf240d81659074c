#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "pizza/conjectures.hpp"
#include "pizza/oracle.hpp"
#include "pizza/taylor.hpp"

namespace pizza {

enum class Format { text, json, csv };
/// "text", "json" or "csv"; throws Error otherwise.
Format parse_format(std::string_view name);

inline constexpr int kSchemaVersion = 1;

/// Multiple c with p == c * p2, comparing modulo the sum-zero relation for
/// type A; nullopt when p is not such a multiple.
std::optional<Rational> p2_multiple(const Poly& p, const ArrangementSpec& spec);

/// Short display of a quotient: "c" for constants, "c*p2" for multiples of
/// p2, the full (reduced, for type A) polynomial otherwise.
std::string describe_quotient(const Poly& quotient, const ArrangementSpec& spec);

std::string render_expansion(const ExpansionReport& report, Format format);
std::string render_conjecture(const ConjectureReport& report, Format format, bool with_runtime = true);
std::string render_mc(const ArrangementSpec& spec, const BallSpec& ball, const McEstimate& est, Format format);
std::string render_quadrature(const ArrangementSpec& spec, const BallSpec& ball, double value, Format format);
std::string render_series(const ArrangementSpec& spec, const BallSpec& ball, const std::string& method,
                          const SeriesValue& value, Format format);

}  // namespace pizza
