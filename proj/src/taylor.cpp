#include "pizza/taylor.hpp"

#include <functional>
#include <map>
#include <numeric>

#include "pizza/error.hpp"

namespace pizza {

Rational c_coefficient(int n, int k, int m) {
  if (m < 0) throw Error("c_coefficient: m must be non-negative");
  const Rational alpha(n - k, 2);
  Rational c(1);
  for (int i = 0; i < m; ++i) c *= (alpha - Rational(i)) / Rational(i + 1);
  return m % 2 == 0 ? c : -c;
}

namespace {

void for_each_composition(int total, int parts, std::vector<int>& current,
                          const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(current.size()) == parts - 1) {
    current.push_back(total);
    visit(current);
    current.pop_back();
    return;
  }
  for (int r = total; r >= 0; --r) {
    current.push_back(r);
    for_each_composition(total - r, parts, current, visit);
    current.pop_back();
  }
}

Rational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

std::vector<std::size_t> all_vars(int arity) {
  std::vector<std::size_t> v(static_cast<std::size_t>(arity));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TPoly t_poly(int n, int k, int d) {
  if (k < 1 || n < k) throw Error("t_poly requires n >= k >= 1");
  if (d < 0) throw Error("t_poly requires d >= 0");
  TPoly t{n, k, d, Poly(static_cast<std::size_t>(k))};
  if (d < k || (d - k) % 2 != 0) return t;
  if (d > kMaxDegree) throw ResourceLimit("t_poly: degree exceeds cap");
  const int m = (d - k) / 2;
  const Rational lead = c_coefficient(n, k, m) * factorial(m);
  std::vector<Term> terms;
  std::vector<int> current;
  for_each_composition(m, k, current, [&](const std::vector<int>& r) {
    Rational c = lead;
    Monomial mono;
    for (std::size_t i = 0; i < r.size(); ++i) {
      c /= factorial(r[i]) * Rational(2 * r[i] + 1);
      mono.set(i, 2 * r[i] + 1);
    }
    terms.push_back({mono, c});
  });
  t.body = Poly::from_terms(static_cast<std::size_t>(k), std::move(terms));
  return t;
}

Poly t_eval_on_structure(const TPoly& t, const TwoStructure& phi, int ambient) {
  if (static_cast<int>(phi.positive_roots.size()) != t.k)
    throw ArityMismatch("t_eval_on_structure: T has " + std::to_string(t.k) + " variables, structure has " +
                        std::to_string(phi.positive_roots.size()) + " roots");
  const auto arity = static_cast<std::size_t>(ambient);
  std::vector<Poly> forms;
  for (const Root& r : phi.positive_roots) {
    if (r.coords.size() != arity) throw ArityMismatch("t_eval_on_structure: root dimension differs from ambient");
    forms.push_back(r.linear_form());
  }
  std::map<std::pair<std::size_t, int>, Poly> powers;
  auto power = [&](std::size_t i, int e) -> const Poly& {
    auto key = std::make_pair(i, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, forms[i].pow(static_cast<unsigned>(e))).first;
    return it->second;
  };
  Poly out(arity);
  for (const Term& term : t.body.terms()) {
    Poly product = Poly::constant(arity, term.coeff);
    for (std::size_t i = 0; i < forms.size(); ++i)
      if (term.monomial[i] > 0) product = product * power(i, term.monomial[i]);
    out += product;
  }
  return out;
}

void require_expansion_regime(const ArrangementSpec& spec, int d) {
  if (d < 0) throw Error("degree must be non-negative");
  if (d > kMaxDegree)
    throw ResourceLimit("degree " + std::to_string(d) + " exceeds the cap of " + std::to_string(kMaxDegree));
  switch (spec.family) {
    case Family::A:
      if (spec.rank % 4 != 2 && spec.rank % 4 != 3)
        throw ParityViolation(spec.to_string() +
                              " has same parity; its pizza quantity vanishes (use the numeric oracle)");
      return;
    case Family::D:
      if (spec.rank % 2 != 1)
        throw ParityViolation(spec.to_string() +
                              " has same parity; its pizza quantity vanishes (use the numeric oracle)");
      return;
    default:
      throw UnsupportedFamily("Taylor expansion is implemented for types A and D only");
  }
}

std::uint64_t structure_term_estimate(const ArrangementSpec& spec, int d) {
  require_expansion_regime(spec, d);
  return detail::structure_sum_estimate(spec.family, spec.matching_ground_size(), spec.two_structure_rank(), d);
}

Poly z_poly(const ArrangementSpec& spec, int d, const ExpansionOptions& opts) {
  require_expansion_regime(spec, d);
  return detail::structure_sum(spec.family, spec.matching_ground_size(),
                               static_cast<std::size_t>(spec.ambient_dim), spec.rank, spec.two_structure_rank(), d,
                               opts);
}

Poly quotient_from_z(const ArrangementSpec& spec, int d, const Poly& z) {
  require_expansion_regime(spec, d);
  const auto vars = all_vars(spec.ambient_dim);
  const Poly q = divide_by_vandermonde(z, vars, spec.family == Family::D);
  if (q.is_zero()) return q;
  const int excess = d - spec.positive_root_count;
  if (excess < 0 || excess % 2 != 0)
    throw ParityViolation("nonzero Z_" + std::to_string(d) + " below or off the parity of |Phi+|");
  return q.scaled(Rational::pow2(-excess / 2));
}

Poly quotient(const ArrangementSpec& spec, int d, const ExpansionOptions& opts) {
  return quotient_from_z(spec, d, z_poly(spec, d, opts));
}

Poly reduce_mod_relation(const Poly& p, const ArrangementSpec& spec) {
  if (spec.family != Family::A) throw UnsupportedFamily("reduce_mod_relation applies to type A only");
  const auto arity = static_cast<std::size_t>(spec.ambient_dim);
  if (p.arity() != arity) throw ArityMismatch("reduce_mod_relation: polynomial arity differs from n+1");
  std::vector<int> coeffs(arity, -1);
  coeffs.back() = 0;
  return substitute_linear(p, arity - 1, Poly::linear_form(coeffs));
}

Poly y_poly(int n, int d, const ExpansionOptions& opts) {
  if (n < 3 || n % 2 == 0) throw ParityViolation("y_poly requires odd n >= 3");
  if (d < 0) throw Error("degree must be non-negative");
  return detail::structure_sum(Family::D, n - 1, static_cast<std::size_t>(n - 1), n, n - 1, d, opts);
}

Poly power_sum_p2(std::size_t arity) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < arity; ++i) terms.push_back({Monomial::variable(i, 2), Rational(1)});
  return Poly::from_terms(arity, std::move(terms));
}

ExpansionReport expansion_report(const ArrangementSpec& spec, const std::vector<int>& degrees,
                                 const ExpansionOptions& opts) {
  ExpansionReport report{spec, spec.two_structure_rank(), spec.positive_root_count, {}};
  for (int d : degrees) {
    ExpansionEntry entry{d, quotient(spec, d, opts), std::nullopt};
    if (spec.family == Family::A) entry.reduced_quotient = reduce_mod_relation(entry.quotient, spec);
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace pizza
