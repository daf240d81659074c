#include "pizza/conjectures.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "pizza/error.hpp"
#include "pizza/matchings.hpp"
#include "pizza/oracle.hpp"
#include "pizza/parallel.hpp"
#include "pizza/partition.hpp"
#include "pizza/schur.hpp"
#include "pizza/taylor.hpp"

namespace pizza {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

std::string fmt_point(const std::vector<double>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + fmt(v[i]);
  return s + ")";
}

void finish(ConjectureReport& r, bool undecided, Clock::time_point start) {
  if (!r.witnesses.empty())
    r.verdict = Verdict::violated;
  else
    r.verdict = undecided ? Verdict::inconclusive : Verdict::consistent;
  r.runtime_ms = elapsed_ms(start);
}

int sign_of(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Shared body of the sign checks: P must have sign prefactor * (-1)^T.
ConjectureReport check_sign(const std::string& id, const ArrangementSpec& spec, int prefactor,
                            const std::vector<std::vector<double>>& centers, const SignCheckOptions& opts) {
  const auto start = Clock::now();
  ConjectureReport report;
  report.conjecture_id = id;
  report.params = {{"spec", spec.to_string()},
                   {"centers", std::to_string(centers.size())},
                   {"samples", std::to_string(opts.samples)},
                   {"seed", std::to_string(opts.seed)}};
  bool undecided = false;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    const auto& center = centers[i];
    const BallSpec ball{center, 1.0};
    validate_ball(spec, ball);
    if (std::all_of(center.begin(), center.end(), [](double x) { return x == 0; })) {
      report.notes.push_back("center " + std::to_string(i) + " is the origin: P = 0, degenerate");
      undecided = true;
      continue;
    }
    const int expected = prefactor * chamber_sign(spec, center);

    int series_sign = 0;
    double norm2 = 0;
    for (double x : center) norm2 += x * x;
    if (norm2 < 1) {
      SeriesValue v;
      for (int cap = spec.positive_root_count;; cap = std::min(opts.max_degree_cap, cap + 8)) {
        v = sum_over_2structures(spec, ball, cap);
        if ((v.value != 0 && std::abs(v.value) > 4 * v.tail_bound) || cap >= opts.max_degree_cap) break;
      }
      if (std::abs(v.value) > v.tail_bound) {
        series_sign = sign_of(v.value);
        if (series_sign != expected)
          report.witnesses.push_back({fmt_point(center), fmt(v.value), "series value has the wrong sign"});
      } else {
        report.notes.push_back("center " + std::to_string(i) + ": series value " + fmt(v.value) +
                               " within tail bound " + fmt(v.tail_bound));
      }
    } else {
      report.notes.push_back("center " + std::to_string(i) + " outside the series region; Monte Carlo only");
    }

    int mc_sign = 0;
    if (opts.samples > 0) {
      const McEstimate mc = mc_pizza(spec, ball, opts.samples, opts.seed + i, opts.threads);
      if (std::abs(mc.value) > 3 * mc.std_error) {
        mc_sign = sign_of(mc.value);
        if (mc_sign != expected)
          report.witnesses.push_back({fmt_point(center), fmt(mc.value), "Monte Carlo estimate has the wrong sign"});
        if (series_sign != 0 && mc_sign != series_sign)
          report.witnesses.push_back({fmt_point(center), fmt(mc.value), "series and Monte Carlo disagree"});
      }
    }
    if (series_sign == 0 && mc_sign == 0) undecided = true;
  }
  finish(report, undecided, start);
  return report;
}

std::vector<std::size_t> all_vars(int n) {
  std::vector<std::size_t> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

Poly square_variables(const Poly& p) {
  std::vector<Term> terms;
  for (const Term& t : p.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < p.arity(); ++i) m.set(i, 2 * t.monomial[i]);
    terms.push_back({m, t.coeff});
  }
  return Poly::from_terms(p.arity(), std::move(terms));
}

// Exponents 2 lambda_i + 2(n - i), i = 1..n-1.
Monomial staircase(const Partition& lambda, int n) {
  Monomial m;
  for (int i = 1; i < n; ++i) m.set(static_cast<std::size_t>(i - 1), 2 * lambda[static_cast<std::size_t>(i - 1)] + 2 * (n - i));
  return m;
}

std::vector<int> degrees_from(int first, int last) {
  std::vector<int> out;
  for (int d = first; d <= last; d += 2) out.push_back(d);
  return out;
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::consistent: return "consistent";
    case Verdict::violated: return "violated";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

CheckMode default_mode(int dimension) { return dimension <= 7 ? CheckMode::test : CheckMode::explore; }

ConjectureReport check_sign_A(int n, const std::vector<std::vector<double>>& centers, const SignCheckOptions& opts) {
  if (n % 4 != 2 && n % 4 != 3) throw ParityViolation("check_sign_A needs n = 2 or 3 mod 4");
  const int prefactor = ((n + 1) / 4) % 2 == 0 ? 1 : -1;
  return check_sign("signA", ArrangementSpec::type_a(n), prefactor, centers, opts);
}

ConjectureReport check_sign_D(int n, const std::vector<std::vector<double>>& centers, const SignCheckOptions& opts) {
  if (n < 3 || n % 2 == 0) throw ParityViolation("check_sign_D needs odd n >= 3");
  return check_sign("signD", ArrangementSpec::type_d(n), -1, centers, opts);
}

ConjectureReport check_lemma51(int n, int d, int threads) {
  const auto start = Clock::now();
  const ArrangementSpec spec = ArrangementSpec::type_d(n);
  ConjectureReport report{"lemma51", {{"spec", spec.to_string()}, {"degree", std::to_string(d)}}, {}, {}, {}, 0};
  ExpansionOptions opts;
  opts.threads = threads;
  const Poly z = z_poly(spec, d, opts);
  for (const Term& t : z.terms()) {
    bool even = true;
    bool has_zero = false;
    bool distinct = true;
    for (int i = 0; i < n; ++i) {
      const int e = t.monomial[static_cast<std::size_t>(i)];
      even = even && e % 2 == 0;
      has_zero = has_zero || e == 0;
      for (int j = i + 1; j < n; ++j) distinct = distinct && e != t.monomial[static_cast<std::size_t>(j)];
    }
    const Poly single = Poly::from_terms(static_cast<std::size_t>(n), {{t.monomial, Rational(1)}});
    const std::string where = single.to_string();
    if (!even) report.witnesses.push_back({where, t.coeff.to_string(), "(a) odd exponent"});
    if (!has_zero) report.witnesses.push_back({where, t.coeff.to_string(), "(b) all exponents positive"});
    if (!distinct) report.witnesses.push_back({where, t.coeff.to_string(), "(c) two equal exponents"});
  }
  if (z.is_zero()) report.notes.push_back("Z_d is zero at this degree");
  finish(report, false, start);
  return report;
}

ConjectureReport check_y_negativity(int n, int d_max, int threads) {
  if (n < 3 || n % 2 == 0) throw ParityViolation("check_y_negativity needs odd n >= 3");
  const auto start = Clock::now();
  const int base = n * (n - 1);
  ConjectureReport report{"yNeg",
                          {{"rank", std::to_string(n)},
                           {"degree_min", std::to_string(base)},
                           {"degree_max", std::to_string(d_max)}},
                          {},
                          {},
                          {},
                          0};
  const auto degrees = degrees_from(base, d_max);
  std::vector<std::vector<Witness>> found(degrees.size());
  parallel_tasks(degrees.size(), threads, [&](std::size_t i, std::size_t) {
    const int d = degrees[i];
    ExpansionOptions inner;
    inner.threads = 1;
    const Poly y = y_poly(n, d, inner);
    for (const Partition& lambda : partitions((d - base) / 2, static_cast<std::size_t>(n - 1))) {
      const Monomial mu = staircase(lambda, n);
      const Rational c = y.coefficient(mu);
      if (c.sign() < 0) continue;
      const std::string where = "d=" + std::to_string(d) + " lambda=" + lambda.to_string() + " " +
                                Poly::from_terms(static_cast<std::size_t>(n - 1), {{mu, Rational(1)}}).to_string();
      found[i].push_back({where, c.to_string(), c.is_zero() ? "non-strict: coefficient is zero" : "positive"});
    }
  });
  for (auto& w : found) report.witnesses.insert(report.witnesses.end(), w.begin(), w.end());
  if (degrees.empty()) report.notes.push_back("no degree in range");
  finish(report, false, start);
  return report;
}

Poly schur_reconstruction(int n, int d, const Poly& y) {
  const auto arity = static_cast<std::size_t>(n);
  const int base = n * (n - 1);
  Poly sum(arity);
  if (d < base || (d - base) % 2 != 0) return sum;
  for (const Partition& lambda : partitions((d - base) / 2, static_cast<std::size_t>(n - 1))) {
    const Rational c = y.coefficient(staircase(lambda, n));
    if (c.is_zero()) continue;
    sum += square_variables(schur_bialternant(lambda, arity)).scaled(c);
  }
  const auto vars = all_vars(n);
  return vandermonde(arity, vars, true) * sum;
}

ConjectureReport schur_reconstruct(int n, int d, int threads) {
  const auto start = Clock::now();
  const ArrangementSpec spec = ArrangementSpec::type_d(n);
  ConjectureReport report{"schurRecon", {{"spec", spec.to_string()}, {"degree", std::to_string(d)}}, {}, {}, {}, 0};
  ExpansionOptions opts;
  opts.threads = threads;
  const Poly z = z_poly(spec, d, opts);
  const Poly y = y_poly(n, d, opts);
  const auto arity = static_cast<std::size_t>(n);
  // Y and Z at a_n = 0 must agree wherever a_1..a_{n-1} all occur.
  const Poly restricted = substitute_linear(z, arity - 1, Poly(arity)).with_arity(arity - 1);
  auto full_support = [&](const Monomial& m) {
    for (std::size_t i = 0; i + 1 < arity; ++i)
      if (m[i] == 0) return false;
    return true;
  };
  for (const Poly* p : {&y, &restricted}) {
    const Poly* other = p == &y ? &restricted : &y;
    for (const Term& t : p->terms())
      if (full_support(t.monomial) && other->coefficient(t.monomial) != t.coeff)
        report.witnesses.push_back({Poly::from_terms(arity - 1, {{t.monomial, Rational(1)}}).to_string(),
                                    t.coeff.to_string(), "Y and Z at a_n = 0 disagree"});
  }
  const Poly diff = z - schur_reconstruction(n, d, y);
  for (std::size_t i = 0; i < diff.size() && i < 5; ++i)
    report.witnesses.push_back({Poly::from_terms(arity, {{diff.terms()[i].monomial, Rational(1)}}).to_string(),
                                diff.terms()[i].coeff.to_string(), "Z minus reconstruction"});
  if (diff.size() > 5) report.notes.push_back(std::to_string(diff.size()) + " differing monomials in total");
  finish(report, false, start);
  return report;
}

Poly t_quotient(int d) {
  if (d < 2 || d % 2 != 0) throw ParityViolation("t_quotient needs even d >= 2");
  const TPoly t = t_poly(3, 2, d);
  const TwoStructure phi{Matching{}, {Root{{1, 1}, 2}, Root{{1, -1}, 2}}};
  Poly p = t_eval_on_structure(t, phi, 2).scaled(Rational::pow2(-d / 2));
  const std::vector<int> plus{1, 1};
  const std::vector<int> minus{1, -1};
  p = exact_divide_linear(p, Poly::linear_form(plus));
  p = exact_divide_linear(p, Poly::linear_form(minus));
  return -p;
}

Poly rewrite_in_uv(const Poly& p) {
  if (p.arity() != 2) throw RewriteFailed("rewrite_in_uv expects two variables");
  for (const Term& t : p.terms())
    if (t.monomial[0] % 2 != 0 || t.monomial[1] % 2 != 0) throw RewriteFailed("odd exponent in " + p.to_string());
  if (p.swapped(0, 1) != p) throw RewriteFailed("not symmetric: " + p.to_string());
  const Poly u = Poly::from_terms(2, {{Monomial::variable(0, 2), Rational(1)}, {Monomial::variable(1, 2), Rational(1)}});
  Monomial a1a2;
  a1a2.set(0, 2);
  a1a2.set(1, 2);
  const Poly v = Poly::from_terms(2, {{a1a2, Rational(1)}});
  Poly rest = p;
  std::vector<Term> out;
  while (!rest.is_zero()) {
    const Term lead = rest.leading_term();
    const int hi = lead.monomial[0] / 2;
    const int lo = lead.monomial[1] / 2;
    if (hi < lo) throw RewriteFailed("leading monomial is not dominant: " + rest.to_string());
    Monomial uv;
    uv.set(0, hi - lo);
    uv.set(1, lo);
    out.push_back({uv, lead.coeff});
    rest -= (u.pow(static_cast<unsigned>(hi - lo)) * v.pow(static_cast<unsigned>(lo))).scaled(lead.coeff);
  }
  return Poly::from_terms(2, std::move(out));
}

ConjectureReport check_t_positivity(int d_max, int threads) {
  if (d_max < 6) throw Error("check_t_positivity needs d_max >= 6");
  const auto start = Clock::now();
  ConjectureReport report{"tPos", {{"degree_min", "6"}, {"degree_max", std::to_string(d_max)}}, {}, {}, {}, 0};
  const auto degrees = degrees_from(6, d_max);
  std::vector<std::vector<Witness>> found(degrees.size());
  parallel_tasks(degrees.size(), threads, [&](std::size_t i, std::size_t) {
    const int d = degrees[i];
    const Poly uv = rewrite_in_uv(t_quotient(d));
    for (const Term& t : uv.terms())
      if (t.coeff.sign() < 0)
        found[i].push_back({"d=" + std::to_string(d) + " u^" + std::to_string(t.monomial[0]) + "*v^" +
                                std::to_string(t.monomial[1]),
                            t.coeff.to_string(), "negative coefficient"});
  });
  for (auto& w : found) report.witnesses.insert(report.witnesses.end(), w.begin(), w.end());
  finish(report, false, start);
  return report;
}

}  // namespace pizza
