#include "pizza/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>

#include "pizza/error.hpp"
#include "pizza/monomial_map.hpp"

namespace pizza {

namespace {

void require_same_arity(const Poly& p, const Poly& q, const char* op) {
  if (p.arity() != q.arity())
    throw ArityMismatch(std::string(op) + ": arity " + std::to_string(p.arity()) + " vs " +
                        std::to_string(q.arity()));
}

void require_index(const Poly& p, std::size_t i, const char* op) {
  if (i >= p.arity())
    throw ArityMismatch(std::string(op) + ": variable index " + std::to_string(i) +
                        " out of range for arity " + std::to_string(p.arity()));
}

std::vector<Term> collect(MonomialMap<Rational>& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  acc.for_each([&](const Monomial& m, Rational& c) {
    if (!c.is_zero()) out.push_back({m, std::move(c)});
  });
  std::sort(out.begin(), out.end(),
            [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
  return out;
}

}  // namespace

Poly::Poly(std::size_t arity) : arity_(arity) {
  if (arity == 0 || arity > kMaxArity)
    throw ArityMismatch("polynomial arity must lie in [1, " + std::to_string(kMaxArity) + "]");
}

Poly Poly::constant(std::size_t arity, const Rational& c) {
  Poly p(arity);
  if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
  return p;
}

Poly Poly::variable(std::size_t arity, std::size_t index) {
  Poly p(arity);
  require_index(p, index, "Poly::variable");
  p.terms_.push_back({Monomial::variable(index), Rational(1)});
  return p;
}

Poly Poly::linear_form(std::span<const int> coeffs) {
  Poly p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) p.terms_.push_back({Monomial::variable(i), Rational(coeffs[i])});
  return p;  // variable order is already descending grlex
}

Poly Poly::from_terms(std::size_t arity, std::vector<Term> terms) {
  Poly p(arity);
  for (const Term& t : terms)
    if (t.monomial.support_end() > arity)
      throw ArityMismatch("term uses a variable beyond arity " + std::to_string(arity));
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

int Poly::degree() const { return terms_.empty() ? -1 : terms_.front().monomial.degree(); }

int Poly::min_degree() const { return terms_.empty() ? -1 : terms_.back().monomial.degree(); }

bool Poly::is_homogeneous() const { return degree() == min_degree(); }

bool Poly::is_constant() const { return degree() <= 0; }

Rational Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.monomial > key; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return Rational(0);
}

const Term& Poly::leading_term() const {
  if (terms_.empty()) throw Error("leading_term of the zero polynomial");
  return terms_.front();
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  require_same_arity(*this, rhs, "add");
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->monomial > b->monomial)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->monomial > a->monomial) {
      merged.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (!c.is_zero()) merged.push_back({a->monomial, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) { return *this += -rhs; }

Poly& Poly::operator*=(const Poly& rhs) {
  *this = *this * rhs;
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  require_same_arity(lhs, rhs, "mul");
  Poly out(lhs.arity_);
  if (lhs.is_zero() || rhs.is_zero()) return out;
  MonomialMap<Rational> acc(lhs.size() * rhs.size());
  for (const Term& a : lhs.terms_)
    for (const Term& b : rhs.terms_) acc[a.monomial * b.monomial] += a.coeff * b.coeff;
  out.terms_ = collect(acc);
  return out;
}

Poly Poly::scaled(const Rational& c) const {
  if (c.is_zero()) return Poly(arity_);
  Poly out = *this;
  for (Term& t : out.terms_) t.coeff *= c;
  return out;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = constant(arity_, Rational(1));
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Poly Poly::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != arity_) throw ArityMismatch("permutation length differs from arity");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (perm[i] >= arity_) throw ArityMismatch("permutation target out of range");
      if (t.monomial[i] != 0) m.set(perm[i], t.monomial[i]);
    }
    out.push_back({m, t.coeff});
  }
  return from_terms(arity_, std::move(out));
}

Poly Poly::swapped(std::size_t i, std::size_t j) const {
  require_index(*this, i, "swap");
  require_index(*this, j, "swap");
  std::vector<std::size_t> perm(arity_);
  for (std::size_t v = 0; v < arity_; ++v) perm[v] = v;
  std::swap(perm[i], perm[j]);
  return permuted(perm);
}

Poly Poly::with_negated_variable(std::size_t i) const {
  require_index(*this, i, "negate");
  Poly out = *this;
  for (Term& t : out.terms_)
    if (t.monomial[i] % 2 == 1) t.coeff = -t.coeff;
  return out;
}

Poly Poly::with_arity(std::size_t arity) const {
  Poly out(arity);
  for (const Term& t : terms_)
    if (t.monomial.support_end() > arity)
      throw ArityMismatch("with_arity: polynomial uses a dropped variable");
  out.terms_ = terms_;
  return out;
}

double Poly::evaluate(std::span<const double> point) const {
  if (point.size() != arity_) throw ArityMismatch("evaluate: point dimension differs from arity");
  double sum = 0.0;
  for (const Term& t : terms_) {
    double v = t.coeff.to_double();
    for (std::size_t i = 0; i < arity_; ++i)
      for (int e = 0; e < t.monomial[i]; ++e) v *= point[i];
    sum += v;
  }
  return sum;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != arity_) throw ArityMismatch("evaluate: point dimension differs from arity");
  Rational sum(0);
  for (const Term& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < arity_; ++i)
      for (int e = 0; e < t.monomial[i]; ++e) v *= point[i];
    sum += v;
  }
  return sum;
}

std::string Poly::to_string(const std::string& prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    const bool negative = t.coeff.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = t.coeff.abs();
    const bool unit = mag == Rational(1);
    bool wrote = false;
    if (!unit || t.monomial.degree() == 0) {
      os << mag.to_string();
      wrote = true;
    }
    for (std::size_t i = 0; i < arity_; ++i) {
      const int e = t.monomial[i];
      if (e == 0) continue;
      if (wrote) os << '*';
      os << prefix << (i + 1);
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

Poly add(const Poly& p, const Poly& q) { return p + q; }

Poly mul(const Poly& p, const Poly& q) { return p * q; }

Poly substitute_linear(const Poly& p, std::size_t var_index, const Poly& form) {
  require_same_arity(p, form, "substitute_linear");
  require_index(p, var_index, "substitute_linear");
  if (form.degree() > 1) throw Error("substitute_linear: form has degree > 1");

  std::unordered_map<int, Poly> powers;
  auto power = [&](int e) -> const Poly& {
    auto it = powers.find(e);
    if (it == powers.end()) it = powers.emplace(e, form.pow(static_cast<unsigned>(e))).first;
    return it->second;
  };

  MonomialMap<Rational> acc(p.size() * 2);
  for (const Term& t : p.terms()) {
    const int e = t.monomial[var_index];
    if (e == 0) {
      acc[t.monomial] += t.coeff;
      continue;
    }
    Monomial rest = t.monomial;
    rest.set(var_index, 0);
    for (const Term& f : power(e).terms()) acc[rest * f.monomial] += t.coeff * f.coeff;
  }
  return Poly::from_terms(p.arity(), collect(acc));
}

Poly exact_divide_linear(const Poly& p, const Poly& form) {
  require_same_arity(p, form, "exact_divide_linear");
  if (form.is_zero() || form.degree() != 1 || !form.is_homogeneous())
    throw Error("exact_divide_linear: divisor must be a nonzero homogeneous linear form");

  const Term& lead = form.leading_term();
  std::map<Monomial, Rational, std::greater<>> rem;
  for (const Term& t : p.terms()) rem.emplace(t.monomial, t.coeff);

  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead.monomial.divides(it->first))
      throw NonDivisible("exact_divide_linear: nonzero remainder at " + Poly::from_terms(
                             p.arity(), {Term{it->first, it->second}}).to_string());
    const Monomial qm = it->first / lead.monomial;
    const Rational qc = it->second / lead.coeff;
    rem.erase(it);
    for (auto f = form.terms().begin() + 1; f != form.terms().end(); ++f) {
      const Monomial m = qm * f->monomial;
      auto [slot, inserted] = rem.try_emplace(m);
      slot->second -= qc * f->coeff;
      if (slot->second.is_zero()) rem.erase(slot);
    }
    quotient.push_back({qm, qc});
  }
  return Poly::from_terms(p.arity(), std::move(quotient));
}

Poly vandermonde(std::size_t arity, std::span<const std::size_t> vars, bool squared) {
  Poly out = Poly::constant(arity, Rational(1));
  for (std::size_t a = 0; a < vars.size(); ++a) {
    for (std::size_t b = a + 1; b < vars.size(); ++b) {
      out = out * (Poly::variable(arity, vars[a]) - Poly::variable(arity, vars[b]));
      if (squared) out = out * (Poly::variable(arity, vars[a]) + Poly::variable(arity, vars[b]));
    }
  }
  return out;
}

Poly divide_by_vandermonde(const Poly& p, std::span<const std::size_t> vars, bool squared) {
  Poly q = p;
  for (std::size_t a = 0; a < vars.size(); ++a) {
    for (std::size_t b = a + 1; b < vars.size(); ++b) {
      const Poly xa = Poly::variable(p.arity(), vars[a]);
      const Poly xb = Poly::variable(p.arity(), vars[b]);
      q = exact_divide_linear(q, xa - xb);
      if (squared) q = exact_divide_linear(q, xa + xb);
    }
  }
  return q;
}

bool is_skew_under_transposition(const Poly& p, std::size_t i, std::size_t j) {
  require_index(p, i, "is_skew_under_transposition");
  require_index(p, j, "is_skew_under_transposition");
  if (i == j) throw Error("is_skew_under_transposition: indices must differ");
  return p.swapped(i, j) == -p;
}

}  // namespace pizza
