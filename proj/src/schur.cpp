#include "pizza/schur.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "pizza/error.hpp"

namespace pizza {

namespace {

int permutation_sign(const std::vector<std::size_t>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

Poly alternant(std::span<const int> exponents, std::size_t arity) {
  const std::size_t n = exponents.size();
  if (n > arity) throw ArityMismatch("alternant: more rows than variables");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Term> terms;
  do {
    Monomial m;
    for (std::size_t row = 0; row < n; ++row) m.set(perm[row], exponents[row]);
    terms.push_back({m, Rational(permutation_sign(perm))});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Poly::from_terms(arity, std::move(terms));
}

Poly schur_bialternant(const Partition& lambda, std::size_t nvars) {
  if (lambda.length() > nvars)
    throw Error("schur_bialternant: partition " + lambda.to_string() + " has more than " +
                std::to_string(nvars) + " parts");
  std::vector<int> shifted(nvars);
  std::vector<std::size_t> vars(nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    shifted[i] = lambda[i] + static_cast<int>(nvars - 1 - i);
    vars[i] = i;
  }
  // det[x_j^{n-1-i}] = prod_{i<j} (x_i - x_j).
  return divide_by_vandermonde(alternant(shifted, nvars), vars, /*squared=*/false);
}

}  // namespace pizza
