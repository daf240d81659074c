#pragma once

#include <cstddef>
#include <span>

#include "pizza/partition.hpp"
#include "pizza/poly.hpp"

namespace pizza {

/// det[x_j^{exponents[i]}] for i, j < exponents.size(), in `arity` variables.
/// Entries are monomials, so the determinant is expanded over permutations.
Poly alternant(std::span<const int> exponents, std::size_t arity);

/// Schur polynomial s_lambda(x_1..x_nvars) as the alternant
/// a_{lambda+delta} divided exactly by the Vandermonde a_delta.
Poly schur_bialternant(const Partition& lambda, std::size_t nvars);

}  // namespace pizza
