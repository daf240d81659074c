#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pizza/matchings.hpp"
#include "pizza/poly.hpp"
#include "pizza/rational.hpp"
#include "pizza/rootsys.hpp"

namespace pizza {

/// Largest degree z_poly and friends will attempt.
inline constexpr int kMaxDegree = 60;
/// Largest per-structure expansion (terms contributed by one matching).
inline constexpr std::uint64_t kMaxStructureTerms = 100'000'000;

struct ExpansionOptions {
  int threads = 0;       // 0 = auto
  bool progress = false; // matchings processed, on stderr
  bool force_residues = false;  // multi-modular accumulation even when 128 bits suffice
};

/// Degree-d Taylor polynomial of the A_1^k pizza quantity in an
/// n-dimensional space, in k variables.
struct TPoly {
  int n = 0;
  int k = 0;
  int d = 0;
  Poly body{1};
};

/// (-1)^m * binom((n-k)/2, m), exact.
Rational c_coefficient(int n, int k, int m);

TPoly t_poly(int n, int k, int d);

/// t.body composed with the integer linear forms <coords, a> of phi's roots,
/// in `ambient` variables. For norm-2 roots this is 2^{d/2} T_d(phi+; a).
Poly t_eval_on_structure(const TPoly& t, const TwoStructure& phi, int ambient);

/// Number of terms one matching contributes to z_poly(spec, d); the quantity
/// the resource guard is applied to.
std::uint64_t structure_term_estimate(const ArrangementSpec& spec, int d);

/// Unnormalized Z_d: sum over matchings of sign * t_eval_on_structure; equals
/// 2^{d/2} Z_d(Phi; a). Requires the opposite-parity regime.
Poly z_poly(const ArrangementSpec& spec, int d, const ExpansionOptions& opts = {});

/// Z_d(Phi; a) / J(a) in the table normalization.
Poly quotient(const ArrangementSpec& spec, int d, const ExpansionOptions& opts = {});
/// Same, reusing an already computed z_poly(spec, d).
Poly quotient_from_z(const ArrangementSpec& spec, int d, const Poly& z);

/// Type A only: substitute a_{n+1} <- -(a_1 + ... + a_n).
Poly reduce_mod_relation(const Poly& p, const ArrangementSpec& spec);

/// Y for D_n (n odd): the matching sum over {1..n-1} in variables
/// a_1..a_{n-1}, in the same unnormalized convention as z_poly. It agrees
/// with z_poly(D_n, d) at a_n = 0 on every monomial containing all of
/// a_1..a_{n-1}; the two differ on monomials missing one of them.
Poly y_poly(int n, int d, const ExpansionOptions& opts = {});

/// sum_i x_i^2 in `arity` variables.
Poly power_sum_p2(std::size_t arity);

struct ExpansionEntry {
  int degree = 0;
  Poly quotient{1};
  std::optional<Poly> reduced_quotient;  // type A only
};

struct ExpansionReport {
  ArrangementSpec spec;
  int k = 0;
  int phi_plus_count = 0;
  std::vector<ExpansionEntry> entries;
};

ExpansionReport expansion_report(const ArrangementSpec& spec, const std::vector<int>& degrees,
                                 const ExpansionOptions& opts = {});

/// Checks that (family, d) is in the opposite-parity regime and d <= kMaxDegree.
void require_expansion_regime(const ArrangementSpec& spec, int d);

namespace detail {

/// Fast matching sum shared by z_poly and y_poly: every maximal matching on
/// {1..ground} contributes sign(M) * T_d(n, k) composed with its edge forms
/// (A-type: e_i - e_j; D-type: e_i - e_j and e_i + e_j), in `arity`
/// variables.
Poly structure_sum(Family edge_kind, int ground, std::size_t arity, int n, int k, int d,
                   const ExpansionOptions& opts);

std::uint64_t structure_sum_estimate(Family edge_kind, int ground, int k, int d);

}  // namespace detail

}  // namespace pizza
