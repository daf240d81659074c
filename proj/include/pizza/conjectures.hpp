#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pizza/poly.hpp"
#include "pizza/rootsys.hpp"

namespace pizza {

enum class Verdict { consistent, violated, inconclusive };
std::string verdict_name(Verdict v);

/// "test" covers the dimensions already settled by hand computation (<= 7);
/// "explore" is beyond it, where a violation is a finding rather than a bug.
enum class CheckMode { test, explore };
CheckMode default_mode(int dimension);

/// One violating instance: a monomial (or basis element, or center) and the
/// offending value.
struct Witness {
  std::string where;
  std::string value;
  std::string note;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct ConjectureReport {
  std::string conjecture_id;  // signA, signD, lemma51, yNeg, schurRecon, tPos
  std::vector<std::pair<std::string, std::string>> params;
  Verdict verdict = Verdict::consistent;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
  double runtime_ms = 0;
};

struct SignCheckOptions {
  std::uint64_t samples = 0;  // Monte Carlo cross-check per center; 0 skips it
  std::uint64_t seed = 1;
  int max_degree_cap = 200;
  int threads = 0;
};

/// (-1)^floor((n+1)/4) (-1)^T P > 0 for A_n, n = 2, 3 mod 4. Centers are in
/// R^{n+1} with zero sum and norm < 1; the ball has radius 1.
ConjectureReport check_sign_A(int n, const std::vector<std::vector<double>>& centers,
                              const SignCheckOptions& opts = {});
/// (-1)^T P < 0 for D_n, n odd.
ConjectureReport check_sign_D(int n, const std::vector<std::vector<double>>& centers,
                              const SignCheckOptions& opts = {});

/// Monomial audit of z_poly(D_n, d): even exponents, some zero exponent, no
/// two equal exponents.
ConjectureReport check_lemma51(int n, int d, int threads = 0);

/// Coefficients of the strictly decreasing monomials of y_poly(n, d) are
/// negative, for d = n(n-1), n(n-1)+2, ..., <= d_max.
ConjectureReport check_y_negativity(int n, int d_max, int threads = 0);

/// Rebuilds z_poly(D_n, d) from the coefficients of y_poly(n, d) as
/// sum_lambda c_lambda prod_{i<j}(a_i^2 - a_j^2) s_lambda(a_1^2..a_n^2).
ConjectureReport schur_reconstruct(int n, int d, int threads = 0);
/// The reconstruction itself.
Poly schur_reconstruction(int n, int d, const Poly& y);

/// -T_d on (a1+a2)/sqrt2, (a1-a2)/sqrt2 divided by a1^2 - a2^2 has
/// non-negative coefficients in u = a1^2+a2^2, v = a1^2 a2^2, for even
/// d in [6, d_max].
ConjectureReport check_t_positivity(int d_max, int threads = 0);

/// The quotient above for one degree, in a1, a2.
Poly t_quotient(int d);
/// Writes a symmetric polynomial in a1^2, a2^2 as sum c_{ij} u^i v^j; the
/// result is a polynomial in two variables (u, v). Throws RewriteFailed when
/// the input is not symmetric and even.
Poly rewrite_in_uv(const Poly& p);

}  // namespace pizza
