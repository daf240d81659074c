#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pizza/rootsys.hpp"

namespace pizza {

struct McEstimate {
  double value = 0;
  double std_error = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Ball B(center, radius). Centers are given in the arrangement's ambient
/// coordinates; for type A they must sum to zero.
struct BallSpec {
  std::vector<double> center;
  double radius = 1.0;
};

/// Truncated series value with a rigorous bound on the omitted tail.
struct SeriesValue {
  double value = 0;
  double tail_bound = 0;
  int degree_cap = 0;
};

/// Volume of the m-dimensional unit ball.
double unit_ball_volume(int m);

/// Checks the center's length (and the sum-zero relation for type A).
void validate_ball(const ArrangementSpec& spec, const BallSpec& ball);

/// Signed chamber volume of the ball by uniform sampling. Deterministic in
/// (seed, samples) whatever the thread count.
McEstimate mc_pizza(const ArrangementSpec& spec, const BallSpec& ball, std::uint64_t samples, std::uint64_t seed,
                    int threads = 0);

/// A_1^k pizza quantity of B(x, 1) in n dimensions from its Taylor series
/// through total degree degree_cap. `coords` are the k root pairings.
SeriesValue a1k_pizza_series(int n, int k, std::span<const double> coords, int degree_cap);

/// Largest error estimate a1k_pizza_quadrature accepts.
inline constexpr double kQuadratureTarget = 1e-10;

/// The same quantity from nested adaptive quadrature (k <= 3). Throws
/// ToleranceNotReached when an error estimate exceeds kQuadratureTarget.
double a1k_pizza_quadrature(int n, int k, std::span<const double> coords);

/// Pizza quantity of an A or D arrangement as the signed sum of A_1^k series
/// over its 2-structures, scaled from the unit ball by radius^n.
SeriesValue sum_over_2structures(const ArrangementSpec& spec, const BallSpec& ball, int degree_cap);

/// Smallest degree cap (of the right parity) whose tail bound is below
/// `tail`, searching up to max_cap.
int degree_cap_for_tail(const ArrangementSpec& spec, const BallSpec& ball, double tail, int max_cap = 400);

/// `count` seeded centers with norm <= max_norm, at distance >= min_margin
/// from every hyperplane (sum-zero for type A).
std::vector<std::vector<double>> random_centers(const ArrangementSpec& spec, int count, double max_norm,
                                                std::uint64_t seed, double min_margin = 1e-3);

}  // namespace pizza
