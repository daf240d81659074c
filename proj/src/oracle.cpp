#include "pizza/oracle.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "pizza/error.hpp"
#include "pizza/matchings.hpp"
#include "pizza/parallel.hpp"
#include "pizza/rational.hpp"
#include "pizza/taylor.hpp"

namespace pizza {

namespace {

constexpr double kHyperplaneTol = 1e-12;
constexpr std::uint64_t kChunk = 1 << 14;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double norm(std::span<const double> v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// Uniform point of the ball B(center, radius) inside the arrangement's space.
void sample_ball(const ArrangementSpec& spec, const BallSpec& ball, std::mt19937_64& rng,
                 std::normal_distribution<double>& gauss, std::uniform_real_distribution<double>& unif,
                 std::vector<double>& out) {
  const std::size_t ambient = ball.center.size();
  const int dim = spec.dimension();
  while (true) {
    for (std::size_t i = 0; i < ambient; ++i) out[i] = gauss(rng);
    if (spec.family == Family::A) {
      double mean = 0;
      for (double x : out) mean += x;
      mean /= static_cast<double>(ambient);
      for (double& x : out) x -= mean;
    }
    const double len = norm(out);
    if (len == 0) continue;
    const double r = ball.radius * std::pow(unif(rng), 1.0 / dim);
    for (std::size_t i = 0; i < ambient; ++i) out[i] = ball.center[i] + r * out[i] / len;
    return;
  }
}

// Product of pairing signs, or 0 within kHyperplaneTol of some hyperplane.
int sign_or_zero(const std::vector<std::vector<double>>& roots, std::span<const double> x) {
  int sign = 1;
  for (const auto& root : roots) {
    double p = 0;
    for (std::size_t i = 0; i < x.size(); ++i) p += root[i] * x[i];
    if (std::abs(p) < kHyperplaneTol) return 0;
    if (p < 0) sign = -sign;
  }
  return sign;
}

// W(r) = L / (r! (2r+1)) for r <= M with L their common multiple.
struct Weights {
  mpz_class common = 1;
  std::vector<mpz_class> values;
};

Weights make_weights(int M) {
  Weights w;
  std::vector<mpz_class> dens;
  for (int r = 0; r <= M; ++r) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(r));
    dens.push_back(f * (2 * r + 1));
    mpz_lcm(w.common.get_mpz_t(), w.common.get_mpz_t(), dens.back().get_mpz_t());
  }
  for (const mpz_class& d : dens) w.values.push_back(w.common / d);
  return w;
}

// Coefficients of z^0..z^M in prod_e sum_r W(r) X_e^{2r+1} z^r.
std::vector<mpz_class> product_coeffs(const std::vector<mpz_class>& xs, const Weights& w, int M) {
  const auto len = static_cast<std::size_t>(M) + 1;
  std::vector<mpz_class> acc(len, 0);
  acc[0] = 1;
  std::vector<mpz_class> g(len), next(len);
  for (const mpz_class& x : xs) {
    const mpz_class x2 = x * x;
    mpz_class power = x;
    for (std::size_t r = 0; r < len; ++r) {
      g[r] = w.values[r] * power;
      power *= x2;
    }
    for (std::size_t i = 0; i < len; ++i) {
      next[i] = 0;
      for (std::size_t j = 0; j <= i; ++j)
        if (acc[j] != 0) next[i] += acc[j] * g[i - j];
    }
    std::swap(acc, next);
  }
  return acc;
}

// sum_{m<=M} c_m m! nu^{-m} P_m / (L^k D^{2m+k}): the exact part of the
// truncated series for pairings X_e / (D sqrt(nu)).
Rational combine(int n, int k, const std::vector<mpz_class>& p, const Weights& w, const mpz_class& den, long nu) {
  Rational total;
  mpz_class lk;
  mpz_pow_ui(lk.get_mpz_t(), w.common.get_mpz_t(), static_cast<unsigned long>(k));
  mpz_class dpow;
  mpz_pow_ui(dpow.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(k));
  const mpz_class den2 = den * den;
  mpz_class nupow = 1;
  mpz_class mfact = 1;
  for (std::size_t m = 0; m < p.size(); ++m) {
    if (m > 0) {
      dpow *= den2;
      nupow *= nu;
      mfact *= static_cast<unsigned long>(m);
    }
    if (p[m] == 0) continue;
    const Rational c = c_coefficient(n, k, static_cast<int>(m));
    if (c.is_zero()) continue;
    total += c * Rational(mpq_class(p[m] * mfact, lk * dpow * nupow));
  }
  return total;
}

// sum_{m>M} |c_m| s^m, using the geometric majorant once |c_{m+1}/c_m| <= 1.
double tail_factor(int n, int k, int M, double s) {
  const double alpha = (n - k) / 2.0;
  const int ratio_ok = std::max(0, static_cast<int>(std::ceil((alpha - 1) / 2)));
  double tail = 0;
  int m = M + 1;
  for (; m < ratio_ok; ++m) tail += std::abs(c_coefficient(n, k, m).to_double()) * std::pow(s, m);
  return tail + std::abs(c_coefficient(n, k, m).to_double()) * std::pow(s, m) / (1 - s);
}

int max_order(int k, int degree_cap) { return degree_cap < k ? -1 : (degree_cap - k) / 2; }

mpz_class common_denominator(const std::vector<Rational>& xs) {
  mpz_class den = 1;
  for (const Rational& x : xs) {
    const mpz_class d = x.denominator();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  return den;
}

std::vector<mpz_class> scaled_numerators(const std::vector<Rational>& xs, const mpz_class& den) {
  std::vector<mpz_class> out;
  for (const Rational& x : xs) out.push_back(x.numerator() * (den / x.denominator()));
  return out;
}

// Pairings <coords, a> (unnormalized) for every matching, with signs.
struct Structure {
  int sign = 1;
  std::vector<Rational> pairings;
};

std::vector<Structure> structures(const ArrangementSpec& spec, const std::vector<Rational>& point) {
  std::vector<Structure> out;
  enumerate_matchings(spec.matching_ground_size(), [&](const Matching& m) {
    Structure s{matching_sign(m), {}};
    for (const Root& root : two_structure(spec, m).positive_roots) {
      Rational p;
      for (std::size_t i = 0; i < root.coords.size(); ++i)
        if (root.coords[i] != 0) p += Rational(root.coords[i]) * point[i];
      s.pairings.push_back(std::move(p));
    }
    out.push_back(std::move(s));
  });
  return out;
}

// Normalized pairings x_e / sqrt(2): product of |x| and sum of squares.
std::pair<double, double> structure_size(const Structure& s) {
  double prod = 1;
  double sq = 0;
  for (const Rational& p : s.pairings) {
    const double x = p.to_double() / std::numbers::sqrt2;
    prod *= std::abs(x);
    sq += x * x;
  }
  return {prod, sq};
}

std::vector<Rational> unit_point(const ArrangementSpec& spec, const BallSpec& ball) {
  if (spec.family != Family::A && spec.family != Family::D)
    throw UnsupportedFamily("sum_over_2structures supports types A and D");
  validate_ball(spec, ball);
  std::vector<Rational> point;
  for (double x : ball.center) point.push_back(Rational::from_double(x / ball.radius));
  return point;
}

double structures_tail(const ArrangementSpec& spec, const std::vector<Structure>& all, int M) {
  const int n = spec.dimension();
  const int k = spec.two_structure_rank();
  double tail = 0;
  for (const Structure& s : all) {
    const auto [prod, sq] = structure_size(s);
    if (sq >= 1) throw DivergentRegion("a 2-structure's pairings leave the unit ball; the series does not converge");
    tail += prod * tail_factor(n, k, M, sq);
  }
  return tail;
}

}  // namespace

double unit_ball_volume(int m) {
  if (m < 0) throw Error("unit_ball_volume: negative dimension");
  return std::exp(0.5 * m * std::log(std::numbers::pi) - std::lgamma(0.5 * m + 1));
}

void validate_ball(const ArrangementSpec& spec, const BallSpec& ball) {
  if (!(ball.radius > 0)) throw Error("ball radius must be positive");
  if (static_cast<int>(ball.center.size()) != spec.ambient_dim)
    throw ArityMismatch("center has " + std::to_string(ball.center.size()) + " coordinates, " + spec.to_string() +
                        " needs " + std::to_string(spec.ambient_dim));
  if (spec.family == Family::A) {
    double sum = 0;
    for (double x : ball.center) sum += x;
    if (std::abs(sum) > 1e-9 * std::max(1.0, norm(ball.center)))
      throw Error("type A centers must have coordinates summing to zero");
  }
}

McEstimate mc_pizza(const ArrangementSpec& spec, const BallSpec& ball, std::uint64_t samples, std::uint64_t seed,
                    int threads) {
  if (samples < 1) throw Error("mc_pizza needs at least one sample");
  validate_ball(spec, ball);
  const auto roots = numeric_roots(spec);
  const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<std::int64_t> sums(chunks, 0);
  parallel_tasks(static_cast<std::size_t>(chunks), threads, [&](std::size_t c, std::size_t) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(c)));
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> unif;
    std::vector<double> x(ball.center.size());
    const std::uint64_t begin = c * kChunk;
    const std::uint64_t count = std::min(kChunk, samples - begin);
    std::int64_t sum = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
      int sign = 0;
      while (sign == 0) {
        sample_ball(spec, ball, rng, gauss, unif, x);
        sign = sign_or_zero(roots, x);
      }
      sum += sign;
    }
    sums[c] = sum;
  });
  std::int64_t total = 0;
  for (std::int64_t s : sums) total += s;
  const double n = static_cast<double>(samples);
  const double mean = static_cast<double>(total) / n;
  const double var = samples > 1 ? std::max(0.0, 1 - mean * mean) * n / (n - 1) : 1.0;
  const double volume = unit_ball_volume(spec.dimension()) * std::pow(ball.radius, spec.dimension());
  return {volume * mean, volume * std::sqrt(var / n), samples, seed};
}

SeriesValue a1k_pizza_series(int n, int k, std::span<const double> coords, int degree_cap) {
  if (k < 1 || n < k) throw Error("a1k_pizza_series requires n >= k >= 1");
  if (static_cast<int>(coords.size()) != k) throw ArityMismatch("a1k_pizza_series: expected k coordinates");
  double s = 0;
  double prod = 1;
  for (double x : coords) {
    s += x * x;
    prod *= std::abs(x);
  }
  if (s >= 1) throw DivergentRegion("a1k_pizza_series needs sum of squares < 1");
  const double scale = std::ldexp(unit_ball_volume(n - k), k);
  const int M = max_order(k, degree_cap);
  SeriesValue out{0, scale * prod * tail_factor(n, k, M, s), degree_cap};
  if (M < 0) return out;
  std::vector<Rational> xs;
  for (double x : coords) xs.push_back(Rational::from_double(x));
  const mpz_class den = common_denominator(xs);
  const Weights w = make_weights(M);
  const auto p = product_coeffs(scaled_numerators(xs, den), w, M);
  out.value = scale * combine(n, k, p, w, den, 1).to_double();
  return out;
}

double a1k_pizza_quadrature(int n, int k, std::span<const double> coords) {
  if (k < 1 || k > 3) throw Error("a1k_pizza_quadrature supports 1 <= k <= 3");
  if (n < k) throw Error("a1k_pizza_quadrature requires n >= k");
  if (static_cast<int>(coords.size()) != k) throw ArityMismatch("a1k_pizza_quadrature: expected k coordinates");
  if (norm(coords) > 1) throw DivergentRegion("a1k_pizza_quadrature needs the origin inside B(x, 1)");
  using Gk = boost::math::quadrature::gauss_kronrod<double, 31>;
  const double alpha = (n - k) / 2.0;
  double worst = 0;  // largest error estimate seen at any level, scaled by its box

  // Integral over t_level..t_{k-1} with t_0..t_{level-1} fixed, sum of their squares `used`.
  std::function<double(int, double)> level = [&](int i, double used) -> double {
    const double upper = std::abs(coords[static_cast<std::size_t>(i)]);
    auto f = [&](double t) {
      const double rest = used + t * t;
      if (i + 1 == k) return std::pow(std::max(0.0, 1 - rest), alpha);
      return level(i + 1, rest);
    };
    double err = 0;
    const double v = upper == 0 ? 0.0 : Gk::integrate(f, 0.0, upper, 20, 1e-12, &err);
    worst = std::max(worst, err);
    return v;
  };
  double value = level(0, 0.0);
  if (worst > kQuadratureTarget) throw ToleranceNotReached("a1k_pizza_quadrature: error estimate " + std::to_string(worst));
  for (double x : coords)
    if (x < 0) value = -value;
  return std::ldexp(unit_ball_volume(n - k), k) * value;
}

SeriesValue sum_over_2structures(const ArrangementSpec& spec, const BallSpec& ball, int degree_cap) {
  const auto point = unit_point(spec, ball);
  const auto all = structures(spec, point);
  const int n = spec.dimension();
  const int k = spec.two_structure_rank();
  const int M = max_order(k, degree_cap);
  const double scale =
      std::ldexp(unit_ball_volume(n - k), k) * std::pow(2.0, -k / 2.0) * std::pow(ball.radius, n);
  SeriesValue out{0, scale * std::pow(2.0, k / 2.0) * structures_tail(spec, all, M), degree_cap};
  if (M < 0) return out;

  std::vector<Rational> every;
  for (const Structure& s : all) every.insert(every.end(), s.pairings.begin(), s.pairings.end());
  const mpz_class den = common_denominator(every);
  const Weights w = make_weights(M);
  std::vector<mpz_class> total(static_cast<std::size_t>(M) + 1, 0);
  for (const Structure& s : all) {
    const auto p = product_coeffs(scaled_numerators(s.pairings, den), w, M);
    for (std::size_t m = 0; m < p.size(); ++m) {
      if (s.sign > 0)
        total[m] += p[m];
      else
        total[m] -= p[m];
    }
  }
  out.value = scale * combine(n, k, total, w, den, 2).to_double();
  return out;
}

int degree_cap_for_tail(const ArrangementSpec& spec, const BallSpec& ball, double tail, int max_cap) {
  const auto all = structures(spec, unit_point(spec, ball));
  const int n = spec.dimension();
  const int k = spec.two_structure_rank();
  const double scale = std::ldexp(unit_ball_volume(n - k), k) * std::pow(ball.radius, n);
  for (int cap = k; cap <= max_cap; cap += 2)
    if (scale * structures_tail(spec, all, max_order(k, cap)) < tail) return cap;
  throw ToleranceNotReached("no degree cap up to " + std::to_string(max_cap) + " reaches tail " +
                            std::to_string(tail));
}

std::vector<std::vector<double>> random_centers(const ArrangementSpec& spec, int count, double max_norm,
                                                std::uint64_t seed, double min_margin) {
  if (count < 0) throw Error("random_centers: negative count");
  const auto roots = numeric_roots(spec);
  BallSpec ball{std::vector<double>(static_cast<std::size_t>(spec.ambient_dim), 0.0), max_norm};
  std::mt19937_64 rng(splitmix64(seed));
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unif;
  std::vector<std::vector<double>> out;
  std::vector<double> x(ball.center.size());
  while (static_cast<int>(out.size()) < count) {
    sample_ball(spec, ball, rng, gauss, unif, x);
    bool clear = true;
    for (const auto& root : roots) {
      double p = 0;
      for (std::size_t i = 0; i < x.size(); ++i) p += root[i] * x[i];
      if (std::abs(p) < min_margin) clear = false;
    }
    if (clear) out.push_back(x);
  }
  return out;
}

}  // namespace pizza
