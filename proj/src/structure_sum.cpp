// Matching-sum engine behind z_poly and y_poly.
//
// T_d(x_1..x_k) = c_m m! sum_{|r| = m} prod_i x_i^{2r_i+1} / (r_i! (2r_i+1)),
// so with W(r) = L / (r! (2r+1)) for a common multiple L the contribution of
// a matching factors over its edges:
//
//   c_m m! L^{-k} sum_{s_1+...+s_E = m} prod_e E_{s_e}(a_{i_e}, a_{j_e})
//
// where E_s(x, y) = W(s) (x-y)^{2s+1} for type A edges and
// E_s(x, y) = sum_{r+r'=s} W(r) W(r') (x-y)^{2r+1} (x+y)^{2r'+1} for type D
// edges. The bracketed "slot polynomial" has integer coefficients and is the
// same for every matching up to relabelling its 2E slots by the edge
// endpoints, so it is expanded once and then folded into an integer
// accumulator per matching.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <iostream>
#include <limits>
#include <mutex>
#include <vector>

#include "pizza/error.hpp"
#include "pizza/monomial_map.hpp"
#include "pizza/parallel.hpp"
#include "pizza/taylor.hpp"

namespace pizza::detail {

namespace {

__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

struct EdgeTerm {
  int x_exp;  // exponent on the smaller endpoint
  int y_exp;
  mpz_class coeff;
};

using EdgePoly = std::vector<EdgeTerm>;

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

mpz_class binomial(int n, int k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

// Coefficients of (x - y)^a (sign = -1) or (x + y)^a (sign = +1), indexed by
// the exponent of x.
std::vector<mpz_class> binomial_row(int a, int sign) {
  std::vector<mpz_class> row(static_cast<std::size_t>(a) + 1);
  for (int p = 0; p <= a; ++p) {
    row[static_cast<std::size_t>(p)] = binomial(a, p);
    if (sign < 0 && (a - p) % 2 == 1) row[static_cast<std::size_t>(p)] = -row[static_cast<std::size_t>(p)];
  }
  return row;
}

struct Weights {
  mpz_class common;               // L
  std::vector<mpz_class> values;  // W(0..m)
};

Weights make_weights(int m) {
  Weights w;
  w.common = 1;
  for (int r = 0; r <= m; ++r) {
    const mpz_class den = factorial(r) * (2 * r + 1);
    mpz_lcm(w.common.get_mpz_t(), w.common.get_mpz_t(), den.get_mpz_t());
  }
  for (int r = 0; r <= m; ++r) w.values.push_back(w.common / (factorial(r) * (2 * r + 1)));
  return w;
}

EdgePoly edge_poly(Family kind, int s, const Weights& w) {
  EdgePoly out;
  if (kind == Family::A) {
    const int a = 2 * s + 1;
    const auto row = binomial_row(a, -1);
    for (int p = 0; p <= a; ++p)
      out.push_back({p, a - p, w.values[static_cast<std::size_t>(s)] * row[static_cast<std::size_t>(p)]});
    return out;
  }
  const int deg = 2 * s + 2;
  std::vector<mpz_class> acc(static_cast<std::size_t>(deg) + 1, 0);
  for (int r = 0; r <= s; ++r) {
    const int a = 2 * r + 1;
    const int b = 2 * (s - r) + 1;
    const auto minus = binomial_row(a, -1);
    const auto plus = binomial_row(b, +1);
    const mpz_class weight = w.values[static_cast<std::size_t>(r)] * w.values[static_cast<std::size_t>(s - r)];
    for (int p = 0; p <= a; ++p)
      for (int q = 0; q <= b; ++q)
        acc[static_cast<std::size_t>(p + q)] += weight * minus[static_cast<std::size_t>(p)] * plus[static_cast<std::size_t>(q)];
  }
  for (int p = 0; p <= deg; ++p)
    if (acc[static_cast<std::size_t>(p)] != 0) out.push_back({p, deg - p, acc[static_cast<std::size_t>(p)]});
  return out;
}

int edge_count(Family kind, int k) { return kind == Family::A ? k : k / 2; }

void check_shape(Family kind, int ground, int k) {
  if (kind != Family::A && kind != Family::D) throw UnsupportedFamily("structure_sum: edge kind must be A or D");
  const int edges = ground / 2;
  if (edge_count(kind, k) != edges || (kind == Family::D && k % 2 != 0))
    throw Error("structure_sum: k = " + std::to_string(k) + " does not match " + std::to_string(edges) +
                " edges");
}

// Slot polynomial: 2E exponents per term, flattened.
struct SlotPoly {
  std::vector<std::uint8_t> exps;
  std::vector<mpz_class> coeffs;
  int slots = 0;
};

SlotPoly build_slot_poly(const std::vector<EdgePoly>& edge_polys, int edges, int m) {
  SlotPoly f;
  f.slots = 2 * edges;
  std::vector<std::uint8_t> current(static_cast<std::size_t>(f.slots), 0);
  // Depth-first over (s_e, term_e) choices with running coefficient products.
  std::vector<mpz_class> partial(static_cast<std::size_t>(edges) + 1);
  partial[0] = 1;
  auto rec = [&](auto&& self, int e, int remaining) -> void {
    if (e == edges - 1) {
      for (const EdgeTerm& t : edge_polys[static_cast<std::size_t>(remaining)]) {
        current[static_cast<std::size_t>(2 * e)] = static_cast<std::uint8_t>(t.x_exp);
        current[static_cast<std::size_t>(2 * e + 1)] = static_cast<std::uint8_t>(t.y_exp);
        f.exps.insert(f.exps.end(), current.begin(), current.end());
        f.coeffs.push_back(partial[static_cast<std::size_t>(e)] * t.coeff);
      }
      return;
    }
    for (int s = 0; s <= remaining; ++s) {
      for (const EdgeTerm& t : edge_polys[static_cast<std::size_t>(s)]) {
        current[static_cast<std::size_t>(2 * e)] = static_cast<std::uint8_t>(t.x_exp);
        current[static_cast<std::size_t>(2 * e + 1)] = static_cast<std::uint8_t>(t.y_exp);
        partial[static_cast<std::size_t>(e + 1)] = partial[static_cast<std::size_t>(e)] * t.coeff;
        self(self, e + 1, remaining - s);
      }
    }
  };
  if (edges == 0) {
    if (m == 0) f.coeffs.push_back(1);
    return f;
  }
  rec(rec, 0, m);
  return f;
}

std::uint64_t edge_poly_size(Family kind, int s) {
  return kind == Family::A ? static_cast<std::uint64_t>(2 * s + 2) : static_cast<std::uint64_t>(2 * s + 3);
}

Int128 to_int128(const mpz_class& z) {
  mpz_class mag = abs(z);
  const mpz_class low_mask = (mpz_class(1) << 64) - 1;
  const mpz_class lo = mag & low_mask;
  const mpz_class hi = mag >> 64;
  auto to_u64 = [](const mpz_class& v) {
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
    return out;
  };
  const auto u = (static_cast<UInt128>(to_u64(hi)) << 64) | to_u64(lo);
  const auto r = static_cast<Int128>(u);
  return sgn(z) < 0 ? -r : r;
}

mpz_class from_u64(std::uint64_t v) {
  mpz_class out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

mpz_class from_int128(Int128 v) {
  const bool negative = v < 0;
  UInt128 u = negative ? static_cast<UInt128>(-(v + 1)) + 1 : static_cast<UInt128>(v);
  mpz_class out = from_u64(static_cast<std::uint64_t>(u >> 64));
  out <<= 64;
  out += from_u64(static_cast<std::uint64_t>(u));
  return negative ? mpz_class(-out) : out;
}

// Residues modulo K primes in (2^61, 2^62); sums of two residues fit in 64 bits.
template <std::size_t K>
struct Residues {
  std::array<std::uint64_t, K> r{};
};

struct Moduli {
  std::vector<std::uint64_t> primes;
  mpz_class product;
};

Moduli make_moduli(std::size_t count) {
  Moduli mods;
  mods.product = 1;
  mpz_class p = mpz_class(1) << 61;
  for (std::size_t i = 0; i < count; ++i) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    mods.primes.push_back(p.get_ui());
    mods.product *= p;
  }
  return mods;
}

template <std::size_t K>
struct ModContext {
  std::array<std::uint64_t, K> p{};
};

template <std::size_t K>
inline void add_mod(Residues<K>& acc, const Residues<K>& c, const ModContext<K>& ctx) {
  for (std::size_t i = 0; i < K; ++i) {
    std::uint64_t v = acc.r[i] + c.r[i];
    acc.r[i] = v >= ctx.p[i] ? v - ctx.p[i] : v;
  }
}

template <std::size_t K>
inline void sub_mod(Residues<K>& acc, const Residues<K>& c, const ModContext<K>& ctx) {
  for (std::size_t i = 0; i < K; ++i) acc.r[i] = acc.r[i] >= c.r[i] ? acc.r[i] - c.r[i] : acc.r[i] + ctx.p[i] - c.r[i];
}

// Chinese remaindering into the symmetric range (-P/2, P/2].
template <std::size_t K>
mpz_class reconstruct(const Residues<K>& v, const Moduli& mods) {
  mpz_class x = 0;
  for (std::size_t i = 0; i < K; ++i) {
    const mpz_class p(static_cast<unsigned long>(mods.primes[i]));
    const mpz_class rest = mods.product / p;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), mpz_class(rest % p).get_mpz_t(), p.get_mpz_t());
    x += from_u64(v.r[i]) * ((inv * rest) % mods.product);
  }
  x %= mods.product;
  if (2 * x > mods.product) x -= mods.product;
  return x;
}

class Progress {
 public:
  Progress(bool enabled, std::uint64_t total) : enabled_(enabled), total_(total) {
    step_ = std::max<std::uint64_t>(1, total / 50);
  }
  void tick() {
    const std::uint64_t done = ++done_;
    if (!enabled_ || (done % step_ != 0 && done != total_)) return;
    std::lock_guard lock(mutex_);
    std::cerr << "\r[pizza] matchings " << done << "/" << total_ << std::flush;
    if (done == total_) std::cerr << "\n";
  }

 private:
  bool enabled_;
  std::uint64_t total_;
  std::uint64_t step_;
  std::atomic<std::uint64_t> done_{0};
  std::mutex mutex_;
};

// Folds every matching's relabelled copy of f into per-worker maps. `Ops`
// supplies add(acc, c, sign), merge(into, from), is_zero(v) and value(v).
// Every worker keeps its own map, which can end up holding every monomial of
// degree d. Allow as many workers as half the free memory can hold, counting
// the finished polynomial at roughly 100 bytes a term.
int memory_worker_cap(std::size_t arity, int d, std::size_t slot_bytes) {
  double keys = 1;
  for (std::size_t i = 1; i < arity; ++i) keys = keys * static_cast<double>(d + static_cast<int>(i)) / static_cast<double>(i);
  const double per_map = 4 * keys * static_cast<double>(slot_bytes);
  const double budget = 0.5 * static_cast<double>(available_memory_bytes()) - 100 * keys;
  return static_cast<int>(std::clamp(budget / per_map, 1.0, 1024.0));
}

template <class Acc, class Ops>
Poly accumulate(const SlotPoly& f, const std::vector<Acc>& coeffs, const Ops& ops, int ground, std::size_t arity,
                int d, const Rational& scale, const ExpansionOptions& opts) {
  const int branches = matching_branch_count(ground);
  const int threads = std::max(1, std::min({resolve_threads(opts.threads), branches,
                                            memory_worker_cap(arity, d, MonomialMap<Acc>::slot_bytes())}));
  const std::size_t term_count = coeffs.size();
  std::vector<MonomialMap<Acc>> maps;
  maps.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) maps.emplace_back(term_count);
  Progress progress(opts.progress, matching_count(ground));

  parallel_tasks(static_cast<std::size_t>(branches), threads, [&](std::size_t branch, std::size_t worker) {
    MonomialMap<Acc>& acc = maps[worker];
    enumerate_matching_branch(ground, static_cast<int>(branch), [&](const Matching& m) {
      const int sign = matching_sign(m);
      std::array<std::size_t, 2 * kMaxArity> slot_var{};
      for (std::size_t e = 0; e < m.edges.size(); ++e) {
        slot_var[2 * e] = static_cast<std::size_t>(m.edges[e].first - 1);
        slot_var[2 * e + 1] = static_cast<std::size_t>(m.edges[e].second - 1);
      }
      const auto slots = static_cast<std::size_t>(f.slots);
      std::array<std::uint8_t, kMaxArity> raw{};
      for (std::size_t t = 0; t < term_count; ++t) {
        const std::uint8_t* e = f.exps.data() + t * slots;
        for (std::size_t s = 0; s < slots; ++s) raw[slot_var[s]] = e[s];
        ops.add(acc[Monomial::from_raw(raw, d)], coeffs[t], sign);
      }
      progress.tick();
    });
  });

  // Exact arithmetic, so the merge order does not affect the result.
  for (std::size_t w = 1; w < maps.size(); ++w) {
    maps[w].for_each([&](const Monomial& key, Acc& v) { ops.merge(maps[0][key], v); });
    maps[w] = MonomialMap<Acc>();
  }

  std::vector<Term> terms;
  maps[0].for_each([&](const Monomial& key, const Acc& v) {
    if (!ops.is_zero(v)) terms.push_back({key, Rational(ops.value(v)) * scale});
  });
  return Poly::from_terms(arity, std::move(terms));
}

struct Int128Ops {
  void add(Int128& acc, const Int128& c, int sign) const { acc += sign > 0 ? c : -c; }
  void merge(Int128& into, const Int128& from) const { into += from; }
  bool is_zero(const Int128& v) const { return v == 0; }
  mpz_class value(const Int128& v) const { return from_int128(v); }
};

template <std::size_t K>
struct ModOps {
  ModContext<K> ctx;
  const Moduli* mods;
  void add(Residues<K>& acc, const Residues<K>& c, int sign) const {
    if (sign > 0)
      add_mod(acc, c, ctx);
    else
      sub_mod(acc, c, ctx);
  }
  void merge(Residues<K>& into, const Residues<K>& from) const { add_mod(into, from, ctx); }
  bool is_zero(const Residues<K>& v) const {
    for (std::uint64_t x : v.r)
      if (x != 0) return false;
    return true;
  }
  mpz_class value(const Residues<K>& v) const { return reconstruct(v, *mods); }
};

template <std::size_t K>
Poly accumulate_modular(const SlotPoly& f, int ground, std::size_t arity, int d, const Rational& scale,
                        const ExpansionOptions& opts) {
  const Moduli mods = make_moduli(K);
  ModOps<K> ops{{}, &mods};
  for (std::size_t i = 0; i < K; ++i) ops.ctx.p[i] = mods.primes[i];
  std::vector<Residues<K>> coeffs(f.coeffs.size());
  for (std::size_t t = 0; t < f.coeffs.size(); ++t)
    for (std::size_t i = 0; i < K; ++i) {
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), f.coeffs[t].get_mpz_t(), static_cast<unsigned long>(mods.primes[i]));
      coeffs[t].r[i] = r.get_ui();
    }
  return accumulate(f, coeffs, ops, ground, arity, d, scale, opts);
}

}  // namespace

std::uint64_t structure_sum_estimate(Family edge_kind, int ground, int k, int d) {
  check_shape(edge_kind, ground, k);
  if (d < k || (d - k) % 2 != 0) return 0;
  const int m = (d - k) / 2;
  const int edges = ground / 2;
  // count[s] = number of slot terms over the edges processed so far, with
  // their s-values summing to s.
  std::vector<long double> count(static_cast<std::size_t>(m) + 1, 0);
  count[0] = 1;
  for (int e = 0; e < edges; ++e) {
    std::vector<long double> next(count.size(), 0);
    for (int s = 0; s <= m; ++s)
      for (int t = 0; s + t <= m; ++t)
        next[static_cast<std::size_t>(s + t)] += count[static_cast<std::size_t>(s)] * edge_poly_size(edge_kind, t);
    count = std::move(next);
  }
  const long double total = count[static_cast<std::size_t>(m)];
  if (total > static_cast<long double>(std::numeric_limits<std::uint64_t>::max()))
    return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(total);
}

Poly structure_sum(Family edge_kind, int ground, std::size_t arity, int n, int k, int d,
                   const ExpansionOptions& opts) {
  check_shape(edge_kind, ground, k);
  if (static_cast<std::size_t>(ground) > arity) throw ArityMismatch("structure_sum: ground set exceeds arity");
  if (d < k || (d - k) % 2 != 0) return Poly(arity);
  if (d > kMaxDegree)
    throw ResourceLimit("degree " + std::to_string(d) + " exceeds the cap of " + std::to_string(kMaxDegree));
  const std::uint64_t estimate = structure_sum_estimate(edge_kind, ground, k, d);
  if (estimate > kMaxStructureTerms)
    throw ResourceLimit("per-matching expansion of about " + std::to_string(estimate) +
                        " terms exceeds the cap of " + std::to_string(kMaxStructureTerms));

  const int m = (d - k) / 2;
  const int edges = ground / 2;
  const Weights weights = make_weights(m);
  std::vector<EdgePoly> edge_polys;
  for (int s = 0; s <= m; ++s) edge_polys.push_back(edge_poly(edge_kind, s, weights));
  const SlotPoly f = build_slot_poly(edge_polys, edges, m);

  mpz_class common_power;
  mpz_pow_ui(common_power.get_mpz_t(), weights.common.get_mpz_t(), static_cast<unsigned long>(k));
  const Rational scale = c_coefficient(n, k, m) * Rational(factorial(m)) / Rational(common_power);

  // Exact integer accumulation: 128-bit when the worst case fits, otherwise
  // residues modulo enough primes to recover every coefficient with |c| <= bound.
  mpz_class max_coeff = 0;
  for (const mpz_class& c : f.coeffs)
    if (abs(c) > max_coeff) max_coeff = abs(c);
  const mpz_class bound = max_coeff * static_cast<unsigned long>(matching_count(ground));
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  if (bits <= 125 && !opts.force_residues) {
    std::vector<Int128> small;
    small.reserve(f.coeffs.size());
    for (const mpz_class& c : f.coeffs) small.push_back(to_int128(c));
    return accumulate(f, small, Int128Ops{}, ground, arity, d, scale, opts);
  }
  // Each prime exceeds 2^61; the product must exceed 2 * bound.
  switch (std::max<std::size_t>(3, (bits + 1) / 61 + 1)) {
    case 3: return accumulate_modular<3>(f, ground, arity, d, scale, opts);
    case 4: return accumulate_modular<4>(f, ground, arity, d, scale, opts);
    case 5: return accumulate_modular<5>(f, ground, arity, d, scale, opts);
    case 6: return accumulate_modular<6>(f, ground, arity, d, scale, opts);
    case 7: return accumulate_modular<7>(f, ground, arity, d, scale, opts);
    case 8: return accumulate_modular<8>(f, ground, arity, d, scale, opts);
    default:
      throw ResourceLimit("structure_sum: coefficient bound of " + std::to_string(bits) + " bits is too large");
  }
}

}  // namespace pizza::detail
