// pizza: command-line front end for expansions, tables, oracles and checks.
//
// Exit codes: 0 success or consistent, 1 verification failure, 2 usage error
// or refused request, 3 conjecture violation in explore mode.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "pizza/conjectures.hpp"
#include "pizza/error.hpp"
#include "pizza/matchings.hpp"
#include "pizza/oracle.hpp"
#include "pizza/report.hpp"
#include "pizza/tables.hpp"
#include "pizza/taylor.hpp"

namespace {

using namespace pizza;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kExploreViolation = 3;

struct Common {
  int threads = 0;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out;
  bool progress = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--threads", c.threads, "Worker threads (0 = PIZZA_THREADS or all cores)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--out", c.out, "Write the report to this file instead of stdout");
  cmd->add_flag("--progress", c.progress, "Report matchings processed on stderr");
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw Error("cannot write " + c.out);
  f << text;
}

std::vector<int> parse_ints(const std::string& list) {
  std::vector<int> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw Error("not an integer: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw Error("empty integer list");
  return out;
}

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw Error("not a number: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw Error("empty center");
  return out;
}

int verdict_exit(const ConjectureReport& r, CheckMode mode) {
  if (r.verdict == Verdict::inconclusive) std::cerr << "[pizza] verdict inconclusive\n";
  if (r.verdict != Verdict::violated) return kOk;
  return mode == CheckMode::test ? kFailed : kExploreViolation;
}

CheckMode resolve_mode(const std::string& mode, int dimension) {
  if (mode == "test") return CheckMode::test;
  if (mode == "explore") return CheckMode::explore;
  return default_mode(dimension);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Taylor expansions and sign checks for pizza quantities of Coxeter arrangements"};
  app.require_subcommand(1);
  const bool tty = isatty(fileno(stderr)) != 0;

  // tables
  Common tc;
  std::string which = "all";
  bool extended = false;
  auto* tables = app.add_subcommand("tables", "Recompute the leading-coefficient tables and compare");
  add_common(tables, tc);
  tables->add_option("--which", which, "A, D or all")->check(CLI::IsMember({"A", "D", "all"}));
  tables->add_flag("--extended", extended, "Include the D_7 rows");

  // expand
  Common ec;
  std::string expand_spec;
  std::string degrees;
  auto* expand = app.add_subcommand("expand", "Z_d / J for chosen degrees");
  add_common(expand, ec);
  expand->add_option("--spec", expand_spec, "Arrangement, e.g. A:6 or D:5")->required();
  expand->add_option("--degrees", degrees, "Comma-separated degrees")->required();

  // matchings
  Common mc;
  int ground = 0;
  bool count_only = false;
  auto* matchings = app.add_subcommand("matchings", "List maximal matchings with their signs");
  add_common(matchings, mc);
  matchings->add_option("--rank", ground, "Ground set size r")->required()->check(CLI::Range(1, 15));
  matchings->add_flag("--count", count_only, "Only print the count and the sign sum");

  // oracle
  Common oc;
  std::string oracle_spec;
  std::string center_text;
  double radius = 1.0;
  std::string method = "mc";
  std::uint64_t samples = 1'000'000;
  int degree_cap = -1;
  auto* oracle = app.add_subcommand("oracle", "Numeric value of the pizza quantity");
  add_common(oracle, oc);
  oracle->add_option("--spec", oracle_spec, "Arrangement, e.g. A:3, D:3, I2:5, A1k:2@3")->required();
  oracle->add_option("--center", center_text, "Comma-separated ambient coordinates")->required();
  oracle->add_option("--radius", radius, "Ball radius")->check(CLI::PositiveNumber);
  oracle->add_option("--method", method, "mc, series (A1k), quadrature (A1k) or sum2s (A, D)")
      ->check(CLI::IsMember({"mc", "series", "quadrature", "sum2s"}));
  oracle->add_option("--samples", samples, "Monte Carlo samples")->check(CLI::PositiveNumber);
  oracle->add_option("--seed", oc.seed, "Monte Carlo seed");
  oracle->add_option("--degree-cap", degree_cap, "Series truncation degree (default: tail below 1e-10)");

  // check
  auto* check = app.add_subcommand("check", "Conjecture and structure checks");
  check->require_subcommand(1);
  Common cc;
  std::string mode = "auto";
  auto add_check_common = [&](CLI::App* cmd) {
    add_common(cmd, cc);
    cmd->add_option("--mode", mode, "test, explore or auto (by dimension)")
        ->check(CLI::IsMember({"test", "explore", "auto"}));
  };
  std::string sign_spec;
  std::string centers_text = "auto:10";
  double max_norm = 0.4;
  std::uint64_t sign_samples = 0;
  int max_cap = 200;
  auto* sign = check->add_subcommand("sign", "Sign of the pizza quantity at chosen centers");
  add_check_common(sign);
  sign->add_option("--spec", sign_spec, "A:n (n = 2, 3 mod 4) or D:n (n odd)")->required();
  sign->add_option("--centers", centers_text, "auto:N, or points separated by ';'");
  sign->add_option("--max-norm", max_norm, "Norm bound for auto centers")->check(CLI::Range(0.0, 0.99));
  sign->add_option("--samples", sign_samples, "Monte Carlo cross-check samples per center (0 = none)");
  sign->add_option("--seed", cc.seed, "Seed for auto centers and Monte Carlo");
  sign->add_option("--degree-cap", max_cap, "Largest series degree tried");

  int rank = 0;
  std::string check_degrees;
  int max_degree = 0;
  auto* lemma = check->add_subcommand("lemma51", "Monomial audit of Z_d for D_n");
  add_check_common(lemma);
  lemma->add_option("--rank", rank, "Odd n")->required();
  lemma->add_option("--degrees", check_degrees, "Comma-separated degrees")->required();

  auto* yneg = check->add_subcommand("y-neg", "Negativity of the staircase coefficients of Y");
  add_check_common(yneg);
  yneg->add_option("--rank", rank, "Odd n")->required();
  yneg->add_option("--max-degree", max_degree, "Largest degree")->required();

  auto* schur = check->add_subcommand("schur", "Rebuild Z_d for D_n from Schur functions");
  add_check_common(schur);
  schur->add_option("--rank", rank, "Odd n")->required();
  schur->add_option("--degrees", check_degrees, "Comma-separated degrees")->required();

  auto* tpos = check->add_subcommand("t-pos", "Positivity of -T_d/(a1^2-a2^2) in u, v");
  add_check_common(tpos);
  tpos->add_option("--max-degree", max_degree, "Largest even degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*tables) {
      ExpansionOptions opts{tc.threads, tc.progress || tty};
      const auto rows = compute_tables(parse_table_scope(which), extended, opts);
      emit(tc, render_tables(rows, parse_format(tc.format)));
      int status = kOk;
      for (const TableRow& r : rows)
        if (!r.match) {
          std::cerr << "mismatch: " << r.golden.spec << " d=" << r.golden.degree << " computed "
                    << describe_quotient(r.quotient, ArrangementSpec::parse(r.golden.spec)) << ", expected "
                    << r.golden.coeff.to_string() << (r.golden.times_p2 ? "*p2" : "") << "\n";
          status = kFailed;
        }
      return status;
    }
    if (*expand) {
      const ArrangementSpec spec = ArrangementSpec::parse(expand_spec);
      const auto ds = parse_ints(degrees);
      for (int d : ds) {
        const auto estimate = structure_term_estimate(spec, d);
        std::cerr << "[pizza] " << spec.to_string() << " d=" << d << ": " << matching_count(spec.matching_ground_size())
                  << " matchings, about " << estimate << " terms each\n";
      }
      ExpansionOptions opts{ec.threads, ec.progress || tty};
      emit(ec, render_expansion(expansion_report(spec, ds, opts), parse_format(ec.format)));
      return kOk;
    }
    if (*matchings) {
      std::string text;
      if (!count_only)
        enumerate_matchings(ground, [&](const Matching& m) { text += m.to_string() + "\n"; });
      text += "count=" + std::to_string(matching_count(ground)) + " sign_sum=" +
              std::to_string(sign_sum(ground, mc.threads)) + "\n";
      emit(mc, text);
      return kOk;
    }
    if (*oracle) {
      const ArrangementSpec spec = ArrangementSpec::parse(oracle_spec);
      const BallSpec ball{parse_point(center_text), radius};
      const Format format = parse_format(oc.format);
      if (method == "mc") {
        emit(oc, render_mc(spec, ball, mc_pizza(spec, ball, samples, oc.seed, oc.threads), format));
        return kOk;
      }
      if (method == "sum2s") {
        const int cap = degree_cap >= 0 ? degree_cap : degree_cap_for_tail(spec, ball, 1e-10);
        emit(oc, render_series(spec, ball, method, sum_over_2structures(spec, ball, cap), format));
        return kOk;
      }
      if (spec.family != Family::A1k) throw UnsupportedFamily("--method " + method + " needs an A1k spec");
      validate_ball(spec, ball);
      const int k = spec.rank;
      const int n = spec.ambient_dim;
      // B(a, R) = R * B(a/R, 1); the roots are the first k coordinate vectors.
      std::vector<double> coords(ball.center.begin(), ball.center.begin() + k);
      for (double& x : coords) x /= radius;
      const double scale = std::pow(radius, n);
      if (method == "quadrature") {
        emit(oc, render_quadrature(spec, ball, scale * a1k_pizza_quadrature(n, k, coords), format));
        return kOk;
      }
      int cap = degree_cap;
      if (cap < 0)
        for (cap = k; a1k_pizza_series(n, k, coords, cap).tail_bound * scale >= 1e-10; cap += 2) {
        }
      SeriesValue v = a1k_pizza_series(n, k, coords, cap);
      v.value *= scale;
      v.tail_bound *= scale;
      emit(oc, render_series(spec, ball, method, v, format));
      return kOk;
    }
    if (*check) {
      const Format format = parse_format(cc.format);
      if (*sign) {
        const ArrangementSpec spec = ArrangementSpec::parse(sign_spec);
        std::vector<std::vector<double>> centers;
        if (centers_text.rfind("auto:", 0) == 0)
          centers = random_centers(spec, std::stoi(centers_text.substr(5)), max_norm, cc.seed);
        else {
          std::stringstream ss(centers_text);
          std::string point;
          while (std::getline(ss, point, ';')) centers.push_back(parse_point(point));
        }
        SignCheckOptions opts{sign_samples, cc.seed, max_cap, cc.threads};
        ConjectureReport r;
        if (spec.family == Family::A)
          r = check_sign_A(spec.rank, centers, opts);
        else if (spec.family == Family::D)
          r = check_sign_D(spec.rank, centers, opts);
        else
          throw UnsupportedFamily("check sign supports A and D");
        emit(cc, render_conjecture(r, format));
        return verdict_exit(r, resolve_mode(mode, spec.dimension()));
      }
      if (*lemma || *schur) {
        int status = kOk;
        std::string text;
        for (int d : parse_ints(check_degrees)) {
          const ConjectureReport r = *lemma ? check_lemma51(rank, d, cc.threads) : schur_reconstruct(rank, d, cc.threads);
          text += render_conjecture(r, format);
          status = std::max(status, verdict_exit(r, resolve_mode(mode, rank)));
        }
        emit(cc, text);
        return status;
      }
      if (*yneg) {
        const ConjectureReport r = check_y_negativity(rank, max_degree, cc.threads);
        emit(cc, render_conjecture(r, format));
        return verdict_exit(r, resolve_mode(mode, rank));
      }
      if (*tpos) {
        const ConjectureReport r = check_t_positivity(max_degree, cc.threads);
        emit(cc, render_conjecture(r, format));
        return verdict_exit(r, resolve_mode(mode, 3));
      }
    }
  } catch (const pizza::Error& e) {
    std::cerr << "pizza: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "pizza: malformed number (" << e.what() << ")\n";
    return kUsage;
  }
  return kUsage;
}
