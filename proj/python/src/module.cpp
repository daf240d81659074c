#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pizza/conjectures.hpp"
#include "pizza/error.hpp"
#include "pizza/matchings.hpp"
#include "pizza/oracle.hpp"
#include "pizza/report.hpp"
#include "pizza/tables.hpp"
#include "pizza/taylor.hpp"

namespace py = pybind11;
using namespace pizza;

namespace {

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(r.numerator().get_str())), py::int_(py::str(r.denominator().get_str())));
}

Rational from_python(const py::handle& h) {
  return Rational::parse(py::str(h).cast<std::string>());
}

py::list terms_of(const Poly& p) {
  py::list out;
  for (const Term& t : p.terms()) {
    py::tuple exps(p.arity());
    for (std::size_t i = 0; i < p.arity(); ++i) exps[i] = t.monomial[i];
    out.append(py::make_tuple(exps, to_fraction(t.coeff)));
  }
  return out;
}

ExpansionOptions options(int threads) {
  ExpansionOptions o;
  o.threads = threads;
  return o;
}

py::dict report_dict(const ConjectureReport& r) {
  py::dict d;
  d["conjecture_id"] = r.conjecture_id;
  py::dict params;
  for (const auto& [k, v] : r.params) params[py::str(k)] = v;
  d["params"] = params;
  d["verdict"] = verdict_name(r.verdict);
  py::list witnesses;
  for (const Witness& w : r.witnesses) {
    py::dict wd;
    wd["where"] = w.where;
    wd["value"] = w.value;
    wd["note"] = w.note;
    witnesses.append(wd);
  }
  d["witnesses"] = witnesses;
  d["notes"] = r.notes;
  d["runtime_ms"] = r.runtime_ms;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Taylor expansions and numeric oracles for pizza quantities";

  static py::exception<Error> error(m, "PizzaError");
  py::register_exception<ParityViolation>(m, "ParityViolation", error.ptr());
  py::register_exception<ResourceLimit>(m, "ResourceLimit", error.ptr());
  py::register_exception<OnHyperplane>(m, "OnHyperplane", error.ptr());
  py::register_exception<DivergentRegion>(m, "DivergentRegion", error.ptr());
  py::register_exception<NonDivisible>(m, "NonDivisible", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());

  py::class_<ArrangementSpec>(m, "Spec")
      .def(py::init(&ArrangementSpec::parse), py::arg("text"))
      .def_property_readonly("family", [](const ArrangementSpec& s) { return std::string(family_name(s.family)); })
      .def_readonly("rank", &ArrangementSpec::rank)
      .def_readonly("ambient_dim", &ArrangementSpec::ambient_dim)
      .def_readonly("positive_root_count", &ArrangementSpec::positive_root_count)
      .def_property_readonly("dimension", &ArrangementSpec::dimension)
      .def("__eq__", [](const ArrangementSpec& a, const ArrangementSpec& b) { return a == b; })
      .def("__str__", &ArrangementSpec::to_string)
      .def("__repr__", [](const ArrangementSpec& s) { return "Spec('" + s.to_string() + "')"; });

  py::class_<Poly>(m, "Poly")
      .def_property_readonly("arity", &Poly::arity)
      .def_property_readonly("degree", &Poly::degree)
      .def("is_zero", &Poly::is_zero)
      .def("terms", &terms_of, "List of (exponents, Fraction) in descending graded-lex order")
      .def("coefficient",
           [](const Poly& p, const std::vector<int>& exps) { return to_fraction(p.coefficient(Monomial(exps))); })
      .def("evaluate", [](const Poly& p, const std::vector<double>& x) {
        if (x.size() != p.arity()) throw ArityMismatch("point has the wrong number of coordinates");
        return p.evaluate(x);
      })
      .def("scaled", [](const Poly& p, const py::object& c) { return p.scaled(from_python(c)); })
      .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
      .def("__sub__", [](const Poly& a, const Poly& b) { return a - b; })
      .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
      .def("__neg__", [](const Poly& a) { return -a; })
      .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
      .def("__len__", &Poly::size)
      .def("__str__", [](const Poly& p) { return p.to_string(); })
      .def("__repr__", [](const Poly& p) { return "Poly(" + p.to_string() + ")"; });

  m.def("power_sum_p2", &power_sum_p2, py::arg("arity"));
  m.def("z_poly", [](const ArrangementSpec& s, int d, int threads) { return z_poly(s, d, options(threads)); },
        py::arg("spec"), py::arg("d"), py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());
  m.def("quotient", [](const ArrangementSpec& s, int d, int threads) { return quotient(s, d, options(threads)); },
        py::arg("spec"), py::arg("d"), py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());
  m.def("y_poly", [](int n, int d, int threads) { return y_poly(n, d, options(threads)); }, py::arg("n"),
        py::arg("d"), py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());
  m.def("reduce_mod_relation", &reduce_mod_relation, py::arg("poly"), py::arg("spec"));
  m.def("describe_quotient", &describe_quotient, py::arg("poly"), py::arg("spec"));
  m.def("p2_multiple", [](const Poly& p, const ArrangementSpec& s) -> py::object {
    auto c = p2_multiple(p, s);
    return c ? to_fraction(*c) : py::none();
  }, py::arg("poly"), py::arg("spec"));
  m.def("structure_term_estimate", &structure_term_estimate, py::arg("spec"), py::arg("d"));

  m.def("matchings", [](int r) {
    py::list out;
    enumerate_matchings(r, [&](const Matching& mt) {
      out.append(py::make_tuple(mt.edges, mt.isolated ? py::object(py::int_(*mt.isolated)) : py::none(),
                                matching_sign(mt)));
    });
    return out;
  }, py::arg("r"), "Every maximal matching on 1..r as (edges, isolated, sign)");
  m.def("matching_count", &matching_count, py::arg("r"));
  m.def("sign_sum", &sign_sum, py::arg("r"), py::arg("threads") = 1);
  m.def("crossings", [](const std::vector<std::pair<int, int>>& edges, std::optional<int> isolated, int r) {
    const Matching mt{edges, isolated, r};
    if (!mt.is_valid()) throw Error("not a maximal matching on 1.." + std::to_string(r));
    return py::make_tuple(crossings(mt), matching_sign(mt));
  }, py::arg("edges"), py::arg("isolated"), py::arg("r"), "(crossings, sign) of a matching");

  m.def("mc_pizza", [](const ArrangementSpec& s, std::vector<double> center, double radius, std::uint64_t samples,
                       std::uint64_t seed, int threads) {
    McEstimate e;
    {
      py::gil_scoped_release release;
      e = mc_pizza(s, {std::move(center), radius}, samples, seed, threads);
    }
    return py::make_tuple(e.value, e.std_error);
  }, py::arg("spec"), py::arg("center"), py::arg("radius") = 1.0, py::arg("samples") = 1'000'000,
        py::arg("seed") = 1, py::arg("threads") = 0, "(value, std_error)");
  m.def("sum_over_2structures", [](const ArrangementSpec& s, std::vector<double> center, double radius,
                                   int degree_cap) {
    const SeriesValue v = sum_over_2structures(s, {std::move(center), radius}, degree_cap);
    return py::make_tuple(v.value, v.tail_bound);
  }, py::arg("spec"), py::arg("center"), py::arg("radius") = 1.0, py::arg("degree_cap"), "(value, tail_bound)");
  m.def("degree_cap_for_tail", [](const ArrangementSpec& s, std::vector<double> center, double radius,
                                  double tail) { return degree_cap_for_tail(s, {std::move(center), radius}, tail); },
        py::arg("spec"), py::arg("center"), py::arg("radius") = 1.0, py::arg("tail"));
  m.def("a1k_pizza_series", [](int n, int k, const std::vector<double>& x, int cap) {
    const SeriesValue v = a1k_pizza_series(n, k, x, cap);
    return py::make_tuple(v.value, v.tail_bound);
  }, py::arg("n"), py::arg("k"), py::arg("coords"), py::arg("degree_cap"), "(value, tail_bound)");
  m.def("a1k_pizza_quadrature",
        [](int n, int k, const std::vector<double>& x) { return a1k_pizza_quadrature(n, k, x); }, py::arg("n"),
        py::arg("k"), py::arg("coords"));
  m.def("random_centers", &random_centers, py::arg("spec"), py::arg("count"), py::arg("max_norm"),
        py::arg("seed"), py::arg("min_margin") = 1e-3);

  m.def("check_sign", [](const ArrangementSpec& s, const std::vector<std::vector<double>>& centers,
                         std::uint64_t samples, std::uint64_t seed) {
    SignCheckOptions o;
    o.samples = samples;
    o.seed = seed;
    ConjectureReport r;
    {
      py::gil_scoped_release release;
      if (s.family == Family::A)
        r = check_sign_A(s.rank, centers, o);
      else if (s.family == Family::D)
        r = check_sign_D(s.rank, centers, o);
      else
        throw UnsupportedFamily("sign checks are defined for types A and D");
    }
    return report_dict(r);
  }, py::arg("spec"), py::arg("centers"), py::arg("samples") = 0, py::arg("seed") = 1);
  m.def("check_lemma51", [](int n, int d) { return report_dict(check_lemma51(n, d)); }, py::arg("n"), py::arg("d"));
  m.def("check_y_negativity", [](int n, int d_max) { return report_dict(check_y_negativity(n, d_max)); },
        py::arg("n"), py::arg("d_max"));
  m.def("schur_reconstruct", [](int n, int d) { return report_dict(schur_reconstruct(n, d)); }, py::arg("n"),
        py::arg("d"));
  m.def("check_t_positivity", [](int d_max) { return report_dict(check_t_positivity(d_max)); },
        py::arg("d_max"));

  m.def("tables", [](const std::string& scope, bool extended, int threads) {
    std::vector<TableRow> rows;
    {
      py::gil_scoped_release release;
      rows = compute_tables(parse_table_scope(scope), extended, options(threads));
    }
    py::list out;
    for (const TableRow& r : rows) {
      const auto spec = ArrangementSpec::parse(r.golden.spec);
      out.append(py::make_tuple(r.golden.spec, r.golden.degree, describe_quotient(r.quotient, spec), r.match));
    }
    return out;
  }, py::arg("scope") = "all", py::arg("extended") = false, py::arg("threads") = 0,
        "Rows of (spec, degree, quotient, matches_reference)");
}
