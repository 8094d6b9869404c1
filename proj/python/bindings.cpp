#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "hooklab/cli.hpp"
#include "hooklab/functional.hpp"
#include "hooklab/numbers.hpp"
#include "hooklab/series_lab.hpp"
#include "hooklab/symfun.hpp"

namespace py = pybind11;
using namespace hooklab;

namespace {

// Rationals cross the boundary as fractions.Fraction, built from their text form.
py::object to_py(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(to_string(q));
}

py::int_ to_py(const Integer& z) { return py::int_(py::str(to_string(z))); }

Rational from_py(const py::handle& obj) { return parse_rational(py::str(obj).cast<std::string>()); }

py::list to_py(const Poly& p) {
  py::list out;
  for (const auto& c : p.coefficients()) out.append(to_py(c));
  return out;
}

std::vector<int> parts_of(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

std::vector<long> integer_values(const Alphabet& a) {
  std::vector<long> out;
  for (const auto& q : a.values()) out.push_back(q.get_num().get_si());
  return out;
}

FunctionalSpec make_spec(const std::string& expr, const std::string& alphabets) {
  FunctionalSpec spec{parse_symexpr(expr), parse_binding(alphabets)};
  spec.validate();
  return spec;
}

py::dict report_to_py(const FitReport& r) {
  py::dict d;
  d["polynomial"] = to_py(r.polynomial);
  d["degree"] = r.polynomial.degree();
  d["samples"] = py::make_tuple(r.first_sample, r.last_sample);
  d["verified"] = r.verified;
  d["degree_tried"] = r.degree_tried;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact partition sums over hook lengths, contents and shifted parts";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::out_of_range& e) {
      PyErr_SetString(PyExc_OverflowError, e.what());
    } catch (const std::length_error& e) {
      PyErr_SetString(PyExc_OverflowError, e.what());
    } catch (const std::domain_error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("partitions", [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& p : enumerate_partitions(n)) out.push_back(parts_of(p));
    return out;
  }, py::arg("n"));
  m.def("hooks", [](const std::vector<int>& parts) { return integer_values(hooks(Partition(parts))); });
  m.def("contents", [](const std::vector<int>& parts) { return integer_values(contents(Partition(parts))); });
  m.def("syt_count", [](const std::vector<int>& parts) { return to_py(syt_count(Partition(parts))); });
  m.def("multiset_lemma_check", [](const std::vector<int>& parts) { return multiset_lemma_check(Partition(parts)); });

  m.def("central_factorial_T", [](unsigned k, unsigned j) { return to_py(central_factorial_T(k, j)); });
  m.def("signless_stirling", [](unsigned n, unsigned k) { return to_py(signless_stirling(n, k)); });
  m.def("lagrange", [](const std::vector<std::pair<py::object, py::object>>& points) {
    std::vector<std::pair<Rational, Rational>> pts;
    for (const auto& [x, y] : points) pts.emplace_back(from_py(x), from_py(y));
    return to_py(lagrange_interpolate(pts));
  }, py::arg("points"));

  m.def("functional_value", [](const std::string& expr, const std::string& alphabets, int n, unsigned jobs) {
    const auto spec = make_spec(expr, alphabets);
    Rational v;
    {
      py::gil_scoped_release release;
      v = functional_value(spec, n, jobs);
    }
    return to_py(v);
  }, py::arg("expr"), py::arg("alphabets"), py::arg("n"), py::arg("jobs") = 1);

  m.def("fit", [](const std::string& expr, const std::string& alphabets, std::optional<int> degree_hint, unsigned jobs) {
    const auto spec = make_spec(expr, alphabets);
    FitOptions options;
    options.degree_hint = degree_hint;
    options.jobs = jobs;
    FitReport r;
    {
      py::gil_scoped_release release;
      r = fit_functional(spec, options);
    }
    return report_to_py(r);
  }, py::arg("expr"), py::arg("alphabets"), py::arg("degree_hint") = py::none(), py::arg("jobs") = 1);

  m.def("tables", [](const std::string& which) {
    std::vector<TableEntry> table;
    if (which == "nmu") table = n_mu_table();
    else if (which == "phimu") table = phi_e_mu_table();
    else throw std::invalid_argument("expected 'nmu' or 'phimu'");
    py::list out;
    for (const auto& e : table) {
      py::dict d = report_to_py(e.fit);
      d["mu"] = parts_of(e.mu);
      d["matches_reference"] = e.matches();
      out.append(d);
    }
    return out;
  }, py::arg("which"));

  m.def("mn_character", [](const std::vector<int>& lambda, const std::vector<int>& mu) {
    return to_py(mn_character(Partition(lambda), Partition(mu)));
  });
  m.def("z_mu", [](const std::vector<int>& mu) { return to_py(z_mu(Partition(mu))); });
  m.def("a_poly", [](const std::vector<int>& lambda) { return to_py(a_poly(Partition(lambda))); });
  m.def("phi_p", [](const std::vector<int>& mu) { return to_py(phi_p(Partition(mu))); });
  m.def("phi_p_character_sum", [](const std::vector<int>& mu) { return to_py(phi_p_character_sum(Partition(mu))); });

  m.def("conid", [](const std::vector<int>& mu, int n) { return to_py(conid_bruteforce(Partition(mu), n)); });
  m.def("okada_check", &okada_check, py::arg("r"), py::arg("n"), py::arg("jobs") = 1);
  m.def("okada_power_check", &okada_power_check, py::arg("k"), py::arg("n"), py::arg("jobs") = 1);
  m.def("panova_check", &panova_check, py::arg("r"), py::arg("n"), py::arg("jobs") = 1);
  m.def("hook_power_check", &hook_power_check, py::arg("k"), py::arg("n"), py::arg("jobs") = 1);

  m.def("no_check", [](int N) { return no_lhs(N) == no_rhs(N); }, py::arg("N"));
  m.def("no_lhs", [](int N) {
    py::list out;
    for (const auto& c : no_lhs(N).coefficients()) out.append(to_py(c));
    return out;
  }, py::arg("N"));
  m.def("cno_check", [](int N) { return cno_check(N); }, py::arg("N"));
  m.def("two_param_check", [](int N, const std::vector<std::pair<py::object, py::object>>& grid) {
    std::vector<GridPoint> points;
    for (const auto& [t, v] : grid) points.push_back({from_py(t), from_py(v)});
    return two_param_check(N, points);
  }, py::arg("N"), py::arg("grid"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release release;
      code = cli::run(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
