#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "khr/dyck.hpp"
#include "khr/errors.hpp"
#include "khr/formula.hpp"
#include "khr/serialize.hpp"
#include "khr/sweep.hpp"
#include "khr/verify.hpp"

namespace py = pybind11;
using namespace khr;

namespace {

py::list term_list(const LaurentPoly& p) {
  py::list out;
  for (const auto& [e, c] : p.terms()) out.append(py::make_tuple(e.a, e.q2, e.t2, c));
  return out;
}

Invariant invariant_from_terms(const std::vector<std::tuple<int, int, int, Coeff>>& terms,
                               int one_minus_t_pow) {
  std::vector<LaurentPoly::Term> out;
  for (const auto& [a, q2, t2, c] : terms) out.push_back({{a, q2, t2}, c});
  return Invariant(LaurentPoly::from_terms(std::move(out)), one_minus_t_pow);
}

py::dict stats_dict(const DyckPath& path) {
  const auto s = compute_stats(path);
  auto points = [](const std::vector<Point>& pts) {
    py::list out;
    for (const auto& p : pts) out.append(py::make_tuple(p.x, p.y));
    return out;
  };
  py::dict k;
  for (const auto& [p, v] : s.kvals) k[py::make_tuple(p.x, p.y)] = v;
  py::dict d;
  d["path"] = path.steps();
  d["area"] = s.area;
  d["hplus"] = s.hplus;
  d["outer"] = points(s.outer);
  d["inner"] = points(s.inner);
  d["vstar"] = points(s.vstar);
  d["interior"] = points(s.interior);
  d["opairs"] = s.opairs;
  d["k"] = k;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Superpolynomials of torus knots from Dyck path sums and the sweep recursion";

  static py::exception<Error> base_error(m, "KhrError");
  py::register_exception<LinksUnsupported>(m, "LinksUnsupported", base_error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base_error.ptr());
  py::register_exception<khr::OverflowError>(m, "CoefficientOverflow", base_error.ptr());
  py::register_exception<InternalError>(m, "InternalError", base_error.ptr());

  py::class_<Invariant>(m, "Invariant",
                        "num / (1-t)^one_minus_t_pow with exponents of q and t doubled")
      .def(py::init(&invariant_from_terms), py::arg("terms"), py::arg("one_minus_t_pow") = 0)
      .def_property_readonly("one_minus_t_pow", &Invariant::one_minus_t_pow)
      .def("terms", [](const Invariant& v) { return term_list(v.num()); },
           "Numerator terms as (a, q2, t2, coeff) tuples")
      .def("is_zero", &Invariant::is_zero)
      .def("is_even", [](const Invariant& v) { return is_even_series(v.num()); })
      .def("swap_qt", [](const Invariant& v) { return Invariant(swap_qt(v.num()), v.one_minus_t_pow()); })
      .def("to_text", [](const Invariant& v) { return to_text(v); })
      .def("to_latex", [](const Invariant& v) { return to_latex(v); })
      .def("to_json", [](const Invariant& v) { return to_json(v).dump(); })
      .def_static("from_json", [](const std::string& s) { return invariant_from_json(Json::parse(s)); })
      .def(py::self == py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def("__repr__", [](const Invariant& v) { return "Invariant(" + to_text(v) + ")"; })
      .def("__str__", [](const Invariant& v) { return to_text(v); });

  m.def("invariant_p", [](int mm, int n) { return invariant_p(KnotParams::make(mm, n)); },
        py::arg("m"), py::arg("n"));
  m.def("hhh", [](int mm, int n) { return hhh_direct(KnotParams::make(mm, n)); }, py::arg("m"),
        py::arg("n"));
  m.def("euler_characteristic", &euler_characteristic, py::arg("value"));
  m.def("chi", [](int mm, int n) { return chi(KnotParams::make(mm, n)); }, py::arg("m"),
        py::arg("n"));
  m.def("rational_catalan", &rational_catalan, py::arg("m"), py::arg("n"));

  m.def(
      "paths",
      [](int mm, int n) {
        std::vector<std::string> out;
        for (const auto& p : enumerate_paths(KnotParams::make(mm, n))) out.push_back(p.steps());
        return out;
      },
      py::arg("m"), py::arg("n"));
  m.def(
      "path_stats",
      [](int mm, int n, const std::string& steps) {
        return stats_dict(DyckPath(KnotParams::make(mm, n), steps));
      },
      py::arg("m"), py::arg("n"), py::arg("steps"));

  m.def(
      "sweep",
      [](int mm, int n, const std::string& profile) {
        if (profile != "HHH" && profile != "I")
          throw PreconditionError("profile must be HHH or I, got " + profile);
        const auto r = evaluate(KnotParams::make(mm, n),
                                profile == "I" ? WeightProfile::scalar_i() : WeightProfile::hhh());
        py::list leaves;
        for (const auto& leaf : r.leaves) leaves.append(py::make_tuple(leaf.path.steps(), leaf.value));
        return py::make_tuple(r.total, leaves);
      },
      py::arg("m"), py::arg("n"), py::arg("profile") = "HHH",
      "Total and (path, value) leaves of the sweep recursion");
  m.def(
      "leaf_table_json",
      [](int mm, int n, const std::string& profile) {
        const auto r = evaluate(KnotParams::make(mm, n),
                                profile == "I" ? WeightProfile::scalar_i() : WeightProfile::hhh());
        return leaf_table_json(r).dump();
      },
      py::arg("m"), py::arg("n"), py::arg("profile") = "HHH");

  m.def(
      "verify_json",
      [](int mm, int n, const std::string& suites, bool symmetry_warn) {
        auto opts = VerifyOptions::only(suites);
        opts.symmetry_as_warning = symmetry_warn;
        return to_json(verify(KnotParams::make(mm, n), opts)).dump();
      },
      py::arg("m"), py::arg("n"), py::arg("suites") = "all", py::arg("symmetry_warn") = false);
  m.def(
      "catalan_count", [](int mm, int n) { return catalan_check(KnotParams::make(mm, n)).count; },
      py::arg("m"), py::arg("n"));
}
