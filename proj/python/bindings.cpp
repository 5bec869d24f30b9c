#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "kleinvcy/cli.hpp"
#include "kleinvcy/homology.hpp"
#include "kleinvcy/isotropy.hpp"
#include "kleinvcy/models.hpp"
#include "kleinvcy/serialize.hpp"

namespace py = pybind11;
using namespace kleinvcy;

namespace {

// Python ints and Fractions cross the boundary as decimal strings so that
// arbitrarily large values survive.
Integer to_integer(const py::int_& x) { return parse_integer(std::string(py::str(x))); }

py::int_ from_integer(const Integer& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(to_string(x).c_str(), nullptr, 10));
}

Rational to_rational(const py::handle& x) { return parse_rational(std::string(py::str(x))); }

py::object from_rational(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(to_string(q));
}

using Pair = std::pair<py::int_, py::int_>;

GroupElement to_element(const Pair& p) { return {to_integer(p.first), to_integer(p.second)}; }
py::tuple from_element(const GroupElement& g) { return py::make_tuple(from_integer(g.n), from_integer(g.m)); }

CyclicSubgroup to_subgroup(const Pair& p) { return CyclicSubgroup::generated_by(to_element(p)); }

Line to_line(const py::object& slope, const py::object& intercept) {
  if (py::isinstance<py::str>(slope) && std::string(py::str(slope)) == "inf") {
    return Line::vertical(to_rational(intercept));
  }
  return Line::finite(to_rational(slope), to_rational(intercept));
}

py::object from_json(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::list from_graded(const GradedGroups& h) {
  py::list out;
  for (std::size_t d = 0; d < std::max<std::size_t>(h.length(), 1); ++d) {
    py::list torsion;
    for (const auto& t : h.at(d).torsion()) torsion.append(from_integer(t));
    out.append(py::make_tuple(h.at(d).rank(), torsion));
  }
  return out;
}

HomologyMethod to_method(const std::string& name) {
  if (name == "kunneth") return HomologyMethod::Kunneth;
  if (name == "simplicial") return HomologyMethod::Simplicial;
  throw ParseError("method must be kunneth or simplicial");
}

}  // namespace

PYBIND11_MODULE(_kleinvcy, m) {
  m.doc() = "Klein bottle group computations";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("mul", [](const Pair& g, const Pair& h) { return from_element(mul(to_element(g), to_element(h))); });
  m.def("inv", [](const Pair& g) { return from_element(inv(to_element(g))); });
  m.def("pow", [](const Pair& g, const py::int_& k) { return from_element(pow(to_element(g), to_integer(k))); });
  m.def("conj", [](const Pair& t, const Pair& g) { return from_element(conj(to_element(t), to_element(g))); });
  m.def("act_point", [](const Pair& g, const py::object& t, const py::object& r) {
    const PlanePoint p = act_point(to_element(g), {to_rational(t), to_rational(r)});
    return py::make_tuple(from_rational(p.t), from_rational(p.r));
  });

  m.def("canonicalize", [](const Pair& g) { return from_element(to_subgroup(g).generator()); });
  m.def("contains", [](const Pair& s, const Pair& g) { return contains(to_subgroup(s), to_element(g)); });
  m.def("commensurable", [](const Pair& s, const Pair& t) { return commensurable(to_subgroup(s), to_subgroup(t)); });
  m.def("comm_class", [](const Pair& s) { return from_json(encode(comm_class(to_subgroup(s)))); });
  m.def("commensurator", [](const Pair& s) { return to_string(commensurator(comm_class(to_subgroup(s)))); });

  m.def(
      "isotropy",
      [](const py::object& slope, const py::object& intercept) {
        const Isotropy iso = isotropy(to_line(slope, intercept));
        return py::make_tuple(from_element(iso.group.generator()), describe(iso.rule));
      },
      py::arg("slope"), py::arg("intercept"));
  m.def("stabilizes", [](const Pair& g, const py::object& slope, const py::object& intercept) {
    return stabilizes(to_element(g), to_line(slope, intercept));
  });
  m.def("fixed_set", [](const Pair& s) { return from_json(encode(fixed_set(to_subgroup(s)))); });
  m.def("verify_i_complex", [](long bound) {
    const IComplexReport r = verify_i_complex(bound);
    return py::make_tuple(r.passed, r.counterexamples);
  });

  m.def("act_on_kn", [](const Pair& g, const py::int_& n) { return from_integer(act_on_kn(to_element(g), to_integer(n))); });
  m.def("map_f", [](const Pair& rep, const py::object& t, const py::object& r) {
    return from_rational(map_f(to_subgroup(rep), {to_rational(t), to_rational(r)}));
  });
  m.def("pushout_report", [](long bound) { return from_json(encode(pushout_report(bound))); });

  m.def(
      "model_homology",
      [](std::size_t n, const std::string& method) { return from_graded(model_homology(n, to_method(method))); },
      py::arg("circles"), py::arg("method") = "kunneth");
  m.def("circle_klein_product_homology", [](const std::string& method) {
    return from_graded(circle_klein_product_homology(to_method(method)));
  }, py::arg("method") = "kunneth");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
