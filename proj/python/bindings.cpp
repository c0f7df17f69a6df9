#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cobord2/bordism.hpp"
#include "cobord2/classify.hpp"
#include "cobord2/cli.hpp"
#include "cobord2/error.hpp"
#include "cobord2/gauge.hpp"

namespace py = pybind11;
using namespace cobord2;

namespace {

// Rationals cross the boundary as fractions.Fraction; anything whose str()
// is an integer or p/q is accepted on input.
py::object to_py(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_string(r));
}

Rational from_py(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

py::list to_py(const Vector& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

py::list to_py(const Matrix& m) {
  py::list rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.append(to_py(m.row_vector(r)));
  return rows;
}

Vector vector_from_py(const py::iterable& it) {
  Vector v;
  for (auto h : it) v.push_back(from_py(h));
  return v;
}

AlgebraElement element_from_py(const py::iterable& it) { return AlgebraElement{vector_from_py(it)}; }

Algebra algebra_from_nested(const py::sequence& structure, const py::iterable& unit) {
  const std::size_t n = py::len(structure);
  StructureConstants s(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto plane = structure[i].cast<py::sequence>();
    if (py::len(plane) != n) throw Error(ErrorKind::DimensionMismatch, "structure must be dim x dim x dim");
    for (std::size_t j = 0; j < n; ++j) {
      const auto row = plane[j].cast<py::sequence>();
      if (py::len(row) != n) throw Error(ErrorKind::DimensionMismatch, "structure must be dim x dim x dim");
      for (std::size_t k = 0; k < n; ++k) s(i, j, k) = from_py(row[k]);
    }
  }
  return algebra_from_structure(std::move(s), vector_from_py(unit));
}

py::dict report_to_py(const ClassificationReport& r) {
  py::dict d;
  d["semisimple"] = r.semisimple;
  d["center_dim"] = r.center_dim;
  d["cocenter_dim"] = r.cocenter_dim;
  d["morita_model"] = r.morita_model ? py::object(py::str(*r.morita_model)) : py::object(py::none());
  d["evidence"] = r.evidence;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact 2D TQFT evaluation, finite gauge theory and algebra classification";

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error;
      PyErr_SetObject(exc.ptr(), py::make_tuple(e.name(), e.what()).ptr());
    }
  });

  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("identity", &FiniteGroup::identity)
      .def_property_readonly("name", &FiniteGroup::name)
      .def("multiply", &FiniteGroup::multiply)
      .def("inverse", &FiniteGroup::inverse)
      .def("table", &FiniteGroup::table)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("__repr__", [](const FiniteGroup& g) {
        return "<FiniteGroup " + (g.name().empty() ? std::string("?") : g.name()) + " order " +
               std::to_string(g.order()) + ">";
      });

  py::class_<ConjugacyClasses>(m, "ConjugacyClasses")
      .def_readonly("classes", &ConjugacyClasses::classes)
      .def_readonly("class_of", &ConjugacyClasses::class_of)
      .def_readonly("sizes", &ConjugacyClasses::sizes)
      .def("__len__", &ConjugacyClasses::count);

  m.def("builtin_group", &builtin_group, py::arg("tag"));
  m.def("group_from_table", &group_from_table, py::arg("table"), py::arg("name") = "");
  m.def("group_from_permutations", &group_from_permutations, py::arg("degree"), py::arg("generators"),
        py::arg("cap") = kDefaultGroupCap, py::arg("name") = "");
  m.def("parse_group", &parse_group, py::arg("text"));
  m.def("conjugacy_classes", &conjugacy_classes, py::arg("group"));

  py::class_<Algebra>(m, "Algebra")
      .def_property_readonly("dim", &Algebra::dim)
      .def_property_readonly("unit", [](const Algebra& a) { return to_py(a.unit().coords); })
      .def("is_commutative", &Algebra::is_commutative)
      .def("multiply", [](const Algebra& a, const py::iterable& x, const py::iterable& y) {
        return to_py(multiply(a, element_from_py(x), element_from_py(y)).coords);
      })
      .def("to_text", &format_algebra)
      .def("__eq__", [](const Algebra& a, const Algebra& b) { return a == b; });

  m.def("algebra_from_structure", &algebra_from_nested, py::arg("structure"), py::arg("unit"));
  m.def("parse_algebra", [](const std::string& text) { return parse_algebra(text); }, py::arg("text"));
  m.def("ground_field", &ground_field);
  m.def("dual_numbers", &dual_numbers);
  m.def("diagonal_algebra", &diagonal_algebra, py::arg("n"));
  m.def("matrix_algebra", &matrix_algebra, py::arg("n"));
  m.def("group_algebra", [](const FiniteGroup& g) { return group_algebra(g).algebra; }, py::arg("group"));
  m.def("regular_trace_form", [](const Algebra& a) { return to_py(regular_trace_form(a)); });
  m.def("center", [](const Algebra& a) {
    py::list out;
    for (const auto& z : center(a)) out.append(to_py(z.coords));
    return out;
  });
  m.def("cocenter_dim", &cocenter_dim);
  m.def("opposite", &opposite);
  m.def("direct_sum", &direct_sum);

  py::class_<FrobeniusAlgebra>(m, "FrobeniusAlgebra")
      .def_property_readonly("algebra", &FrobeniusAlgebra::algebra)
      .def_property_readonly("dim", &FrobeniusAlgebra::dim)
      .def_property_readonly("counit", [](const FrobeniusAlgebra& f) { return to_py(f.counit()); })
      .def_property_readonly("gram", [](const FrobeniusAlgebra& f) { return to_py(f.gram()); })
      .def_property_readonly("dual_basis", [](const FrobeniusAlgebra& f) { return to_py(f.dual_basis()); })
      .def_property_readonly("handle", [](const FrobeniusAlgebra& f) { return to_py(f.handle().coords); });

  m.def("frobenius_from_counit",
        [](const Algebra& a, const py::iterable& counit) { return frobenius_from_counit(a, vector_from_py(counit)); },
        py::arg("algebra"), py::arg("counit"));
  m.def("genus_invariant", [](const FrobeniusAlgebra& f, std::size_t g) { return to_py(genus_invariant(f, g)); },
        py::arg("frobenius"), py::arg("genus"));
  m.def("is_handle_unit", &is_handle_unit);
  m.def("frobenius_direct_sum", &frobenius_direct_sum);
  m.def("validate_trace", [](const Algebra& a, const py::iterable& counit) {
    const auto v = validate_trace(a, vector_from_py(counit));
    return py::make_tuple(v.valid(), v.diagnostic);
  });

  py::class_<ClassFunctionSpace>(m, "ClassFunctionSpace")
      .def(py::init([](const FiniteGroup& g) { return class_function_space(g); }), py::arg("group"))
      .def_property_readonly("class_count", &ClassFunctionSpace::class_count)
      .def_property_readonly("center", [](const ClassFunctionSpace& c) { return c.center_frobenius; })
      .def("class_multiply", &class_multiply)
      .def("pants_oracle", &pants_oracle)
      .def("genus_with_boundary", [](const ClassFunctionSpace& c, std::size_t g, const std::vector<std::size_t>& b) {
        return to_py(dw_genus_with_boundary(c, g, b));
      }, py::arg("genus"), py::arg("boundary") = std::vector<std::size_t>{});

  m.def("dw_closed_invariant",
        [](const FiniteGroup& g, std::size_t genus) { return to_py(dw_closed_invariant(g, genus)); },
        py::arg("group"), py::arg("genus"));
  m.def("dw_brute_force",
        [](const FiniteGroup& g, std::size_t genus, std::uint64_t cap, std::size_t workers) {
          BruteForceResult r;
          {
            py::gil_scoped_release release;
            r = dw_brute_force(g, genus, cap, workers);
          }
          return py::make_tuple(to_py(r.value), r.count, r.order);
        },
        py::arg("group"), py::arg("genus"), py::arg("cap") = kDefaultWorkCap, py::arg("workers") = 1);

  m.def("evaluate", [](const std::string& source, const FrobeniusAlgebra& f) { return to_py(evaluate(source, f).matrix); },
        py::arg("source"), py::arg("frobenius"));
  m.def("closed_surface_expr", [](std::size_t g) { return to_string(closed_surface_expr(g)); }, py::arg("genus"));
  m.def("check_relation", [](const std::string& lhs, const std::string& rhs, const FrobeniusAlgebra& f) {
    return check_relation(parse(lhs), parse(rhs), f);
  });
  m.def("relation_suite", [](const FrobeniusAlgebra& f) {
    py::dict out;
    for (const auto& r : run_relation_suite(f)) out[py::str(r.name)] = r.passed;
    return out;
  });

  m.def("is_semisimple", &is_semisimple);
  m.def("morita_equivalent", &morita_equivalent);
  m.def("classify", [](const Algebra& a) { return report_to_py(classify(a)); });
  m.def("classify_frobenius", [](const FrobeniusAlgebra& f) { return report_to_py(classify_frobenius(f)); });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
