#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>

#include "qwlab/algebra.hpp"
#include "qwlab/axioms.hpp"
#include "qwlab/center.hpp"
#include "qwlab/classify.hpp"
#include "qwlab/effect.hpp"
#include "qwlab/error.hpp"
#include "qwlab/io.hpp"
#include "qwlab/search.hpp"
#include "qwlab/terms.hpp"

namespace py = pybind11;
using namespace qwlab;

namespace {

Elem element(const FiniteAlgebra& a, const std::string& name) {
  if (auto e = a.find(name)) return *e;
  throw ValidationError("unknown element '" + name + "'");
}

FiniteAlgebra make_algebra(const std::vector<std::string>& names, const std::string& unit,
                           const std::string& zero,
                           const std::vector<std::vector<std::string>>& rows) {
  auto index = [&](const std::string& s) -> Elem {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == s) return static_cast<Elem>(i);
    }
    throw ValidationError("unknown element '" + s + "'");
  };
  std::vector<std::vector<Elem>> t;
  for (const auto& row : rows) {
    std::vector<Elem> r;
    for (const auto& cell : row) r.push_back(index(cell));
    t.push_back(std::move(r));
  }
  return FiniteAlgebra::from_rows(names, index(unit), index(zero), t);
}

ClassId class_id(const std::string& text) {
  if (auto c = parse_class_id(text)) return *c;
  throw ValidationError("unknown class '" + text + "'");
}

std::optional<ClassId> optional_class(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  return class_id(*text);
}

py::object named(const FiniteAlgebra& a, const std::optional<std::vector<Elem>>& w) {
  if (!w) return py::none();
  py::list out;
  for (Elem e : *w) out.append(a.name(e));
  return std::move(out);
}

std::vector<std::vector<std::string>> named_table(const FiniteAlgebra& a,
                                                  const Square<Elem>& t) {
  std::vector<std::vector<std::string>> out(static_cast<std::size_t>(t.size()));
  for (Elem x = 0; x < t.size(); ++x)
    for (Elem y = 0; y < t.size(); ++y) out[x].push_back(a.name(t(x, y)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite involutive BE algebras";
  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<FiniteAlgebra>(m, "Algebra")
      .def(py::init(&make_algebra), py::arg("names"), py::arg("unit"), py::arg("zero"),
           py::arg("rows"), "Rows of the -> table, row i holding names[i] -> y.")
      .def_property_readonly("size", &FiniteAlgebra::size)
      .def_property_readonly("names", &FiniteAlgebra::names)
      .def_property_readonly("unit", [](const FiniteAlgebra& a) { return a.name(a.unit()); })
      .def_property_readonly("zero", [](const FiniteAlgebra& a) { return a.name(a.zero()); })
      .def_property_readonly("table",
                             [](const FiniteAlgebra& a) { return named_table(a, a.imp_table()); })
      .def("imp",
           [](const FiniteAlgebra& a, const std::string& x, const std::string& y) {
             return a.name(a.imp(element(a, x), element(a, y)));
           })
      .def("save", [](const FiniteAlgebra& a, const std::string& path) { save_algebra(a, path); })
      .def("__eq__", [](const FiniteAlgebra& a, const FiniteAlgebra& b) { return a == b; })
      .def("__repr__", [](const FiniteAlgebra& a) {
        return "<Algebra of size " + std::to_string(a.size()) + ">";
      });

  m.def("load", [](const std::string& path) { return load_algebra(path); }, py::arg("path"));

  m.def(
      "check_axiom",
      [](const FiniteAlgebra& a, const std::string& id) {
        const auto ax = parse_axiom_id(id);
        if (!ax) throw ValidationError("unknown axiom '" + id + "'");
        const CheckOutcome o = check_axiom(Model(a), *ax);
        return py::make_tuple(std::string(to_string(o.status)), named(a, o.witness));
      },
      py::arg("algebra"), py::arg("axiom"), "Returns (status, witness names or None).");

  m.def(
      "classify",
      [](const FiniteAlgebra& a) {
        py::dict out;
        for (const auto& c : classify(Model(a)).classes) {
          py::object failed = py::none(), witness = py::none();
          if (c.first_failure) {
            failed = py::str(std::string(to_string(c.first_failure->axiom)));
            witness = named(a, c.first_failure->witness);
          }
          out[py::str(std::string(to_string(c.cls)))] = py::make_tuple(c.member, failed, witness);
        }
        return out;
      },
      py::arg("algebra"), "Maps class name to (member, failed axiom, witness).");

  m.def(
      "check_statement",
      [](const FiniteAlgebra& a, const std::string& text) {
        const StatementOutcome o = check_statement(Model(a), parse_statement(text));
        py::object assignment = py::none();
        if (o.witness) {
          py::dict d;
          for (std::size_t i = 0; i < o.variables.size(); ++i) {
            d[py::str(o.variables[i])] = a.name((*o.witness)[i]);
          }
          assignment = std::move(d);
        }
        return py::make_tuple(std::string(to_string(o.status)), assignment);
      },
      py::arg("algebra"), py::arg("statement"));

  m.def(
      "center",
      [](const FiniteAlgebra& a) {
        std::vector<std::string> out;
        for (Elem e : center(Model(a)).center) out.push_back(a.name(e));
        return out;
      },
      py::arg("algebra"));

  m.def(
      "effect_axioms",
      [](const FiniteAlgebra& a) {
        py::list out;
        for (const auto& o : check_effect_axioms(build_effect(Model(a)))) {
          out.append(py::make_tuple(std::string(to_string(o.axiom)),
                                    std::string(to_string(o.status)), named(a, o.witness),
                                    o.kind));
        }
        return out;
      },
      py::arg("algebra"), "List of (axiom, status, witness, failure kind).");

  m.def(
      "count",
      [](int size, const std::optional<std::string>& cls, bool iso) {
        return count({size, optional_class(cls), iso, std::nullopt});
      },
      py::arg("size"), py::arg("cls") = py::none(), py::arg("iso") = true);

  m.def(
      "enumerate_models",
      [](int size, const std::optional<std::string>& cls, bool iso) {
        return enumerate({size, optional_class(cls), iso, std::nullopt});
      },
      py::arg("size"), py::arg("cls") = py::none(), py::arg("iso") = true);

  m.def(
      "find_counterexample",
      [](const std::string& text, const std::string& cls, int max_size) -> py::object {
        auto found = find_counterexample(parse_statement(text), class_id(cls), max_size);
        if (!found) return py::none();
        py::dict assignment;
        for (std::size_t i = 0; i < found->variables.size(); ++i) {
          assignment[py::str(found->variables[i])] = found->model.name(found->assignment[i]);
        }
        return py::make_tuple(found->model, assignment);
      },
      py::arg("statement"), py::arg("cls"), py::arg("max_size"));

  m.def(
      "to_mbe_product",
      [](const FiniteAlgebra& a) { return named_table(a, phi_to_mbe(a).prod_table()); },
      py::arg("algebra"), "The odot table of the product-signature image.");
}
