// kaninj._core: posets and maps as objects, reports as JSON text that the
// Python package decodes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kaninj/suites.hpp"

namespace py = pybind11;
using namespace kaninj;

namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

MonotoneMap map_from_dict(const Poset& dom, const Poset& cod, const std::map<std::string, std::string>& image) {
  return MonotoneMap::from_labels(dom, cod, Pairs(image.begin(), image.end()));
}

std::map<std::string, std::string> map_to_dict(const MonotoneMap& m) {
  std::map<std::string, std::string> out;
  for (Elem a = 0; a < m.dom().size(); ++a) out[m.dom().label(a)] = m.cod().label(m(a));
  return out;
}

MapClass make_class(const std::vector<MonotoneMap>& maps, const std::string& name) { return {name, maps}; }

std::string dump(const io::Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Left Kan injectivity in finite posets";

  static py::exception<Error> error(m, "KaninjError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<Poset>(m, "Poset")
      .def(py::init([](const std::vector<std::string>& labels, const Pairs& leq) { return build_poset(labels, leq); }),
           py::arg("elements"), py::arg("leq") = Pairs{})
      .def_static("from_json", [](const std::string& text) { return io::poset_from_json(io::Json::parse(text)); })
      .def_static("builtin", [](const std::string& name) {
        auto p = io::builtin_poset(name);
        if (!p) throw Error(ErrorCode::invalid_argument, "unknown poset " + name);
        return *p;
      })
      .def("__len__", &Poset::size)
      .def_property_readonly("elements", &Poset::labels)
      .def("leq",
           [](const Poset& p, const std::string& a, const std::string& b) {
             auto i = p.index_of(a), j = p.index_of(b);
             if (!i || !j) throw Error(ErrorCode::unknown_label, "no element " + (i ? b : a));
             return p.leq(*i, *j);
           })
      .def("dual", &Poset::dual)
      .def("to_json", [](const Poset& p) { return dump(io::to_json(p)); })
      .def("to_dot", [](const Poset& p) { return to_dot(p); })
      .def("__eq__", [](const Poset& p, const Poset& q) { return p == q; })
      .def("__repr__", [](const Poset& p) { return "Poset(" + dump(io::to_json(p)) + ")"; });

  py::class_<MonotoneMap>(m, "MonotoneMap")
      .def(py::init(&map_from_dict), py::arg("dom"), py::arg("cod"), py::arg("image"))
      .def_static("from_json", [](const std::string& text) { return io::map_from_json(io::Json::parse(text)); })
      .def_static("identity", &MonotoneMap::identity)
      .def_property_readonly("dom", &MonotoneMap::dom)
      .def_property_readonly("cod", &MonotoneMap::cod)
      .def_property_readonly("image", &map_to_dict)
      .def("to_json", [](const MonotoneMap& f) { return dump(io::to_json(f)); })
      .def("__eq__", [](const MonotoneMap& f, const MonotoneMap& g) { return f == g; })
      .def("__repr__", [](const MonotoneMap& f) { return "MonotoneMap(" + describe(f) + ")"; });

  m.def("compose", [](const MonotoneMap& g, const MonotoneMap& f) { return compose(g, f); }, "g . f");
  m.def("h_bottom", &maps::h_bottom);
  m.def("h_join", &maps::h_join);
  m.def("isomorphic", &isomorphic);
  m.def("enumerate_posets", [](std::size_t n, bool up_to) { return up_to ? enumerate_posets_up_to(n) : enumerate_posets(n); },
        py::arg("n"), py::arg("up_to") = false);

  m.def("left_kan", [](const MonotoneMap& f, const MonotoneMap& h) { return dump(io::to_json(left_kan(f, h))); });
  m.def("is_dense", [](const MonotoneMap& f) { return is_dense(f); });
  m.def(
      "injectivity",
      [](const Poset& x, const std::vector<MonotoneMap>& maps, bool weak, const std::string& name) {
        MapClass h = make_class(maps, name);
        InjectivityReport r = weak ? is_weakly_injective(x, h) : is_injective(x, h);
        return dump(io::to_json(r, h));
      },
      py::arg("x"), py::arg("maps"), py::arg("weak") = false, py::arg("name") = "class");
  m.def(
      "map_injectivity",
      [](const MonotoneMap& p, const std::vector<MonotoneMap>& maps, const std::string& name) {
        MapClass h = make_class(maps, name);
        return dump(io::to_json(is_injective_map(p, h), h));
      },
      py::arg("p"), py::arg("maps"), py::arg("name") = "class");
  m.def(
      "reflect",
      [](const Poset& x, const std::vector<MonotoneMap>& maps, std::size_t max_steps, bool trace) {
        ReflectOptions o;
        o.max_steps = max_steps;
        return dump(io::to_json(reflect(x, make_class(maps, "class"), o), trace));
      },
      py::arg("x"), py::arg("maps"), py::arg("max_steps") = 16, py::arg("trace") = false);
  m.def(
      "extend_along_unit",
      [](const MonotoneMap& p, const std::vector<MonotoneMap>& maps) {
        MapClass h = make_class(maps, "class");
        return extend_along_unit(p, reflect(p.dom(), h), h);
      },
      py::arg("p"), py::arg("maps"));
  m.def("mapping_cone", [](const MonotoneMap& h) {
    MappingCone c = mapping_cone(h);
    return py::make_tuple(c.cone, c.i_h, c.j);
  });
  m.def(
      "run_suite",
      [](const std::string& name, std::size_t size_cap, bool mutate) {
        SuiteOptions o;
        o.size_cap = size_cap;
        o.mutate = mutate;
        return dump(run_suite(name, o).report);
      },
      py::arg("name"), py::arg("size_cap") = 4, py::arg("mutate") = false);
  m.def("suite_names", &suite_names);
  m.def("set_size_cap", &set_default_size_cap);
  m.def("size_cap", &default_size_cap);
}
