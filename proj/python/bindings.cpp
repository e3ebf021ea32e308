#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "connectoid/command.hpp"

namespace py = pybind11;
using namespace connectoid;

namespace {

Json to_json(const py::handle& obj) {
  return parse_json(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

py::object from_json(const Json& doc) { return py::module_::import("json").attr("loads")(doc.dump()); }

Connectoid connectoid_from(const py::object& source) {
  Instance inst = py::isinstance<py::str>(source) ? load_instance(source.cast<std::string>())
                                                  : instance_from_json(to_json(source));
  if (!inst.is_finite()) fail(ErrorKind::kMalformedInput, "a finite instance is required");
  return inst.finite();
}

py::tuple run(const std::string& verb, const py::object& instance, const py::object& artifact,
              const py::dict& options) {
  Command cmd;
  cmd.verb = verb;
  if (py::isinstance<py::str>(instance)) {
    cmd.instance = instance.cast<std::string>();
  } else {
    cmd.instance_doc = to_json(instance);
  }
  if (py::isinstance<py::str>(artifact)) {
    cmd.artifact = artifact.cast<std::string>();
  } else if (!artifact.is_none()) {
    cmd.artifact_doc = to_json(artifact);
  }
  for (const auto& [key, value] : options) {
    const auto name = key.cast<std::string>();
    auto list = [&] {
      return py::isinstance<py::str>(value) ? std::vector<std::string>{value.cast<std::string>()}
                                            : value.cast<std::vector<std::string>>();
    };
    if (name == "root") cmd.root = value.cast<std::string>();
    else if (name == "target") cmd.target = value.cast<std::string>();
    else if (name == "sep") cmd.sep = list();
    else if (name == "sub") cmd.sub = list();
    else if (name == "depth") cmd.depth = value.cast<std::size_t>();
    else if (name == "budget") cmd.budget = value.cast<std::size_t>();
    else if (name == "rounds") cmd.rounds = value.cast<std::size_t>();
    else if (name == "hits") cmd.hits = value.cast<std::size_t>();
    else if (name == "lambda_") cmd.lambda = value.cast<std::size_t>();
    else throw py::type_error("unknown option '" + name + "'");
  }
  CommandResult result;
  {
    py::gil_scoped_release release;
    result = run_command(cmd);
  }
  return py::make_tuple(result.exit, from_json(result.report), result.dot);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Connectoid core operations";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object cls = py::module_::import("connectoid").attr("ConnectoidError");
      py::object err = cls(e.what(), std::string(to_string(e.kind())));
      PyErr_SetObject(cls.ptr(), err.ptr());
    }
  });

  py::class_<Connectoid>(m, "Connectoid")
      .def(py::init(&connectoid_from), py::arg("source"),
           "From an instance document (dict), a JSON file path or a fixture name.")
      .def_static("from_bonds", &Connectoid::from_bonds, py::arg("ground"), py::arg("bonds"))
      .def_property_readonly("ground", [](const Connectoid& k) { return k.names_of(k.ground()); })
      .def_property_readonly("generators",
                             [](const Connectoid& k) {
                               std::vector<std::vector<std::string>> out;
                               for (const auto& g : k.generators()) out.push_back(k.names_of(g));
                               return out;
                             })
      .def("__len__", &Connectoid::size)
      .def("is_connected",
           [](const Connectoid& k, const std::vector<std::string>& c) { return k.is_connected(k.set_of(c)); })
      .def(
          "component_of",
          [](const Connectoid& k, const std::string& x, const std::vector<std::string>& removed) {
            return k.names_of(k.component_of(k.id(x), k.set_of(removed)));
          },
          py::arg("x"), py::arg("removed") = std::vector<std::string>{})
      .def(
          "components",
          [](const Connectoid& k, const std::vector<std::string>& removed) {
            std::vector<std::vector<std::string>> out;
            for (const auto& c : k.components(k.set_of(removed))) out.push_back(k.names_of(c));
            return out;
          },
          py::arg("removed") = std::vector<std::string>{});

  m.def(
      "validate_family",
      [](const std::vector<std::string>& ground, const std::vector<std::vector<std::string>>& members) {
        const FamilyReport r = validate_family(FiniteFamily{ground, members});
        std::vector<std::vector<std::string>> missing;
        for (const auto& v : r.violations) missing.push_back(v.missing);
        return py::make_tuple(r.ok, missing);
      },
      py::arg("ground"), py::arg("members"), "(ok, sets that should be members)");

  m.def("verbs", [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : command_verbs()) out.push_back(name);
    return out;
  });
  m.def("run", &run, py::arg("verb"), py::arg("instance"), py::arg("artifact") = py::none(),
        py::arg("options") = py::dict(), "Runs a verb; returns (exit code, report, dot).");
}
