#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "mckay/errors.hpp"
#include "mckay/harness/experiments.hpp"
#include "mckay/matrix.hpp"
#include "mckay/partitions.hpp"
#include "mckay/sn_characters.hpp"

namespace py = pybind11;
using namespace mckay;

namespace {

py::object to_py_int(const BigInt& x) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(to_decimal(x).c_str(), nullptr, 10));
}

Partition partition_of(const std::vector<int>& parts) { return Partition(parts); }

// Documents cross the boundary as JSON text; the Python side parses them.
std::string run(const std::string& command, const std::string& params_json, std::uint64_t seed, int workers,
                std::optional<std::string> cache_dir, bool paranoid) {
  Json params;
  try {
    params = Json::parse(params_json);
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("parameters are not JSON: ") + e.what());
  }
  RunOptions options;
  options.workers = workers;
  if (cache_dir) options.cache_dir = *cache_dir;
  options.paranoid = paranoid;
  ExperimentResult r;
  {
    py::gil_scoped_release release;
    r = run_experiment(command, params, seed, options);
  }
  return r.document().dump();
}

int support_of(std::uint32_t q, const std::vector<std::vector<std::uint32_t>>& rows) {
  const int d = static_cast<int>(rows.size());
  const auto F = FiniteField::get(q);
  FqMatrix g(F, d, d);
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(rows[i].size()) != d) throw ValidationError("matrix must be square");
    for (int j = 0; j < d; ++j) {
      if (rows[i][j] >= q) throw ValidationError("entry out of range for the field");
      g(i, j) = rows[i][j];
    }
  }
  return support(g);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact character tables, McKay graphs and classical-group verifiers";
  m.attr("__version__") = MCKAY_VERSION;

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_ArithmeticError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  m.def("commands", &experiment_commands, "Experiment names accepted by run().");
  m.def("default_parameters", [](const std::string& command) {
    return normalize_parameters(command, Json::object()).dump();
  });
  m.def("run", &run, py::arg("command"), py::arg("params_json") = "{}", py::arg("seed") = 1, py::arg("workers") = 1,
        py::arg("cache_dir") = py::none(), py::arg("paranoid") = false,
        "Run an experiment; returns the run document as JSON text.");

  m.def("partitions", [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& p : enumerate_partitions(n)) out.push_back(p.parts());
    return out;
  });
  m.def("partition_count", [](int n) { return to_py_int(partition_count(n)); });
  m.def("dimension", [](const std::vector<int>& parts) { return to_py_int(dimension(partition_of(parts))); });
  m.def("conjugate", [](const std::vector<int>& parts) { return partition_of(parts).conjugate().parts(); });
  m.def("sn_character", [](const std::vector<int>& lambda, const std::vector<int>& mu) {
    return to_py_int(mn_value(partition_of(lambda), partition_of(mu)));
  });
  m.def("support", &support_of, py::arg("q"), py::arg("rows"),
        "d minus the largest eigenspace dimension over the algebraic closure.");
}
