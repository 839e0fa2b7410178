#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>

#include "colsel/distributed.hpp"
#include "colsel/error.hpp"
#include "colsel/eval.hpp"
#include "colsel/generalized.hpp"
#include "colsel/greedy.hpp"
#include "colsel/io.hpp"
#include "colsel/linalg.hpp"
#include "colsel/sketch.hpp"

namespace py = pybind11;
using namespace colsel;

namespace {

ColumnSet to_set(const std::vector<std::size_t>& indices) { return ColumnSet(indices); }

SamplingMode parse_mode(const std::string& name) {
  if (name == "uniform") return SamplingMode::uniform;
  if (name == "column-norm") return SamplingMode::column_norm;
  if (name == "svd-rows") return SamplingMode::svd_rows;
  throw InvalidArgument("unknown sampling mode '" + name + "'");
}

MatrixFormat format_for(const std::filesystem::path& path, const std::optional<std::string>& format) {
  return format ? parse_matrix_format(*format) : infer_matrix_format(path);
}

DistributedConfig make_config(std::size_t l, std::size_t partitions, std::size_t r,
                              const std::string& sketch, const std::string& assignment,
                              std::uint64_t seed, std::size_t threads) {
  DistributedConfig cfg;
  cfg.l = l;
  cfg.partitions = partitions;
  cfg.r = r;
  cfg.sketch_kind = parse_sketch_kind(sketch);
  cfg.assignment = parse_assignment(assignment);
  cfg.seed = seed;
  cfg.threads = threads;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_colsel, m) {
  m.doc() = "Greedy column subset selection: centralized, generalized and partitioned.";

  // Handles are kept alive by the module attributes for the interpreter's lifetime.
  static const py::handle base = py::exception<Error>(m, "ColselError", PyExc_ValueError).release();
  static const py::handle usage = py::exception<Error>(m, "UsageError", base).release();
  static const py::handle data = py::exception<Error>(m, "DataError", base).release();
  static const py::handle numerical = py::exception<Error>(m, "NumericalError", base).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      switch (e.kind()) {
        case ErrorKind::usage: py::set_error(usage, e.what()); break;
        case ErrorKind::data: py::set_error(data, e.what()); break;
        case ErrorKind::numerical: py::set_error(numerical, e.what()); break;
      }
    }
  });

  py::class_<SelectionResult>(m, "SelectionResult")
      .def_property_readonly("selected", [](const SelectionResult& r) { return r.selected.indices(); })
      .def_readonly("exhausted", &SelectionResult::exhausted)
      .def_readonly("target_reconstructed", &SelectionResult::target_reconstructed)
      .def("__repr__", [](const SelectionResult& r) {
        return "SelectionResult(selected=" + py::repr(py::cast(r.selected.indices())).cast<std::string>() +
               ", exhausted=" + (r.exhausted ? "True" : "False") + ")";
      });

  py::class_<DistributedReport>(m, "DistributedReport")
      .def_readonly("target_error", &DistributedReport::target_error)
      .def_readonly("css_error", &DistributedReport::css_error)
      .def_readonly("sketch_seconds", &DistributedReport::sketch_seconds)
      .def_readonly("map_seconds", &DistributedReport::map_seconds)
      .def_readonly("reduce_seconds", &DistributedReport::reduce_seconds)
      .def_readonly("per_partition_budget", &DistributedReport::per_partition_budget)
      .def_readonly("picks_per_partition", &DistributedReport::picks_per_partition)
      .def_readonly("columns_moved", &DistributedReport::columns_moved)
      .def_readonly("broadcast_values", &DistributedReport::broadcast_values);

  py::class_<DistributedResult>(m, "DistributedResult")
      .def_property_readonly("selected", [](const DistributedResult& r) { return r.selected.indices(); })
      .def_readonly("exhausted", &DistributedResult::exhausted)
      .def_readonly("target_reconstructed", &DistributedResult::target_reconstructed)
      .def_readonly("sketch", &DistributedResult::sketch)
      .def_readonly("report", &DistributedResult::report);

  m.def("greedy_select", [](const Dense& a, std::size_t l) { return greedy_select(Matrix(a), l); },
        py::arg("a"), py::arg("l"));
  m.def("generalized_select",
        [](const Dense& a, const Dense& b, std::size_t l) {
          return generalized_select(Matrix(a), Matrix(b), l);
        },
        py::arg("a"), py::arg("b"), py::arg("l"));
  m.def("css_criterion",
        [](const Dense& a, const std::vector<std::size_t>& s) { return css_criterion(Matrix(a), to_set(s)); },
        py::arg("a"), py::arg("indices"));
  m.def("target_criterion",
        [](const Dense& a, const std::vector<std::size_t>& s, const Dense& b) {
          return target_criterion(Matrix(a), to_set(s), Matrix(b));
        },
        py::arg("a"), py::arg("indices"), py::arg("b"));
  m.def("sketch_matrix",
        [](const Dense& a, std::size_t r, const std::string& kind, std::uint64_t seed) {
          return sketch_matrix(Matrix(a), SketchSpec{parse_sketch_kind(kind), r, seed});
        },
        py::arg("a"), py::arg("r"), py::arg("kind") = "gaussian", py::arg("seed") = 0);
  m.def("distributed_select",
        [](const Dense& a, std::size_t l, std::size_t partitions, std::size_t r,
           const std::string& sketch, const std::string& assignment, std::uint64_t seed,
           std::size_t threads) {
          py::gil_scoped_release release;
          return distributed_select(Matrix(a),
                                    make_config(l, partitions, r, sketch, assignment, seed, threads));
        },
        py::arg("a"), py::arg("l"), py::arg("partitions"), py::arg("r"),
        py::arg("sketch") = "gaussian", py::arg("assignment") = "contiguous", py::arg("seed") = 0,
        py::arg("threads") = 1);
  m.def("naive_distributed_baseline",
        [](const Dense& a, std::size_t l, std::size_t partitions, const std::string& assignment,
           std::size_t threads) {
          py::gil_scoped_release release;
          return naive_distributed_baseline(
              Matrix(a), make_config(l, partitions, 1, "gaussian", assignment, 0, threads));
        },
        py::arg("a"), py::arg("l"), py::arg("partitions"), py::arg("assignment") = "contiguous",
        py::arg("threads") = 1);
  m.def("relative_accuracy",
        [](const Dense& a, const std::vector<std::size_t>& s, std::size_t trials, std::uint64_t seed) {
          return relative_accuracy(Matrix(a), to_set(s), trials, seed);
        },
        py::arg("a"), py::arg("indices"), py::arg("trials") = 10, py::arg("seed") = 0);
  m.def("uniform_select",
        [](std::size_t n, std::size_t l, std::uint64_t seed) { return uniform_select(n, l, seed).indices(); },
        py::arg("n"), py::arg("l"), py::arg("seed") = 0);
  m.def("hybrid_select",
        [](const Dense& a, std::size_t l, const std::string& mode, std::uint64_t seed) {
          return hybrid_select(Matrix(a), l, parse_mode(mode), seed);
        },
        py::arg("a"), py::arg("l"), py::arg("mode") = "svd-rows", py::arg("seed") = 0);
  m.def("sketch_svd_select",
        [](const Dense& a, std::size_t l, std::size_t k, std::uint64_t seed) {
          return sketch_svd_select(Matrix(a), l, k, seed);
        },
        py::arg("a"), py::arg("l"), py::arg("k"), py::arg("seed") = 0);
  m.def("load_matrix",
        [](const std::filesystem::path& path, std::optional<std::string> format) {
          return load_matrix(path, format_for(path, format)).dense();
        },
        py::arg("path"), py::arg("format") = py::none());
  m.def("save_matrix",
        [](const Dense& a, const std::filesystem::path& path, std::optional<std::string> format) {
          save_matrix(Matrix(a), path, format_for(path, format));
        },
        py::arg("a"), py::arg("path"), py::arg("format") = py::none());
}
