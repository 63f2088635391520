#include <pybind11/functional.h>
#include <pybind11/iostream.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hoopoe/harness.hpp"

namespace py = pybind11;
using namespace hoopoe;

namespace {

// Wrap a Python callable taking a list of floats as an objective.
Objective python_objective(py::function f, Bounds bounds, std::string name) {
  auto fn = [f = std::move(f)](std::span<const double> x) {
    return f(Vector(x.begin(), x.end())).cast<double>();
  };
  return {std::move(name), std::move(fn), std::move(bounds), std::nullopt};
}

double call(double (*fn)(std::span<const double>), const Vector& x) { return fn(x); }

}  // namespace

PYBIND11_MODULE(_hoopoe, m) {
  m.doc() = "Hoopoe heuristic and cuckoo search on box-constrained objectives.";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<harness::IoError>(m, "IoError", PyExc_OSError);

  py::class_<Bounds>(m, "Bounds")
      .def(py::init<Vector, Vector>(), py::arg("lower"), py::arg("upper"))
      .def_static("cube", &Bounds::cube, py::arg("dim"), py::arg("lo"), py::arg("hi"))
      .def_property_readonly("dim", &Bounds::dim)
      .def_property_readonly("lower", &Bounds::lower)
      .def_property_readonly("upper", &Bounds::upper)
      .def("contains", [](const Bounds& b, const Vector& x) { return b.contains(x); })
      .def("__repr__", [](const Bounds& b) {
        return "<Bounds dim=" + std::to_string(b.dim()) + ">";
      });

  py::class_<Candidate>(m, "Candidate")
      .def_readonly("position", &Candidate::position)
      .def_readonly("value", &Candidate::value)
      .def_readonly("eval_index", &Candidate::eval_index);

  py::enum_<Mode>(m, "Mode")
      .value("init", Mode::init)
      .value("diversify", Mode::diversify)
      .value("probe", Mode::probe)
      .value("dig", Mode::dig);

  py::class_<TraceRecord>(m, "TraceRecord")
      .def_readonly("iteration", &TraceRecord::iteration)
      .def_readonly("evaluations", &TraceRecord::evaluations)
      .def_readonly("best_value", &TraceRecord::best_value)
      .def_readonly("mode", &TraceRecord::mode);

  py::class_<RunResult>(m, "RunResult")
      .def_readonly("best", &RunResult::best)
      .def_readonly("evaluations_used", &RunResult::evaluations_used)
      .def_readonly("success", &RunResult::success)
      .def_readonly("mode_switch_iteration", &RunResult::mode_switch_iteration)
      .def_readonly("trace", &RunResult::trace)
      .def_readonly("seed", &RunResult::seed)
      .def_readonly("truncated_steps", &RunResult::truncated_steps)
      .def("trace_csv", &harness::trace_csv);

  py::class_<levy::LevyParams>(m, "LevyParams")
      .def(py::init<>())
      .def_readwrite("alpha", &levy::LevyParams::alpha)
      .def_readwrite("lambda_", &levy::LevyParams::lambda);

  py::class_<probing::ProbeParams>(m, "ProbeParams")
      .def(py::init<>())
      .def_readwrite("radius", &probing::ProbeParams::radius)
      .def_readwrite("probes_per_region", &probing::ProbeParams::probes_per_region)
      .def_readwrite("dig_threshold", &probing::ProbeParams::dig_threshold)
      .def_readwrite("dig_budget", &probing::ProbeParams::dig_budget)
      .def_readwrite("shrink_factor", &probing::ProbeParams::shrink_factor);

  py::enum_<RadiusPolicy>(m, "RadiusPolicy")
      .value("fixed", RadiusPolicy::fixed)
      .value("adaptive", RadiusPolicy::adaptive);

  py::class_<HoopoeConfig>(m, "HoopoeConfig")
      .def(py::init<>())
      .def_static("defaults_for", &HoopoeConfig::defaults_for, py::arg("bounds"))
      .def_readwrite("population_size", &HoopoeConfig::population_size)
      .def_readwrite("theta", &HoopoeConfig::theta)
      .def_readwrite("levy", &HoopoeConfig::levy)
      .def_readwrite("probe", &HoopoeConfig::probe)
      .def_readwrite("radius_policy", &HoopoeConfig::radius_policy)
      .def_readwrite("region_contraction", &HoopoeConfig::region_contraction)
      .def_readwrite("min_radius_ratio", &HoopoeConfig::min_radius_ratio)
      .def_readwrite("max_evaluations", &HoopoeConfig::max_evaluations)
      .def_readwrite("target_value", &HoopoeConfig::target_value)
      .def_readwrite("target_tolerance", &HoopoeConfig::target_tolerance)
      .def_readwrite("seed", &HoopoeConfig::seed)
      .def("validate", &HoopoeConfig::validate);

  py::enum_<CuckooVariant>(m, "CuckooVariant")
      .value("reference", CuckooVariant::reference)
      .value("textbook", CuckooVariant::textbook);

  py::class_<CuckooConfig>(m, "CuckooConfig")
      .def(py::init<>())
      .def_readwrite("nests", &CuckooConfig::nests)
      .def_readwrite("p_a", &CuckooConfig::p_a)
      .def_readwrite("levy", &CuckooConfig::levy)
      .def_readwrite("variant", &CuckooConfig::variant)
      .def_readwrite("max_evaluations", &CuckooConfig::max_evaluations)
      .def_readwrite("target_value", &CuckooConfig::target_value)
      .def_readwrite("target_tolerance", &CuckooConfig::target_tolerance)
      .def_readwrite("seed", &CuckooConfig::seed)
      .def("validate", &CuckooConfig::validate);

  py::class_<bench::BenchmarkSpec>(m, "Benchmark")
      .def_readonly("name", &bench::BenchmarkSpec::name)
      .def_readonly("default_dim", &bench::BenchmarkSpec::default_dim)
      .def_readonly("optimum_position", &bench::BenchmarkSpec::optimum_position)
      .def_readonly("optimum_value", &bench::BenchmarkSpec::optimum_value)
      .def_property_readonly("bounds", &bench::BenchmarkSpec::bounds)
      .def_property_readonly("dim", &bench::BenchmarkSpec::dim)
      .def("__call__", [](const bench::BenchmarkSpec& b, const Vector& x) {
        if (x.size() != b.dim()) throw InvalidArgument("dimension mismatch");
        return b.objective.evaluate(x);
      });

  m.def("de_jong", [](const Vector& x) { return call(bench::de_jong, x); });
  m.def("rosenbrock", [](const Vector& x) { return call(bench::rosenbrock, x); });
  m.def("ackley", [](const Vector& x) { return call(bench::ackley, x); });
  m.def("rastrigin", [](const Vector& x) { return call(bench::rastrigin, x); });
  m.def("available", &bench::available);
  m.def("benchmark", &bench::registry, py::arg("name"), py::arg("dim") = std::nullopt);

  m.def(
      "hoopoe_config",
      [](const bench::BenchmarkSpec& b, std::uint64_t budget) {
        return harness::make_hoopoe_config(b, budget);
      },
      py::arg("benchmark"), py::arg("budget") = 10000);
  m.def(
      "cuckoo_config",
      [](const bench::BenchmarkSpec& b, std::uint64_t budget) {
        return harness::make_cuckoo_config(b, budget);
      },
      py::arg("benchmark"), py::arg("budget") = 10000);

  m.def(
      "run_hoopoe",
      [](const HoopoeConfig& c, const bench::BenchmarkSpec& b) { return run(c, b.objective); },
      py::arg("config"), py::arg("benchmark"), py::call_guard<py::gil_scoped_release>());
  m.def(
      "run_cuckoo",
      [](const CuckooConfig& c, const bench::BenchmarkSpec& b) { return cuckoo_run(c, b.objective); },
      py::arg("config"), py::arg("benchmark"), py::call_guard<py::gil_scoped_release>());
  m.def(
      "minimize_hoopoe",
      [](py::function f, Bounds bounds, const HoopoeConfig& c) {
        return run(c, python_objective(std::move(f), std::move(bounds), "python"));
      },
      py::arg("f"), py::arg("bounds"), py::arg("config"));
  m.def(
      "minimize_cuckoo",
      [](py::function f, Bounds bounds, const CuckooConfig& c) {
        return cuckoo_run(c, python_objective(std::move(f), std::move(bounds), "python"));
      },
      py::arg("f"), py::arg("bounds"), py::arg("config"));

  m.def("cli_main", [](std::vector<std::string> args) {
    args.insert(args.begin(), "hoopoe");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    py::scoped_ostream_redirect out;
    py::scoped_estream_redirect err;
    return harness::cli_main(static_cast<int>(argv.size()), argv.data());
  });
}
