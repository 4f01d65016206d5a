#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "envycut/commands.hpp"
#include "envycut/errors.hpp"

namespace py = pybind11;
using namespace envycut;

namespace {

py::tuple result_tuple(const CommandResult& r) { return py::make_tuple(r.report.dump(), r.exit_code); }

Json parse(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

PYBIND11_MODULE(_envycut, m) {
  m.doc() = "Envy-free cake cutting on the Kuhn triangulation.";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result([&]() { return py::exception<Error>(m, "EnvycutError"); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::object& type = error_type.get_stored();
      py::object err = type(py::str(e.what()));
      err.attr("exit_code") = static_cast<int>(e.exit_code());
      PyErr_SetObject(type.ptr(), err.ptr());
    }
  });

  m.def(
      "solve",
      [](const std::string& instance, Coord n, const std::string& epsilon, const std::string& k,
         const std::string& algo, bool trace, double timeout) {
        SolveRequest req;
        req.instance = parse(instance, "instance");
        req.n = n;
        req.epsilon = epsilon;
        req.k = k;
        req.algo = algo;
        req.trace = trace;
        req.timeout = timeout;
        CommandResult r;
        {
          py::gil_scoped_release release;
          r = run_solve(req);
        }
        return result_tuple(r);
      },
      py::arg("instance"), py::arg("n") = 0, py::arg("epsilon") = "", py::arg("k") = "", py::arg("algo") = "dnc",
      py::arg("trace") = false, py::arg("timeout") = 0.0,
      "Solve an instance given as JSON text. Returns (report_json, exit_code).");

  m.def(
      "verify",
      [](const std::string& instance, const std::string& solution) {
        return result_tuple(run_verify(parse(instance, "instance"), parse(solution, "solution")));
      },
      py::arg("instance"), py::arg("solution"), "Verify a solution. Returns (report_json, exit_code).");

  m.def(
      "gen",
      [](const std::string& kind, Coord n, std::uint64_t seed, int d, const std::string& delta) {
        GenRequest req;
        req.kind = kind;
        req.n = n;
        req.seed = seed;
        req.d = d;
        req.delta = delta;
        return run_gen(req).dump();
      },
      py::arg("kind") = "dp", py::arg("n") = 64, py::arg("seed") = 0, py::arg("d") = 2, py::arg("delta") = "1/1000000",
      "Generate an instance as JSON text.");

  m.def(
      "stromquist",
      [](const std::string& instance, const std::string& adversary, std::size_t queries, std::uint64_t seed,
         bool outside, bool list_queries) {
        StromquistRequest req;
        if (!instance.empty()) req.instance = parse(instance, "instance");
        req.adversary = adversary;
        req.queries = queries;
        req.seed = seed;
        req.outside = outside;
        req.list_queries = list_queries;
        return result_tuple(run_stromquist(req));
      },
      py::arg("instance") = "", py::arg("adversary") = "", py::arg("queries") = 0, py::arg("seed") = 0,
      py::arg("outside") = false, py::arg("list_queries") = false,
      "Run the moving-knife protocol. Returns (report_json, exit_code).");
}
