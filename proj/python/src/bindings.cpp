#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "lisakit/analysis.hpp"
#include "lisakit/error.hpp"
#include "lisakit/fixtures.hpp"
#include "lisakit/report.hpp"
#include "lisakit/verification.hpp"

namespace py = pybind11;
using namespace lisakit;

namespace {

using Rows = std::vector<std::vector<double>>;

py::object to_python(const report::Json& j) {
  switch (j.type()) {
    case report::Json::value_t::null:
      return py::none();
    case report::Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case report::Json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case report::Json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case report::Json::value_t::number_float:
      return py::float_(j.get<double>());
    case report::Json::value_t::string:
      return py::str(j.get<std::string>());
    case report::Json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(to_python(item));
      return std::move(out);
    }
    case report::Json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) {
        out[py::str(it.key())] = to_python(it.value());
      }
      return std::move(out);
    }
    default:
      return py::none();
  }
}

Dataset make_dataset(const Rows& distances, const std::vector<double>& values,
                     std::optional<std::vector<std::string>> labels,
                     const std::string& kernel) {
  std::vector<std::string> names;
  if (labels) {
    names = *labels;
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) {
      names.push_back("u" + std::to_string(i + 1));
    }
  }
  return Dataset{DistanceMatrix(names, SquareMatrix::from_rows(distances)),
                 AttributeVector(names, values), parse_kernel(kernel)};
}

py::tuple dataset_tuple(const Dataset& d) {
  return py::make_tuple(d.distances.labels(), d.distances.values().to_rows(),
                        d.values.values());
}

py::dict compute(const Rows& distances, const std::vector<double>& values,
                 std::optional<std::vector<std::string>> labels,
                 const std::string& kernel, const std::string& variants) {
  const auto v = report::parse_variants(variants);
  const auto a = analyze(make_dataset(distances, values, std::move(labels), kernel));
  report::Json config;
  config["kernel"] = kernel;
  config["variants"] = variants;
  return to_python(report::compute_json(config, a, v, run_all_checks(a)));
}

py::dict verify(const Rows& distances, const std::vector<double>& values,
                std::optional<std::vector<std::string>> labels,
                const std::string& kernel) {
  const auto a = analyze(make_dataset(distances, values, std::move(labels), kernel));
  return to_python(report::report_json(run_all_checks(a)));
}

py::dict plot(const Rows& distances, const std::vector<double>& values,
              std::optional<std::vector<std::string>> labels,
              const std::string& kernel) {
  const auto a = analyze(make_dataset(distances, values, std::move(labels), kernel));
  return to_python(report::plot_json(report::plot_data(a)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Global and local Moran's I / Geary's C with identity checks";

  static py::exception<Error> error(m, "LisaKitError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string message =
          "[" + std::string(to_string(e.code())) + "] " + e.what();
      py::set_error(error, message.c_str());
    }
  });

  m.def("compute", &compute, py::arg("distances"), py::arg("values"),
        py::arg("labels") = py::none(), py::arg("kernel") = "inverse",
        py::arg("variants") = "all",
        "Globals, per-unit LISAs, Sum/Expected totals and checks as a dict.");
  m.def("verify", &verify, py::arg("distances"), py::arg("values"),
        py::arg("labels") = py::none(), py::arg("kernel") = "inverse",
        "Identity suite and refutation audit as a dict.");
  m.def("plot_data", &plot, py::arg("distances"), py::arg("values"),
        py::arg("labels") = py::none(), py::arg("kernel") = "inverse",
        "MI1/MI2/MI3 points with the two line fits.");
  m.def(
      "demo_dataset",
      [](int year) { return dataset_tuple(bth::dataset(year)); },
      py::arg("year"),
      "(labels, distances, population) for the 13-city census of 2000 or 2010.");
  m.def(
      "random_dataset",
      [](std::size_t n, std::uint64_t seed, const std::string& kernel) {
        return dataset_tuple(random_instance(n, seed, parse_kernel(kernel)));
      },
      py::arg("n"), py::arg("seed"), py::arg("kernel") = "inverse",
      "(labels, distances, values) for a reproducible synthetic instance.");
}
