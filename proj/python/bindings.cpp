#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bagcd/clustering.hpp"
#include "bagcd/error.hpp"
#include "bagcd/pencil.hpp"
#include "bagcd/pipeline.hpp"
#include "bagcd/reconstruction.hpp"
#include "bagcd/report.hpp"

namespace py = pybind11;
using namespace bagcd;

namespace {

NormSpec make_norm(const py::object& r, std::vector<double> weights) {
  int exponent = 2;
  if (py::isinstance<py::str>(r)) {
    if (r.cast<std::string>() != "inf") throw Error(ErrorCode::invalid_argument, "norm exponent must be an int or 'inf'");
    exponent = NormSpec::kInfinity;
  } else if (py::isinstance<py::float_>(r) && std::isinf(r.cast<double>())) {
    exponent = NormSpec::kInfinity;
  } else {
    exponent = r.cast<int>();
  }
  return NormSpec(exponent, std::move(weights));
}

// Leaked on purpose: the type must outlive interpreter teardown.
py::exception<Error>* error_type = nullptr;

std::vector<double> to_list(const BernsteinPoly& p) { return {p.coefficients().begin(), p.coefficients().end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Approximate GCD of polynomials in Bernstein bases";

  error_type = new py::exception<Error>(m, "BagcdError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = py::handle(*error_type)(e.what());
      err.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type->ptr(), err.ptr());
    }
  });

  py::class_<Interval>(m, "Interval")
      .def(py::init([](double a, double b) { return Interval{a, b}; }), py::arg("a") = 0.0, py::arg("b") = 1.0)
      .def_readonly("a", &Interval::a)
      .def_readonly("b", &Interval::b)
      .def("__repr__", [](const Interval& iv) {
        return "Interval(" + std::to_string(iv.a) + ", " + std::to_string(iv.b) + ")";
      });

  py::class_<RootCluster>(m, "RootCluster")
      .def(py::init([](Complex c, int mult) { return RootCluster{c, mult}; }), py::arg("center"),
           py::arg("multiplicity") = 1)
      .def_readonly("center", &RootCluster::center)
      .def_readonly("multiplicity", &RootCluster::multiplicity)
      .def("__repr__", [](const RootCluster& c) {
        return "RootCluster(" + std::to_string(c.center.real()) + "+" + std::to_string(c.center.imag()) + "j, " +
               std::to_string(c.multiplicity) + ")";
      });

  py::class_<BernsteinPoly>(m, "BernsteinPoly")
      .def(py::init([](std::vector<double> c, std::pair<double, double> iv) {
             return BernsteinPoly(std::move(c), Interval{iv.first, iv.second});
           }),
           py::arg("coefficients"), py::arg("interval") = std::pair<double, double>{0.0, 1.0})
      .def_property_readonly("degree", &BernsteinPoly::degree)
      .def_property_readonly("coefficients", &to_list)
      .def_property_readonly("interval", [](const BernsteinPoly& p) {
        return std::pair<double, double>{p.interval().a, p.interval().b};
      })
      .def("__call__", [](const BernsteinPoly& p, Complex x) { return p(x); })
      .def("__eq__", [](const BernsteinPoly& l, const BernsteinPoly& r) { return l == r; })
      .def("derivative", &derivative)
      .def("to_json", [](const BernsteinPoly& p) { return polynomial_to_json(p).dump(); });

  m.def("from_roots", [](const std::vector<RootCluster>& roots, double scale, std::pair<double, double> iv) {
    return poly_from_roots(roots, scale, Interval{iv.first, iv.second});
  }, py::arg("roots"), py::arg("scale") = 1.0, py::arg("interval") = std::pair<double, double>{0.0, 1.0});

  m.def("read_polynomial", [](const std::string& path) { return read_polynomial_file(path); }, py::arg("path"));

  m.def("roots", [](const BernsteinPoly& p) { return roots(p).roots; }, py::arg("p"),
        "Roots from the companion pencil, sorted by (real, imag).");

  m.def("cluster_roots", [](const std::vector<Complex>& r, double sigma) { return cluster_roots(r, sigma); },
        py::arg("roots"), py::arg("sigma"));

  m.def("distance", [](const BernsteinPoly& p, const BernsteinPoly& q, const py::object& r,
                       std::vector<double> weights) { return coefficient_distance(p, q, make_norm(r, weights)); },
        py::arg("p"), py::arg("q"), py::arg("norm_r") = 2, py::arg("weights") = std::vector<double>{});

  m.def("approximate_polynomial",
        [](const BernsteinPoly& p, const std::vector<RootCluster>& targets, const py::object& r,
           std::vector<double> weights) { return approximate_polynomial(p, targets, make_norm(r, weights)); },
        py::arg("p"), py::arg("targets"), py::arg("norm_r") = 2, py::arg("weights") = std::vector<double>{});

  py::class_<AgcdResult>(m, "AgcdResult")
      .def_readonly("degree", &AgcdResult::degree)
      .def_readonly("agcd_roots", &AgcdResult::agcd_roots)
      .def_readonly("agcd_poly", &AgcdResult::agcd_poly)
      .def_readonly("p_tilde", &AgcdResult::p_tilde)
      .def_readonly("q_tilde", &AgcdResult::q_tilde)
      .def_readonly("p_clusters", &AgcdResult::p_clusters)
      .def_readonly("q_clusters", &AgcdResult::q_clusters)
      .def_readonly("verified", &AgcdResult::verified)
      .def_property_readonly("distances", [](const AgcdResult& r) {
        py::dict d;
        d["coefficient_p"] = r.distances.coefficient_p;
        d["root_p"] = r.distances.root_p;
        d["coefficient_q"] = r.distances.coefficient_q;
        d["root_q"] = r.distances.root_q;
        return d;
      })
      .def_property_readonly("matching", [](const AgcdResult& r) {
        std::vector<std::tuple<int, int, int>> out;
        for (const MatchedPair& m : r.matching.pairs) out.emplace_back(m.left, m.right, m.multiplicity);
        return out;
      });

  m.def(
      "agcd",
      [](const BernsteinPoly& p, const BernsteinPoly& q, double sigma, double edge_factor, const py::object& r,
         std::vector<double> weights, bool enforce_unmatched_roots, bool raw_root_matching, double residual_tol) {
        AgcdOptions o;
        o.sigma = sigma;
        o.edge_factor = edge_factor;
        o.norm = make_norm(r, std::move(weights));
        o.enforce_unmatched_roots = enforce_unmatched_roots;
        o.cluster_before_matching = !raw_root_matching;
        o.residual_tol = residual_tol;
        return agcd(p, q, o);
      },
      py::arg("p"), py::arg("q"), py::arg("sigma"), py::arg("edge_factor") = 2.0, py::arg("norm_r") = 2,
      py::arg("weights") = std::vector<double>{}, py::arg("enforce_unmatched_roots") = false,
      py::arg("raw_root_matching") = false, py::arg("residual_tol") = 1e-8);

  m.def(
      "agcd_report",
      [](const BernsteinPoly& p, const BernsteinPoly& q, double sigma) {
        AgcdOptions o;
        o.sigma = sigma;
        return nlohmann::json(make_report(p, q, o, agcd(p, q, o), 0.0)).dump();
      },
      py::arg("p"), py::arg("q"), py::arg("sigma"), "Full report as a JSON string.");
}
