#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aluthge/corpus.hpp"
#include "aluthge/dynamics.hpp"
#include "aluthge/linalg.hpp"
#include "aluthge/means.hpp"
#include "aluthge/numrange.hpp"
#include "aluthge/shiftlab.hpp"
#include "aluthge/transform.hpp"

namespace py = pybind11;
using namespace aluthge;

namespace {

OperatorMean mean_from_arg(const std::string& descriptor) { return parse_mean(descriptor); }

} // namespace

PYBIND11_MODULE(aluthgelab, m) {
  m.doc() = "generalized Aluthge transformations of complex matrices with respect to "
            "Kubo-Ando operator means";

  py::register_exception<Error>(m, "AluthgeError");

  py::class_<OperatorMean>(m, "OperatorMean")
      .def(py::init(&mean_from_arg), py::arg("descriptor"),
           "build from a descriptor such as 'geometric:0.5', 'power:0.5:t=-1', 'logarithmic'")
      .def_property_readonly("name", &OperatorMean::name)
      .def_property_readonly("weight", &OperatorMean::weight)
      .def_property_readonly("descriptor", &OperatorMean::descriptor)
      .def("f", &OperatorMean::f, py::arg("x"))
      .def("perspective", &OperatorMean::perspective, py::arg("s"), py::arg("t"))
      .def("__repr__",
           [](const OperatorMean& mean) { return "OperatorMean('" + mean.descriptor() + "')"; });

  m.def("perspective_matrix",
        [](const std::string& mean, const Eigen::VectorXd& s) {
          return perspective_matrix(mean_from_arg(mean), s);
        },
        py::arg("mean"), py::arg("s"));

  m.def("dominance_check",
        [](const std::string& mean_f, const std::string& mean_g, const Eigen::VectorXd& s,
           double tol) {
          DominanceResult r = dominance_check(mean_from_arg(mean_f), mean_from_arg(mean_g), s, tol);
          return py::make_tuple(r.dominated, r.min_eigenvalue);
        },
        py::arg("mean_f"), py::arg("mean_g"), py::arg("s"), py::arg("tol") = 1e-10,
        "returns (dominated, min_eigenvalue) for the perspective ratio matrix");

  m.def("polar_decompose",
        [](const Matrix& t) {
          PolarParts p = polar_decompose(t);
          return py::make_tuple(p.isometry, p.positive, p.rank);
        },
        py::arg("t"), "canonical polar decomposition (U, |T|, rank)");

  m.def("hermitian_eig",
        [](const Matrix& a) {
          SpectralData d = hermitian_eig(a);
          return py::make_tuple(d.eigenvectors, d.eigenvalues);
        },
        py::arg("a"), "(eigenvectors, ascending eigenvalues) of a Hermitian matrix");

  m.def("normality_defect", &normality_defect, py::arg("a"));
  m.def("spectral_norm", &spectral_norm, py::arg("a"));

  m.def("aluthge_transform",
        [](const Matrix& t, const std::string& mean) {
          return aluthge_transform(t, mean_from_arg(mean)).delta;
        },
        py::arg("t"), py::arg("mean") = "geometric:0.5");

  m.def("aluthge_closed_form",
        [](const Matrix& t, const std::string& kind, double lam) {
          if (kind == "geometric") return aluthge_closed_form(t, ClosedFormKind::Geometric, lam);
          if (kind == "arithmetic") return aluthge_closed_form(t, ClosedFormKind::Arithmetic, lam);
          throw Error("closed form kind must be 'geometric' or 'arithmetic'");
        },
        py::arg("t"), py::arg("kind"), py::arg("lam"));

  m.def("aluthge_quadrature_oracle",
        [](const Matrix& t, const std::string& mean) {
          return aluthge_quadrature_oracle(t, mean_from_arg(mean));
        },
        py::arg("t"), py::arg("mean"));

  m.def("iterate",
        [](const Matrix& t, const std::string& mean, int max_steps, double tol) {
          IterationTrace trace = iterate(t, mean_from_arg(mean), max_steps, tol);
          py::dict out;
          out["step_deltas"] = trace.step_deltas;
          out["defects"] = trace.defects;
          out["converged"] = trace.converged;
          out["steps"] = trace.steps;
          out["rate_estimate"] = trace.rate_estimate;
          out["last"] = trace.last;
          if (trace.limit) out["limit"] = *trace.limit;
          return out;
        },
        py::arg("t"), py::arg("mean") = "arithmetic:0.5", py::arg("max_steps") = 2000,
        py::arg("tol") = 1e-10);

  m.def("arithmetic_iterate_closed_form", &arithmetic_iterate_closed_form, py::arg("t"),
        py::arg("n"));
  m.def("predict_arithmetic_limit", &predict_arithmetic_limit, py::arg("t"),
        py::arg("phase_tol") = 1e-8);

  m.def("step_weights",
        [](const std::vector<double>& weights, const std::string& mean) {
          return step_weights(WeightSequence{weights, 0, ""}, mean_from_arg(mean)).weights;
        },
        py::arg("weights"), py::arg("mean"));

  m.def("first_weight_closed_form",
        [](const std::vector<double>& alpha, int n, double lam, const std::string& kind) {
          if (kind == "arithmetic")
            return first_weight_closed_form(alpha, n, lam, FirstWeightKind::Arithmetic);
          if (kind == "harmonic")
            return first_weight_closed_form(alpha, n, lam, FirstWeightKind::Harmonic);
          throw Error("first-weight kind must be 'arithmetic' or 'harmonic'");
        },
        py::arg("alpha"), py::arg("n"), py::arg("lam"), py::arg("kind"));

  m.def("build_oscillating_weights",
        [](double a, double b, int levels, double lam) {
          OscillatingWeights osc = build_oscillating_weights(a, b, levels, lam);
          return py::make_tuple(osc.weights, osc.switch_points);
        },
        py::arg("a"), py::arg("b"), py::arg("levels"), py::arg("lam") = 0.5,
        "returns (weights, switch_points)");

  m.def("sandwich_trace",
        [](const std::vector<double>& alpha, const std::string& mean, int n) {
          SandwichTrace trace = sandwich_trace(alpha, mean_from_arg(mean), n);
          return py::make_tuple(trace.gamma0, trace.lower, trace.upper);
        },
        py::arg("alpha"), py::arg("mean"), py::arg("n"),
        "returns (gamma0, harmonic lower bound, arithmetic upper bound)");

  m.def("numerical_range",
        [](const Matrix& t, int n_angles) {
          RangeBoundary boundary = numerical_range(t, n_angles);
          return py::make_tuple(boundary.points, boundary.angles, boundary.support_values);
        },
        py::arg("t"), py::arg("n_angles") = 720,
        "returns (boundary points, angles, support values)");

  m.def("range_included",
        [](const Matrix& inner, const Matrix& outer, int n_angles, double tol) {
          InclusionResult r =
              range_included(numerical_range(inner, n_angles), numerical_range(outer, n_angles), tol);
          return py::make_tuple(r.included, r.max_violation);
        },
        py::arg("inner"), py::arg("outer"), py::arg("n_angles") = 720, py::arg("tol") = 1e-9,
        "support-function inclusion of W(inner) in W(outer)");

  m.def("random_matrix",
        [](const std::string& kind, int m_dim, std::uint64_t seed) {
          corpus::Rng rng(seed);
          return corpus::make(corpus::parse_kind(kind), rng, m_dim);
        },
        py::arg("kind"), py::arg("m"), py::arg("seed"),
        "seeded test matrix: invertible | singular | normal | nearly-normal | shift-truncation");
}
