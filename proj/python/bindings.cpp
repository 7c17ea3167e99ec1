#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "sqrw/circuit.hpp"
#include "sqrw/full_evolution.hpp"
#include "sqrw/hypercube.hpp"
#include "sqrw/multiport.hpp"
#include "sqrw/reduced_layer.hpp"
#include "sqrw/scattering.hpp"
#include "sqrw/search.hpp"
#include "sqrw/spectral.hpp"

namespace py = pybind11;
using namespace sqrw;

namespace {

LayerInit parse_layer_init(const std::string& name) {
  if (name == "origin") return LayerInit::Origin;
  if (name == "corners") return LayerInit::Corners;
  if (name == "middle") return LayerInit::Middle;
  throw InvalidArgument("initial state must be origin, corners or middle, got '" + name + "'");
}

py::array_t<double> to_array(const std::vector<std::vector<double>>& rows) {
  const auto n = static_cast<py::ssize_t>(rows.size());
  const auto m = static_cast<py::ssize_t>(rows.empty() ? 0 : rows.front().size());
  py::array_t<double> out({n, m});
  auto view = out.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < n; ++i) {
    for (py::ssize_t j = 0; j < m; ++j) view(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return out;
}

template <typename T>
py::array_t<T> to_array(const std::vector<T>& v) {
  return py::array_t<T>(static_cast<py::ssize_t>(v.size()), v.data());
}

py::array_t<Complex> to_array(const Eigen::MatrixXcd& m) {
  py::array_t<Complex> out({static_cast<py::ssize_t>(m.rows()), static_cast<py::ssize_t>(m.cols())});
  auto view = out.mutable_unchecked<2>();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) view(i, j) = m(i, j);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_sqrw, m) {
  m.doc() = "Scattering quantum random walks on the hypercube";
  m.attr("__version__") = "0.1.0";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  auto invalid = py::register_exception<InvalidArgument>(m, "InvalidArgument", error.ptr());
  py::register_exception<CoefficientError>(m, "CoefficientError", invalid.ptr());
  py::register_exception<ShapeError>(m, "ShapeError", invalid.ptr());
  py::register_exception<IndexError>(m, "IndexError", invalid.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", error.ptr());
  py::register_exception<TruncationError>(m, "TruncationError", error.ptr());

  py::class_<MultiportCoeffs>(m, "MultiportCoeffs")
      .def(py::init([](Complex r, Complex t, int degree) { return MultiportCoeffs{r, t, degree}; }), py::arg("r"),
           py::arg("t"), py::arg("degree"))
      .def_readwrite("r", &MultiportCoeffs::r)
      .def_readwrite("t", &MultiportCoeffs::t)
      .def_readwrite("degree", &MultiportCoeffs::degree)
      .def("__repr__", [](const MultiportCoeffs& c) {
        return "MultiportCoeffs(r=" + py::repr(py::cast(c.r)).cast<std::string>() +
               ", t=" + py::repr(py::cast(c.t)).cast<std::string>() + ", degree=" + std::to_string(c.degree) + ")";
      });

  py::class_<UnitarityReport>(m, "UnitarityReport")
      .def_readonly("unitary", &UnitarityReport::unitary)
      .def_readonly("norm_residual", &UnitarityReport::norm_residual)
      .def_readonly("orthogonality_residual", &UnitarityReport::orthogonality_residual);

  m.def("grover_coeffs", &grover_coeffs, py::arg("d"));
  m.def("symmetric_coeffs", &symmetric_coeffs, py::arg("d"), py::arg("p"));
  m.def("phase_coeffs", &phase_coeffs, py::arg("d"), py::arg("phase"));
  m.def("parse_multiport", &parse_multiport_spec, py::arg("spec"), py::arg("d"),
        "Parse 'grover', 'symmetric:p=<x>' or 'custom:<re r>,<im r>,<re t>,<im t>'.");
  m.def("validate_unitarity", &validate_unitarity, py::arg("coeffs"));
  m.def("multiport_matrix", [](const MultiportCoeffs& c) { return to_array(multiport_matrix(c)); }, py::arg("coeffs"));
  m.def(
      "pseudo_eigensystem",
      [](const MultiportCoeffs& c) {
        std::vector<std::pair<Complex, int>> out;
        for (const auto& e : pseudo_eigensystem(c)) out.emplace_back(e.value, e.multiplicity);
        return out;
      },
      py::arg("coeffs"), "List of (eigenvalue, multiplicity).");

  m.def(
      "layer_series",
      [](const MultiportCoeffs& c, const std::string& init, int n_max) {
        return to_array(layer_distribution_series(c, make_layer_state(parse_layer_init(init), c.degree), n_max));
      },
      py::arg("coeffs"), py::arg("init") = "origin", py::arg("n_max") = 100,
      "p_n(w) from the reduced walk, shape (n_max + 1, d + 1).");
  m.def(
      "conservation_audit",
      [](const MultiportCoeffs& c, const std::string& init, int steps) {
        std::vector<std::vector<double>> rows;
        for (const auto& r : conservation_audit(c, make_layer_state(parse_layer_init(init), c.degree), steps)) {
          rows.push_back({static_cast<double>(r.step), r.edge_norm, r.binomial_squared_norm});
        }
        return to_array(rows);
      },
      py::arg("coeffs"), py::arg("init") = "origin", py::arg("steps") = 100,
      "Rows (step, edge_norm, binomial_squared_norm).");
  m.def("hitting_amplitude", &hitting_amplitude_closed_form, py::arg("d"), py::arg("coeffs"));
  m.def("classical_hitting_probability", &classical_hitting_probability, py::arg("d"));
  m.def(
      "hitting_ratio_table",
      [](int d_max) {
        std::vector<std::vector<double>> rows;
        for (const auto& r : hitting_ratio_table(d_max)) rows.push_back({double(r.d), r.p_classical, r.p_quantum, r.ratio});
        return to_array(rows);
      },
      py::arg("d_max"), "Rows (d, p_c, p_q, ratio) for d = 2..d_max.");

  m.def(
      "full_layer_series",
      [](const MultiportCoeffs& c, int steps, const std::string& init) {
        if (init != "uniform" && init != "origin-symmetric") {
          throw InvalidArgument("init must be origin-symmetric or uniform");
        }
        if (steps < 0) throw InvalidArgument("step count must be >= 0");
        const HypercubeDim dim(c.degree);
        FullState s = init == "uniform" ? uniform_edge_state(dim) : initial_symmetric_state(dim);
        const EvolutionConfig cfg(dim, c);
        std::vector<std::vector<double>> rows{layer_probabilities(s)};
        {
          py::gil_scoped_release release;
          for (int n = 0; n < steps; ++n) {
            s = step(s, cfg);
            rows.push_back(layer_probabilities(s));
          }
        }
        return py::make_tuple(to_array(rows), to_array(s.amplitudes()));
      },
      py::arg("coeffs"), py::arg("steps"), py::arg("init") = "origin-symmetric",
      "Full edge-state evolution. Returns (p_n(w) array, final amplitudes indexed x * d + a - 1).");

  m.def(
      "detection_series",
      [](const MultiportCoeffs& c, int n_max, int tail_length) {
        const int d = c.degree;
        const DetectionSeries s = detection_probability_series(d, c, grover_boundary(d), n_max, tail_length);
        py::dict out;
        out["instantaneous"] = to_array(s.instantaneous);
        out["cumulative"] = to_array(s.cumulative);
        out["total"] = to_array(s.total);
        return out;
      },
      py::arg("coeffs"), py::arg("n_max"), py::arg("tail_length") = 0,
      "Detection probabilities for a photon sent in from the left tail.");
  m.def(
      "interferometer_amplitude",
      [](const std::vector<Complex>& gamma, const MultiportCoeffs& c, bool simulate) {
        const auto b = grover_boundary(c.degree);
        return simulate ? interferometer_amplitude_simulated(gamma, c, b) : interferometer_amplitude(gamma, c, b);
      },
      py::arg("gamma"), py::arg("coeffs"), py::arg("simulate") = false);

  m.def(
      "run_search",
      [](int d, const std::string& marked, int steps, const std::string& metric, std::optional<double> phase) {
        const HypercubeDim dim(d);
        SearchConfig cfg(dim, parse_vertex(marked, dim), steps);
        if (metric == "incoming") {
          cfg.metric = SuccessMetric::Incoming;
        } else if (metric != "outgoing") {
          throw InvalidArgument("metric must be outgoing or incoming");
        }
        if (phase) cfg.marked_coeffs = phase_coeffs(d, *phase);
        SearchResult res;
        {
          py::gil_scoped_release release;
          res = run_search(cfg);
        }
        return py::make_tuple(to_array(res.success), res.peak_step, res.peak_probability);
      },
      py::arg("d"), py::arg("marked"), py::arg("steps"), py::arg("metric") = "outgoing",
      py::arg("phase") = py::none(), "Returns (success series, peak step, peak probability).");

  m.def(
      "block_spectrum",
      [](const MultiportCoeffs& c, int dense_cap) {
        std::vector<std::uint64_t> labels;
        std::vector<Complex> values;
        for (const auto& e : full_spectrum_via_blocks(HypercubeDim(c.degree), c, dense_cap)) {
          labels.push_back(e.k.bits);
          values.push_back(e.value);
        }
        return py::make_tuple(to_array(labels), to_array(values));
      },
      py::arg("coeffs"), py::arg("dense_cap") = kSpectralDenseCap,
      "Eigenvalues of U from the Fourier blocks: (k labels, values).");
  m.def(
      "dense_spectrum",
      [](const MultiportCoeffs& c, int dense_cap) { return to_array(dense_spectrum(HypercubeDim(c.degree), c, dense_cap)); },
      py::arg("coeffs"), py::arg("dense_cap") = kSpectralDenseCap);
  m.def("multiset_distance", &multiset_distance, py::arg("a"), py::arg("b"));

  m.def(
      "verify_circuit",
      [](const MultiportCoeffs& c, double tol) {
        const auto rep = verify_circuit(c.degree, c, tol);
        return py::make_tuple(rep.max_deviation, rep.pass);
      },
      py::arg("coeffs"), py::arg("tol") = 1e-12, "Returns (max elementwise deviation, pass).");
}
