#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sqrw/full_evolution.hpp"
#include "sqrw/hypercube.hpp"
#include "sqrw/multiport.hpp"
#include "sqrw/reduced_layer.hpp"

namespace sqrw {

// Geometry of the hypercube with tails. Sites left of 0...0 are -1, -2, ...,
// sites right of 1...1 are d+1, d+2, .... Tails are chains of perfectly
// transmitting degree-2 multiports; a truncated tail keeps L sites.

/// Coefficients of the two boundary multiports (0...0 and 1...1).
/// degree == d + 1 couples the tails; degree == d decouples them, which turns
/// the boundary vertices into ordinary interior multiports.
struct BoundaryCoeffs {
  Complex r;
  Complex t;
  int degree = 0;

  MultiportCoeffs as_multiport() const { return {r, t, degree}; }
};

/// r~ = 2/(d+1) - 1, t~ = 2/(d+1), degree d + 1.
BoundaryCoeffs grover_boundary(int d);

/// Boundary vertices with interior coefficients and no tail coupling.
BoundaryCoeffs decoupled_boundary(const MultiportCoeffs& interior);

/// Amplitudes on one truncated tail. Index j = 0 is the site adjacent to the
/// hypercube; `inward[j]` moves toward the hypercube, `outward[j]` away from it.
struct Tail {
  ComplexVector inward;
  ComplexVector outward;

  explicit Tail(int length = 0) : inward(length), outward(length) {}
  int length() const { return static_cast<int>(inward.size()); }
  double squared_norm() const;
};

/// Layer amplitudes plus the two boundary exit edges and both tails.
struct ScatterState {
  LayerState layers;
  /// psi_{0,-}: edge 0...0 -> site -1.
  Complex exit_left;
  /// psi_{d,+}: edge 1...1 -> site d+1.
  Complex exit_right;
  Tail left;
  Tail right;

  ScatterState(int d, int tail_length);

  int dim() const { return layers.dim(); }
  int tail_length() const { return left.length(); }

  double total_probability() const;
};

/// Photon on the edge from site -1 into 0...0.
ScatterState source_scatter_state(int d, int tail_length);

/// Interior layers by the layer recursion, boundary vertices with the boundary
/// multiport, tails shifted ballistically. Throws TruncationError when an
/// outward amplitude sits on the last tail site.
ScatterState scatter_step(const ScatterState& s, const MultiportCoeffs& c,
                          const BoundaryCoeffs& b);

struct DetectionSeries {
  /// |psi_{d,+}(n)|^2, n = 0..n_max.
  std::vector<double> instantaneous;
  /// Sum_{m<=n} |psi_{d,+}(m)|^2: probability that has left toward the detector.
  std::vector<double> cumulative;
  /// Total probability per step (conservation check).
  std::vector<double> total;
};

/// Starts from the source state; tail_length 0 selects n_max + 2.
DetectionSeries detection_probability_series(int d, const MultiportCoeffs& c,
                                             const BoundaryCoeffs& b, int n_max,
                                             int tail_length = 0);

/// Full edge-resolved hypercube with tails (exponential cost).
class TailedFullState {
 public:
  TailedFullState(HypercubeDim dim, int tail_length);

  HypercubeDim dim() const { return cube_.dim(); }
  int tail_length() const { return left_.length(); }

  FullState& cube() { return cube_; }
  const FullState& cube() const { return cube_; }
  Complex& exit_left() { return exit_left_; }
  Complex exit_left() const { return exit_left_; }
  Complex& exit_right() { return exit_right_; }
  Complex exit_right() const { return exit_right_; }
  Tail& left() { return left_; }
  const Tail& left() const { return left_; }
  Tail& right() { return right_; }
  const Tail& right() const { return right_; }

  double total_probability() const;

 private:
  FullState cube_;
  Complex exit_left_;
  Complex exit_right_;
  Tail left_;
  Tail right_;
};

TailedFullState tailed_step(const TailedFullState& s, const MultiportCoeffs& c,
                            const BoundaryCoeffs& b);

/// Sum_j gamma_j (d-1)! t^{d-1} t~.
Complex interferometer_amplitude(std::span<const Complex> gamma, const MultiportCoeffs& c,
                                 const BoundaryCoeffs& b);

/// <1...1,+| U^d |psi_0> by edge-resolved simulation, psi_0 = Sum_j gamma_j |0...0;j>.
Complex interferometer_amplitude_simulated(std::span<const Complex> gamma,
                                           const MultiportCoeffs& c, const BoundaryCoeffs& b);

}  // namespace sqrw
