#pragma once

#include <vector>

#include "sqrw/common.hpp"
#include "sqrw/multiport.hpp"

namespace sqrw {

/// Symmetry-reduced state: one amplitude per (layer, orientation) class.
/// up(w) = psi_{w,+} for w = 0..d-1, down(w) = psi_{w,-} for w = 1..d.
class LayerState {
 public:
  explicit LayerState(int d);

  int dim() const { return d_; }

  Complex& up(int w);
  const Complex& up(int w) const;
  Complex& down(int w);
  const Complex& down(int w) const;

  /// Sum_w C(d,w) [(d-w)|psi_{w,+}|^2 + w|psi_{w,-}|^2]: the norm of the
  /// embedded full state.
  double edge_norm() const;

  /// Sum_w C(d,w)^2 (|psi_{w,+}|^2 + |psi_{w,-}|^2), with absent classes as 0.
  double binomial_squared_norm() const;

  /// Probability of finding the photon on an edge leaving layer w.
  double layer_probability(int w) const;
  std::vector<double> layer_probabilities() const;

 private:
  int d_;
  ComplexVector up_;
  ComplexVector down_;
};

enum class LayerInit { Origin, Corners, Middle };

/// psi_{0,+} = 1/sqrt(d).
LayerState origin_layer_state(int d);

/// psi_{0,+} = psi_{d,-} = 1/sqrt(2d).
LayerState corners_layer_state(int d);

/// Equal psi_{w,+} and psi_{w,-} at w = d/2 + 1, scaled to unit edge norm.
/// Only the classes that exist at that layer are populated (w = d has no up).
LayerState middle_layer_state(int d);

LayerState make_layer_state(LayerInit init, int d);

/// One step of the layer recursion. Absent neighbour classes contribute zero.
LayerState reduced_step(const LayerState& s, const MultiportCoeffs& c);

/// psi_{d,-}(d) = [t(d-1) + r] (d-1)! t^{d-1} / sqrt(d), assembled in log space
/// for large d.
Complex hitting_amplitude_closed_form(int d, const MultiportCoeffs& c);

/// d! / d^d.
double classical_hitting_probability(int d);

/// Layer-level probabilities P_w, w = 0..d, of the simple random walk.
struct ClassicalLayerDist {
  std::vector<double> p;

  int dim() const { return static_cast<int>(p.size()) - 1; }
  double total() const;
  /// Probability of one particular vertex of layer w: P_w / C(d,w).
  double per_vertex(int w) const;
};

ClassicalLayerDist classical_origin_dist(int d);

/// P'_w = ((d-w+1)/d) P_{w-1} + ((w+1)/d) P_{w+1}.
ClassicalLayerDist classical_walk_step(const ClassicalLayerDist& p);

struct HittingRow {
  int d = 0;
  double p_classical = 0.0;
  double p_quantum = 0.0;
  double ratio = 0.0;
};

/// Rows for d = 2..d_max with Grover multiports.
std::vector<HittingRow> hitting_ratio_table(int d_max);

/// Row n holds the layer probabilities after n reduced steps, n = 0..n_max.
std::vector<std::vector<double>> layer_distribution_series(const MultiportCoeffs& c,
                                                           const LayerState& init,
                                                           int n_max);

/// Sum_w w p(w).
double layer_mean(const std::vector<double>& probabilities);

struct ConservationRow {
  int step = 0;
  double edge_norm = 0.0;
  double binomial_squared_norm = 0.0;
};

/// Both candidate conserved quantities per step, n = 0..steps.
std::vector<ConservationRow> conservation_audit(const MultiportCoeffs& c,
                                                const LayerState& init, int steps);

}  // namespace sqrw
