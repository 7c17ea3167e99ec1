#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "sqrw/hypercube.hpp"
#include "sqrw/multiport.hpp"

namespace sqrw {

/// Global unitary U = (+)_x U_x. Vertices listed in `overrides` scatter with
/// their own coefficients; all others use `coeffs`.
class EvolutionConfig {
 public:
  EvolutionConfig(HypercubeDim dim, MultiportCoeffs coeffs);

  HypercubeDim dim() const { return dim_; }
  const MultiportCoeffs& coeffs() const { return coeffs_; }

  /// Validates degree and unitarity.
  void set_override(Vertex x, const MultiportCoeffs& c);
  void clear_overrides() { overrides_.clear(); }
  bool has_overrides() const { return !overrides_.empty(); }

  const MultiportCoeffs& coeffs_at(std::uint64_t vertex) const;

 private:
  HypercubeDim dim_;
  MultiportCoeffs coeffs_;
  std::unordered_map<std::uint64_t, MultiportCoeffs> overrides_;
};

/// One application of U. Each output edge |y;b> gathers the d edges entering
/// y in ascending direction order, so parallel and serial runs agree bitwise.
FullState step(const FullState& state, const EvolutionConfig& cfg);

FullState evolve(FullState state, const EvolutionConfig& cfg, int n);

double layer_probability(const FullState& state, int w);
std::vector<double> layer_probabilities(const FullState& state);

/// Probability on the edges leaving x.
double vertex_probability(const FullState& state, Vertex x);

/// Probability on the edges entering x.
double vertex_incoming_probability(const FullState& state, Vertex x);

/// psi_{d,-} after d full steps from the symmetric origin state.
Complex quantum_hitting_amplitude_full(const EvolutionConfig& cfg);

/// |psi_{d,-}(d)|^2 from the full simulation.
double quantum_hitting_probability(const EvolutionConfig& cfg);

}  // namespace sqrw
