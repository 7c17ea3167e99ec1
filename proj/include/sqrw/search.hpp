#pragma once

#include <vector>

#include "sqrw/full_evolution.hpp"
#include "sqrw/hypercube.hpp"
#include "sqrw/multiport.hpp"

namespace sqrw {

enum class SuccessMetric {
  /// Probability on the edges leaving the marked vertex.
  Outgoing,
  /// Probability on the edges entering the marked vertex.
  Incoming,
};

/// Walk with Grover multiports everywhere except a phase-only multiport at the
/// marked vertex. The oracle's ancilla is folded into that conditional coin.
struct SearchConfig {
  HypercubeDim dim;
  Vertex marked;
  MultiportCoeffs marked_coeffs;
  int steps = 0;
  SuccessMetric metric = SuccessMetric::Outgoing;

  /// Marked coin r = -1, t = 0. Throws for a marked vertex out of range or n < 0.
  SearchConfig(HypercubeDim d, Vertex m, int n);
};

/// Grover everywhere, marked_coeffs at the marked vertex. The marked
/// coefficients must be unitary with degree d; a Grover marked coin gives the
/// unperturbed walk.
EvolutionConfig search_evolution_config(const SearchConfig& cfg);

FullState oracle_marked_step(const FullState& state, const SearchConfig& cfg);

struct SearchResult {
  /// success[n], n = 0..steps.
  std::vector<double> success;
  int peak_step = 0;
  double peak_probability = 0.0;
};

/// Runs from the uniform edge superposition.
SearchResult run_search(const SearchConfig& cfg);

double success_probability(const FullState& state, const SearchConfig& cfg);

}  // namespace sqrw
