#include "sqrw/search.hpp"

#include <string>

namespace sqrw {

SearchConfig::SearchConfig(HypercubeDim d, Vertex m, int n)
    : dim(d), marked(m), marked_coeffs{Complex(-1.0, 0.0), Complex(0.0, 0.0), d.value()}, steps(n) {
  if (steps < 0) throw InvalidArgument("search step count must be >= 0");
  if (marked.bits >= dim.vertex_count()) throw IndexError("marked vertex out of range");
}

EvolutionConfig search_evolution_config(const SearchConfig& cfg) {
  if (cfg.steps < 0) throw InvalidArgument("search step count must be >= 0");
  if (cfg.marked.bits >= cfg.dim.vertex_count()) throw IndexError("marked vertex out of range");
  EvolutionConfig ev(cfg.dim, grover_coeffs(cfg.dim.value()));
  ev.set_override(cfg.marked, cfg.marked_coeffs);
  return ev;
}

FullState oracle_marked_step(const FullState& state, const SearchConfig& cfg) {
  return step(state, search_evolution_config(cfg));
}

double success_probability(const FullState& state, const SearchConfig& cfg) {
  return cfg.metric == SuccessMetric::Outgoing ? vertex_probability(state, cfg.marked)
                                               : vertex_incoming_probability(state, cfg.marked);
}

SearchResult run_search(const SearchConfig& cfg) {
  const EvolutionConfig ev = search_evolution_config(cfg);
  FullState s = uniform_edge_state(cfg.dim);
  SearchResult res;
  res.success.reserve(static_cast<std::size_t>(cfg.steps) + 1);
  for (int n = 0; n <= cfg.steps; ++n) {
    if (n > 0) s = step(s, ev);
    const double p = success_probability(s, cfg);
    res.success.push_back(p);
    if (p > res.peak_probability) {
      res.peak_probability = p;
      res.peak_step = n;
    }
  }
  return res;
}

}  // namespace sqrw
