#include "sqrw/full_evolution.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace sqrw {

EvolutionConfig::EvolutionConfig(HypercubeDim dim, MultiportCoeffs coeffs)
    : dim_(dim), coeffs_(coeffs) {
  if (coeffs_.degree != dim.value()) throw ShapeError("multiport degree must equal the dimension");
  require_unitary(coeffs_);
}

void EvolutionConfig::set_override(Vertex x, const MultiportCoeffs& c) {
  if (x.bits >= dim_.vertex_count()) throw IndexError("override vertex out of range");
  if (c.degree != dim_.value()) throw ShapeError("override degree must equal the dimension");
  require_unitary(c);
  overrides_[x.bits] = c;
}

const MultiportCoeffs& EvolutionConfig::coeffs_at(std::uint64_t vertex) const {
  if (!overrides_.empty()) {
    if (auto it = overrides_.find(vertex); it != overrides_.end()) return it->second;
  }
  return coeffs_;
}

FullState step(const FullState& state, const EvolutionConfig& cfg) {
  if (!(state.dim() == cfg.dim())) throw ShapeError("state dimension does not match configuration");
  const HypercubeDim dim = cfg.dim();
  const int d = dim.value();
  const auto nv = static_cast<std::int64_t>(dim.vertex_count());
  FullState out(dim);
  const Complex* in = state.amplitudes().data();
  Complex* dst = out.amplitudes().data();

#pragma omp parallel if (nv >= 4096)
  {
    std::vector<Complex> arriving(static_cast<std::size_t>(d));
#pragma omp for schedule(static)
    for (std::int64_t yi = 0; yi < nv; ++yi) {
      const auto y = static_cast<std::uint64_t>(yi);
      // Edge |y+e_a; a> enters y along direction a.
      Complex total{};
      for (int a = 1; a <= d; ++a) {
        const std::uint64_t from = y ^ dim.generator(a);
        const Complex v = in[from * static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(a - 1)];
        arriving[static_cast<std::size_t>(a - 1)] = v;
        total += v;
      }
      const MultiportCoeffs& c = cfg.coeffs_at(y);
      const Complex diag = c.r - c.t;
      Complex* row = dst + y * static_cast<std::uint64_t>(d);
      for (int b = 0; b < d; ++b) row[b] = diag * arriving[static_cast<std::size_t>(b)] + c.t * total;
    }
  }
  return out;
}

FullState evolve(FullState state, const EvolutionConfig& cfg, int n) {
  if (n < 0) throw InvalidArgument("step count must be >= 0");
  for (int i = 0; i < n; ++i) state = step(state, cfg);
  return state;
}

double layer_probability(const FullState& state, int w) {
  const HypercubeDim dim = state.dim();
  if (w < 0 || w > dim.value()) throw IndexError("layer index out of range");
  double p = 0.0;
  for (std::uint64_t x = 0; x < dim.vertex_count(); ++x) {
    if (std::popcount(x) != w) continue;
    for (const Complex& z : state.edges_of(x)) p += std::norm(z);
  }
  return p;
}

std::vector<double> layer_probabilities(const FullState& state) {
  const HypercubeDim dim = state.dim();
  std::vector<double> p(static_cast<std::size_t>(dim.value()) + 1, 0.0);
  for (std::uint64_t x = 0; x < dim.vertex_count(); ++x) {
    double s = 0.0;
    for (const Complex& z : state.edges_of(x)) s += std::norm(z);
    p[static_cast<std::size_t>(std::popcount(x))] += s;
  }
  return p;
}

double vertex_probability(const FullState& state, Vertex x) {
  if (x.bits >= state.dim().vertex_count()) throw IndexError("vertex out of range");
  double p = 0.0;
  for (const Complex& z : state.edges_of(x.bits)) p += std::norm(z);
  return p;
}

double vertex_incoming_probability(const FullState& state, Vertex x) {
  const HypercubeDim dim = state.dim();
  if (x.bits >= dim.vertex_count()) throw IndexError("vertex out of range");
  double p = 0.0;
  for (int a = 1; a <= dim.value(); ++a) {
    p += std::norm(state.at(Vertex{x.bits ^ dim.generator(a)}, Direction{a}));
  }
  return p;
}

Complex quantum_hitting_amplitude_full(const EvolutionConfig& cfg) {
  const HypercubeDim dim = cfg.dim();
  const FullState s = evolve(initial_symmetric_state(dim), cfg, dim.value());
  return s.at(Vertex{dim.all_ones()}, Direction{1});
}

double quantum_hitting_probability(const EvolutionConfig& cfg) {
  return std::norm(quantum_hitting_amplitude_full(cfg));
}

}  // namespace sqrw
