#include "sqrw/hypercube.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>

#include "sqrw/reduced_layer.hpp"

namespace sqrw {

std::size_t memory_cap_bytes() {
  if (const char* env = std::getenv("SQRW_MEMORY_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultMemoryCapBytes;
}

HypercubeDim::HypercubeDim(int d) : d_(d) {
  if (d < 1 || d > kMaxDimension) {
    throw InvalidArgument("hypercube dimension must be in 1.." + std::to_string(kMaxDimension) +
                          ", got " + std::to_string(d));
  }
}

Vertex parse_vertex(std::string_view text, HypercubeDim dim) {
  if (static_cast<int>(text.size()) != dim.value()) {
    throw InvalidArgument("vertex '" + std::string(text) + "' must have exactly " +
                          std::to_string(dim.value()) + " bits");
  }
  std::uint64_t bits = 0;
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw InvalidArgument("vertex '" + std::string(text) + "' is not binary");
    bits = (bits << 1) | static_cast<std::uint64_t>(ch == '1');
  }
  return Vertex{bits};
}

std::string format_vertex(Vertex x, HypercubeDim dim) {
  std::string s(static_cast<std::size_t>(dim.value()), '0');
  for (int a = 1; a <= dim.value(); ++a) {
    if (x.bits & dim.generator(a)) s[static_cast<std::size_t>(a - 1)] = '1';
  }
  return s;
}

int hamming_layer(Vertex x) { return std::popcount(x.bits); }

std::size_t flat_index(Vertex x, Direction a, HypercubeDim dim) {
  if (a.value < 1 || a.value > dim.value()) {
    throw IndexError("direction " + std::to_string(a.value) + " out of range 1.." +
                     std::to_string(dim.value()));
  }
  if (x.bits >= dim.vertex_count()) throw IndexError("vertex out of range for dimension");
  return static_cast<std::size_t>(x.bits) * static_cast<std::size_t>(dim.value()) +
         static_cast<std::size_t>(a.value - 1);
}

void require_full_state_fits(HypercubeDim dim) {
  const std::size_t cap = memory_cap_bytes();
  // d * 2^d * 16 bytes, compared without overflow.
  const int d = dim.value();
  const long double bytes = static_cast<long double>(d) * std::ldexp(1.0L, d) * sizeof(Complex);
  if (bytes > static_cast<long double>(cap)) {
    throw ResourceError("full state for d=" + std::to_string(d) + " needs " +
                        std::to_string(static_cast<double>(bytes)) + " bytes, over the cap of " +
                        std::to_string(cap) + " (set SQRW_MEMORY_CAP to raise it)");
  }
}

FullState::FullState(HypercubeDim dim) : dim_(dim) {
  require_full_state_fits(dim);
  amp_.assign(dim.edge_count(), Complex{});
}

FullState::FullState(HypercubeDim dim, ComplexVector amplitudes)
    : dim_(dim), amp_(std::move(amplitudes)) {
  if (amp_.size() != dim.edge_count()) {
    throw ShapeError("state has " + std::to_string(amp_.size()) + " amplitudes, expected " +
                     std::to_string(dim.edge_count()));
  }
}

FullState initial_symmetric_state(HypercubeDim dim) {
  FullState s(dim);
  const double a = 1.0 / std::sqrt(static_cast<double>(dim.value()));
  for (int dir = 1; dir <= dim.value(); ++dir) s.at(Vertex{0}, Direction{dir}) = a;
  return s;
}

FullState uniform_edge_state(HypercubeDim dim) {
  FullState s(dim);
  const Complex a(1.0 / std::sqrt(static_cast<double>(dim.edge_count())), 0.0);
  for (auto& z : s.amplitudes()) z = a;
  return s;
}

FullState embed_layer_state(const LayerState& s, HypercubeDim dim) {
  if (s.dim() != dim.value()) throw ShapeError("layer state dimension does not match hypercube");
  FullState out(dim);
  const int d = dim.value();
  for (std::uint64_t x = 0; x < dim.vertex_count(); ++x) {
    const int w = std::popcount(x);
    auto edges = out.edges_of(x);
    for (int a = 1; a <= d; ++a) {
      const bool up = (x & dim.generator(a)) == 0;
      edges[static_cast<std::size_t>(a - 1)] = up ? s.up(w) : s.down(w);
    }
  }
  return out;
}

LayerState read_layer_state(const FullState& state) {
  const HypercubeDim dim = state.dim();
  const int d = dim.value();
  LayerState s(d);
  // Representative of layer w: the lowest w directions set, x = 1...10...0.
  for (int w = 0; w <= d; ++w) {
    std::uint64_t x = 0;
    for (int a = 1; a <= w; ++a) x |= dim.generator(a);
    if (w < d) s.up(w) = state.at(Vertex{x}, Direction{d});
    if (w > 0) s.down(w) = state.at(Vertex{x}, Direction{1});
  }
  return s;
}

void write_full_state_csv(std::ostream& out, const FullState& state) {
  const HypercubeDim dim = state.dim();
  out << "vertex_bits,direction,re,im\n";
  char buf[128];
  for (std::uint64_t x = 0; x < dim.vertex_count(); ++x) {
    const auto edges = state.edges_of(x);
    for (int a = 1; a <= dim.value(); ++a) {
      const Complex z = edges[static_cast<std::size_t>(a - 1)];
      if (std::abs(z) <= 1e-15) continue;
      std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", a, z.real(), z.imag());
      out << format_vertex(Vertex{x}, dim) << ',' << buf;
    }
  }
}

}  // namespace sqrw
