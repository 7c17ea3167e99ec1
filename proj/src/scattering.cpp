#include "sqrw/scattering.hpp"

#include <cmath>
#include <string>

namespace sqrw {

namespace {

bool coupled(const BoundaryCoeffs& b, int d) {
  if (b.degree == d + 1) return true;
  if (b.degree == d) return false;
  throw ShapeError("boundary multiport degree must be d (decoupled) or d+1 (tails attached)");
}

void check_boundary(const BoundaryCoeffs& b, const MultiportCoeffs& c, int d) {
  if (c.degree != d) throw ShapeError("interior multiport degree must equal the dimension");
  coupled(b, d);
  require_unitary(c);
  require_unitary(b.as_multiport());
}

// Advances both tails by one site. `exit` enters the tail's first outward
// slot; the returned value is the inward amplitude that reaches the hypercube.
Complex shift_tail(const Tail& in, Tail& out, Complex exit, const char* side) {
  const int len = in.length();
  if (len == 0) {
    if (exit != Complex{}) throw TruncationError(std::string(side) + " tail has zero length");
    return Complex{};
  }
  if (in.outward[static_cast<std::size_t>(len - 1)] != Complex{}) {
    throw TruncationError(std::string("amplitude reached the end of the truncated ") + side +
                          " tail; increase the tail length");
  }
  for (int j = len - 1; j > 0; --j) {
    out.outward[static_cast<std::size_t>(j)] = in.outward[static_cast<std::size_t>(j - 1)];
  }
  out.outward[0] = exit;
  for (int j = 0; j + 1 < len; ++j) {
    out.inward[static_cast<std::size_t>(j)] = in.inward[static_cast<std::size_t>(j + 1)];
  }
  out.inward[static_cast<std::size_t>(len - 1)] = Complex{};
  return in.inward[0];
}

}  // namespace

BoundaryCoeffs grover_boundary(int d) {
  const MultiportCoeffs g = grover_coeffs(d + 1);
  return {g.r, g.t, g.degree};
}

BoundaryCoeffs decoupled_boundary(const MultiportCoeffs& interior) {
  return {interior.r, interior.t, interior.degree};
}

double Tail::squared_norm() const { return sqrw::squared_norm(inward) + sqrw::squared_norm(outward); }

ScatterState::ScatterState(int d, int tail_length) : layers(d), left(tail_length), right(tail_length) {
  if (tail_length < 0) throw InvalidArgument("tail length must be >= 0");
}

double ScatterState::total_probability() const {
  return layers.edge_norm() + std::norm(exit_left) + std::norm(exit_right) + left.squared_norm() +
         right.squared_norm();
}

ScatterState source_scatter_state(int d, int tail_length) {
  if (tail_length < 1) throw InvalidArgument("the source needs a tail of length >= 1");
  ScatterState s(d, tail_length);
  s.left.inward[0] = 1.0;
  return s;
}

ScatterState scatter_step(const ScatterState& s, const MultiportCoeffs& c, const BoundaryCoeffs& b) {
  const int d = s.dim();
  check_boundary(b, c, d);
  const bool tails = coupled(b, d);
  ScatterState out(d, s.tail_length());

  const Complex left_in = shift_tail(s.left, out.left, s.exit_left, "left");
  const Complex right_in = shift_tail(s.right, out.right, s.exit_right, "right");

  const LayerState& in = s.layers;
  LayerState& nx = out.layers;
  const Complex t = c.t;
  const Complex r = c.r;

  // Interior vertices, layers 1..d-1.
  for (int w = 1; w < d; ++w) {
    nx.up(w) = t * static_cast<double>(w) * in.up(w - 1) +
               (t * static_cast<double>(d - w - 1) + r) * in.down(w + 1);
    nx.down(w) = t * static_cast<double>(d - w) * in.down(w + 1) +
                 (t * static_cast<double>(w - 1) + r) * in.up(w - 1);
  }

  // Vertex 0...0: d hypercube edges carrying psi_{1,-} plus the tail edge.
  const Complex from_above = in.down(1);
  const Complex from_below = in.up(d - 1);
  if (tails) {
    nx.up(0) = b.r * from_above + b.t * (static_cast<double>(d - 1) * from_above + left_in);
    out.exit_left = b.r * left_in + b.t * static_cast<double>(d) * from_above;
    nx.down(d) = b.r * from_below + b.t * (static_cast<double>(d - 1) * from_below + right_in);
    out.exit_right = b.r * right_in + b.t * static_cast<double>(d) * from_below;
  } else {
    nx.up(0) = (b.r + b.t * static_cast<double>(d - 1)) * from_above;
    nx.down(d) = (b.r + b.t * static_cast<double>(d - 1)) * from_below;
    if (left_in != Complex{} || right_in != Complex{}) {
      throw InvalidArgument("decoupled boundary cannot absorb tail amplitude");
    }
  }
  return out;
}

DetectionSeries detection_probability_series(int d, const MultiportCoeffs& c, const BoundaryCoeffs& b,
                                             int n_max, int tail_length) {
  if (n_max < 0) throw InvalidArgument("step count must be >= 0");
  if (tail_length == 0) tail_length = n_max + 2;
  ScatterState s = source_scatter_state(d, tail_length);
  DetectionSeries series;
  double absorbed = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) s = scatter_step(s, c, b);
    const double p = std::norm(s.exit_right);
    absorbed += p;
    series.instantaneous.push_back(p);
    series.cumulative.push_back(absorbed);
    series.total.push_back(s.total_probability());
  }
  return series;
}

TailedFullState::TailedFullState(HypercubeDim dim, int tail_length)
    : cube_(dim), left_(tail_length), right_(tail_length) {
  if (tail_length < 0) throw InvalidArgument("tail length must be >= 0");
}

double TailedFullState::total_probability() const {
  return cube_.squared_norm() + std::norm(exit_left_) + std::norm(exit_right_) +
         left_.squared_norm() + right_.squared_norm();
}

TailedFullState tailed_step(const TailedFullState& s, const MultiportCoeffs& c, const BoundaryCoeffs& b) {
  const HypercubeDim dim = s.dim();
  const int d = dim.value();
  check_boundary(b, c, d);
  const bool tails = coupled(b, d);
  TailedFullState out(dim, s.tail_length());

  const Complex left_in = shift_tail(s.left(), out.left(), s.exit_left(), "left");
  const Complex right_in = shift_tail(s.right(), out.right(), s.exit_right(), "right");
  if (!tails && (left_in != Complex{} || right_in != Complex{})) {
    throw InvalidArgument("decoupled boundary cannot absorb tail amplitude");
  }

  const std::uint64_t last = dim.all_ones();
  std::vector<Complex> arriving(static_cast<std::size_t>(d));
  for (std::uint64_t y = 0; y < dim.vertex_count(); ++y) {
    Complex total{};
    for (int a = 1; a <= d; ++a) {
      const Complex v = s.cube().at(Vertex{y ^ dim.generator(a)}, Direction{a});
      arriving[static_cast<std::size_t>(a - 1)] = v;
      total += v;
    }
    const bool boundary = y == 0 || y == last;
    Complex r = c.r;
    Complex t = c.t;
    Complex tail_in{};
    if (boundary) {
      r = b.r;
      t = b.t;
      tail_in = y == 0 ? left_in : right_in;
    }
    auto edges = out.cube().edges_of(y);
    for (int k = 0; k < d; ++k) {
      edges[static_cast<std::size_t>(k)] =
          (r - t) * arriving[static_cast<std::size_t>(k)] + t * (total + tail_in);
    }
    if (boundary && tails) {
      const Complex exit = r * tail_in + t * total;
      (y == 0 ? out.exit_left() : out.exit_right()) = exit;
    }
  }
  return out;
}

Complex interferometer_amplitude(std::span<const Complex> gamma, const MultiportCoeffs& c,
                                 const BoundaryCoeffs& b) {
  const int d = static_cast<int>(gamma.size());
  if (d < 1) throw InvalidArgument("gamma must have d >= 1 entries");
  if (c.degree != d) throw ShapeError("gamma length must equal the multiport degree");
  Complex sum{};
  for (const Complex& g : gamma) sum += g;
  const double paths = std::exp(log_factorial(d - 1));
  return sum * paths * std::pow(c.t, d - 1) * b.t;
}

Complex interferometer_amplitude_simulated(std::span<const Complex> gamma, const MultiportCoeffs& c,
                                           const BoundaryCoeffs& b) {
  const int d = static_cast<int>(gamma.size());
  const HypercubeDim dim(d);
  TailedFullState s(dim, d + 2);
  for (int j = 1; j <= d; ++j) s.cube().at(Vertex{0}, Direction{j}) = gamma[static_cast<std::size_t>(j - 1)];
  for (int n = 0; n < d; ++n) s = tailed_step(s, c, b);
  return s.exit_right();
}

}  // namespace sqrw
