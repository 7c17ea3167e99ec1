#include "sqrw/reduced_layer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sqrw {

LayerState::LayerState(int d) : d_(d) {
  if (d < 1) throw InvalidArgument("layer state dimension must be >= 1");
  up_.assign(static_cast<std::size_t>(d), Complex{});
  down_.assign(static_cast<std::size_t>(d), Complex{});
}

Complex& LayerState::up(int w) {
  if (w < 0 || w >= d_) throw IndexError("psi_{w,+} exists for w in 0..d-1, got w=" + std::to_string(w));
  return up_[static_cast<std::size_t>(w)];
}

const Complex& LayerState::up(int w) const { return const_cast<LayerState*>(this)->up(w); }

Complex& LayerState::down(int w) {
  if (w < 1 || w > d_) throw IndexError("psi_{w,-} exists for w in 1..d, got w=" + std::to_string(w));
  return down_[static_cast<std::size_t>(w - 1)];
}

const Complex& LayerState::down(int w) const { return const_cast<LayerState*>(this)->down(w); }

double LayerState::layer_probability(int w) const {
  if (w < 0 || w > d_) return 0.0;
  double edges = 0.0;
  if (w < d_) edges += (d_ - w) * std::norm(up_[static_cast<std::size_t>(w)]);
  if (w > 0) edges += w * std::norm(down_[static_cast<std::size_t>(w - 1)]);
  return binomial(d_, w) * edges;
}

std::vector<double> LayerState::layer_probabilities() const {
  std::vector<double> p(static_cast<std::size_t>(d_) + 1);
  for (int w = 0; w <= d_; ++w) p[static_cast<std::size_t>(w)] = layer_probability(w);
  return p;
}

double LayerState::edge_norm() const {
  double s = 0.0;
  for (int w = 0; w <= d_; ++w) s += layer_probability(w);
  return s;
}

double LayerState::binomial_squared_norm() const {
  double s = 0.0;
  for (int w = 0; w <= d_; ++w) {
    const double c = binomial(d_, w);
    double q = 0.0;
    if (w < d_) q += std::norm(up_[static_cast<std::size_t>(w)]);
    if (w > 0) q += std::norm(down_[static_cast<std::size_t>(w - 1)]);
    s += c * c * q;
  }
  return s;
}

LayerState origin_layer_state(int d) {
  LayerState s(d);
  s.up(0) = 1.0 / std::sqrt(static_cast<double>(d));
  return s;
}

LayerState corners_layer_state(int d) {
  LayerState s(d);
  const double a = 1.0 / std::sqrt(2.0 * d);
  s.up(0) = a;
  s.down(d) = a;
  return s;
}

LayerState middle_layer_state(int d) {
  LayerState s(d);
  const int w = std::min(d / 2 + 1, d);
  // Equal amplitude on every edge leaving layer w: C(d,w) d edges in total.
  const double a = 1.0 / std::sqrt(binomial(d, w) * d);
  if (w < d) s.up(w) = a;
  s.down(w) = a;
  return s;
}

LayerState make_layer_state(LayerInit init, int d) {
  switch (init) {
    case LayerInit::Origin:
      return origin_layer_state(d);
    case LayerInit::Corners:
      return corners_layer_state(d);
    case LayerInit::Middle:
      return middle_layer_state(d);
  }
  throw InvalidArgument("unknown layer initial state");
}

LayerState reduced_step(const LayerState& s, const MultiportCoeffs& c) {
  const int d = s.dim();
  if (c.degree != d) throw ShapeError("multiport degree does not match layer state dimension");
  LayerState out(d);
  const Complex t = c.t;
  const Complex r = c.r;
  // psi_{-1,+} and psi_{d+1,-} do not exist; their coefficients are zero anyway.
  for (int w = 0; w < d; ++w) {
    Complex v = (t * static_cast<double>(d - w - 1) + r) * s.down(w + 1);
    if (w > 0) v += t * static_cast<double>(w) * s.up(w - 1);
    out.up(w) = v;
  }
  for (int w = 1; w <= d; ++w) {
    Complex v = (t * static_cast<double>(w - 1) + r) * s.up(w - 1);
    if (w < d) v += t * static_cast<double>(d - w) * s.down(w + 1);
    out.down(w) = v;
  }
  return out;
}

Complex hitting_amplitude_closed_form(int d, const MultiportCoeffs& c) {
  if (d < 1) throw InvalidArgument("hitting amplitude needs d >= 1");
  if (c.degree != d) throw ShapeError("multiport degree does not match dimension");
  const Complex prefactor = c.t * static_cast<double>(d - 1) + c.r;
  if (d == 1) return prefactor;
  if (c.t == Complex{} || prefactor == Complex{}) return Complex{};
  const double log_mag = std::log(std::abs(prefactor)) + log_factorial(d - 1) +
                         (d - 1) * std::log(std::abs(c.t)) - 0.5 * std::log(static_cast<double>(d));
  const double phase = std::arg(prefactor) + (d - 1) * std::arg(c.t);
  return std::polar(std::exp(log_mag), phase);
}

double classical_hitting_probability(int d) {
  if (d < 1) throw InvalidArgument("classical hitting probability needs d >= 1");
  return std::exp(log_factorial(d) - d * std::log(static_cast<double>(d)));
}

double ClassicalLayerDist::total() const {
  double s = 0.0;
  for (double v : p) s += v;
  return s;
}

double ClassicalLayerDist::per_vertex(int w) const {
  return p.at(static_cast<std::size_t>(w)) / binomial(dim(), w);
}

ClassicalLayerDist classical_origin_dist(int d) {
  if (d < 1) throw InvalidArgument("classical walk needs d >= 1");
  ClassicalLayerDist dist;
  dist.p.assign(static_cast<std::size_t>(d) + 1, 0.0);
  dist.p[0] = 1.0;
  return dist;
}

ClassicalLayerDist classical_walk_step(const ClassicalLayerDist& dist) {
  const int d = dist.dim();
  if (d < 1) throw InvalidArgument("classical distribution needs at least two layers");
  ClassicalLayerDist out;
  out.p.assign(dist.p.size(), 0.0);
  const double inv_d = 1.0 / d;
  for (int w = 0; w <= d; ++w) {
    double v = 0.0;
    if (w > 0) v += (d - w + 1) * inv_d * dist.p[static_cast<std::size_t>(w - 1)];
    if (w < d) v += (w + 1) * inv_d * dist.p[static_cast<std::size_t>(w + 1)];
    out.p[static_cast<std::size_t>(w)] = v;
  }
  return out;
}

std::vector<HittingRow> hitting_ratio_table(int d_max) {
  if (d_max < 2) throw InvalidArgument("hitting table needs d_max >= 2");
  std::vector<HittingRow> rows;
  for (int d = 2; d <= d_max; ++d) {
    HittingRow row;
    row.d = d;
    row.p_classical = classical_hitting_probability(d);
    row.p_quantum = std::norm(hitting_amplitude_closed_form(d, grover_coeffs(d)));
    row.ratio = row.p_quantum / row.p_classical;
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::vector<double>> layer_distribution_series(const MultiportCoeffs& c,
                                                           const LayerState& init, int n_max) {
  if (n_max < 0) throw InvalidArgument("step count must be >= 0");
  if (std::abs(init.edge_norm() - 1.0) > 1e-10) {
    throw InvalidArgument("initial layer state must have unit edge norm");
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<std::size_t>(n_max) + 1);
  LayerState s = init;
  rows.push_back(s.layer_probabilities());
  for (int n = 1; n <= n_max; ++n) {
    s = reduced_step(s, c);
    rows.push_back(s.layer_probabilities());
  }
  return rows;
}

double layer_mean(const std::vector<double>& probabilities) {
  double m = 0.0;
  for (std::size_t w = 0; w < probabilities.size(); ++w) m += static_cast<double>(w) * probabilities[w];
  return m;
}

std::vector<ConservationRow> conservation_audit(const MultiportCoeffs& c, const LayerState& init,
                                                int steps) {
  std::vector<ConservationRow> rows;
  LayerState s = init;
  for (int n = 0; n <= steps; ++n) {
    if (n > 0) s = reduced_step(s, c);
    rows.push_back({n, s.edge_norm(), s.binomial_squared_norm()});
  }
  return rows;
}

}  // namespace sqrw
