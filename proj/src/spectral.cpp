#include "sqrw/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "sqrw/circuit.hpp"
#include "sqrw/full_evolution.hpp"

namespace sqrw {

namespace {

void require_dense(HypercubeDim dim, int cap) {
  if (dim.value() > cap) {
    throw ResourceError("dense spectral work for d=" + std::to_string(dim.value()) +
                        " exceeds the cap d <= " + std::to_string(cap));
  }
}

double sign_of_bit(Vertex k, HypercubeDim dim, int a) {
  return (k.bits & dim.generator(a)) ? -1.0 : 1.0;
}

}  // namespace

FullState translation_apply(const FullState& state, Vertex b) {
  const HypercubeDim dim = state.dim();
  if (b.bits >= dim.vertex_count()) throw IndexError("translation vector out of range");
  FullState out(dim);
  for (std::uint64_t x = 0; x < dim.vertex_count(); ++x) {
    const auto src = state.edges_of(x);
    std::copy(src.begin(), src.end(), out.edges_of(x ^ b.bits).begin());
  }
  return out;
}

int character(Vertex k, Vertex b) { return (std::popcount(k.bits & b.bits) & 1) ? -1 : 1; }

FullState fourier_basis_state(Vertex k, Direction a, HypercubeDim dim) {
  if (k.bits >= dim.vertex_count()) throw IndexError("momentum label out of range");
  FullState out(dim);
  const double norm = std::pow(2.0, -0.5 * dim.value());
  for (std::uint64_t x = 0; x < dim.vertex_count(); ++x) {
    out.at(Vertex{x}, a) = norm * character(k, Vertex{x});
  }
  return out;
}

BlockMatrix block_matrix(Vertex k, HypercubeDim dim, const MultiportCoeffs& c) {
  if (c.degree != dim.value()) throw ShapeError("multiport degree must equal the dimension");
  if (k.bits >= dim.vertex_count()) throw IndexError("momentum label out of range");
  Eigen::MatrixXcd m = multiport_matrix(c);
  for (int j = 1; j <= dim.value(); ++j) m.col(j - 1) *= sign_of_bit(k, dim, j);
  return {k, std::move(m)};
}

std::vector<LabelledEigenvalue> full_spectrum_via_blocks(HypercubeDim dim, const MultiportCoeffs& c,
                                                         int dense_cap) {
  require_dense(dim, dense_cap);
  const int d = dim.value();
  const auto nk = static_cast<std::int64_t>(dim.vertex_count());
  std::vector<LabelledEigenvalue> out(dim.edge_count());
  // Block k owns slots k * d .. k * d + d - 1.
#pragma omp parallel for schedule(static)
  for (std::int64_t ki = 0; ki < nk; ++ki) {
    const Vertex k{static_cast<std::uint64_t>(ki)};
    const BlockMatrix block = block_matrix(k, dim, c);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(block.entries, false);
    for (int i = 0; i < d; ++i) {
      out[static_cast<std::size_t>(ki) * static_cast<std::size_t>(d) + static_cast<std::size_t>(i)] = {
          k, solver.eigenvalues()(i)};
    }
  }
  return out;
}

std::vector<Complex> dense_spectrum(HypercubeDim dim, const MultiportCoeffs& c, int dense_cap) {
  require_dense(dim, dense_cap);
  const EvolutionConfig cfg(dim, c);
  const Eigen::MatrixXcd u = dense_operator(dim, [&cfg](const FullState& s) { return step(s, cfg); });
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(u, false);
  const Eigen::VectorXcd ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(b.size(), false);
  double worst = 0.0;
  for (const Complex& z : a) {
    std::size_t best = b.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double dist = std::abs(z - b[j]);
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    used[best] = true;
    worst = std::max(worst, best_dist);
  }
  return worst;
}

Eigen::MatrixXcd fourier_basis_matrix(HypercubeDim dim, int dense_cap) {
  require_dense(dim, dense_cap);
  const int d = dim.value();
  const auto n = static_cast<Eigen::Index>(dim.edge_count());
  Eigen::MatrixXcd f(n, n);
  for (std::uint64_t k = 0; k < dim.vertex_count(); ++k) {
    for (int a = 1; a <= d; ++a) {
      const FullState v = fourier_basis_state(Vertex{k}, Direction{a}, dim);
      const auto col = static_cast<Eigen::Index>(k * static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(a - 1));
      for (Eigen::Index row = 0; row < n; ++row) f(row, col) = v[static_cast<std::size_t>(row)];
    }
  }
  return f;
}

double max_off_block_element(HypercubeDim dim, const MultiportCoeffs& c, int dense_cap) {
  const Eigen::MatrixXcd f = fourier_basis_matrix(dim, dense_cap);
  const EvolutionConfig cfg(dim, c);
  const Eigen::MatrixXcd u = dense_operator(dim, [&cfg](const FullState& s) { return step(s, cfg); });
  const Eigen::MatrixXcd ut = f.adjoint() * u * f;
  const Eigen::Index d = dim.value();
  double worst = 0.0;
  for (Eigen::Index col = 0; col < ut.cols(); ++col) {
    for (Eigen::Index row = 0; row < ut.rows(); ++row) {
      if (row / d == col / d) continue;
      worst = std::max(worst, std::abs(ut(row, col)));
    }
  }
  return worst;
}

Vertex rotate_vertex(Vertex x, HypercubeDim dim) {
  // Character a sits at bit d - a; moving it to character a + 1 is a right
  // shift, and character d wraps around to character 1.
  const std::uint64_t low = x.bits & 1U;
  return Vertex{(x.bits >> 1) | (low << (dim.value() - 1))};
}

FullState rotation_apply(const FullState& state) {
  const HypercubeDim dim = state.dim();
  const int d = dim.value();
  FullState out(dim);
  for (std::uint64_t x = 0; x < dim.vertex_count(); ++x) {
    const Vertex rx = rotate_vertex(Vertex{x}, dim);
    for (int a = 1; a <= d; ++a) {
      out.at(rx, Direction{a % d + 1}) = state.at(Vertex{x}, Direction{a});
    }
  }
  return out;
}

FullState rotation_apply_about(const FullState& state, Vertex x) {
  return translation_apply(rotation_apply(translation_apply(state, x)), x);
}

std::vector<LiftedEigenvector> lift_block_eigenvectors(HypercubeDim dim, const MultiportCoeffs& c,
                                                       int dense_cap) {
  require_dense(dim, dense_cap);
  const int d = dim.value();
  std::vector<LiftedEigenvector> out;
  for (std::uint64_t k = 0; k < dim.vertex_count(); ++k) {
    const BlockMatrix block = block_matrix(Vertex{k}, dim, c);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(block.entries, true);
    for (int i = 0; i < d; ++i) {
      const Eigen::VectorXcd coeff = solver.eigenvectors().col(i);
      FullState v(dim);
      for (int a = 1; a <= d; ++a) {
        const FullState basis = fourier_basis_state(Vertex{k}, Direction{a}, dim);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] += coeff(a - 1) * basis[j];
      }
      out.push_back({Vertex{k}, solver.eigenvalues()(i), std::move(v)});
    }
  }
  return out;
}

double eigen_recurrence_residual(const FullState& gamma, Complex lambda, const MultiportCoeffs& c) {
  const HypercubeDim dim = gamma.dim();
  const int d = dim.value();
  if (c.degree != d) throw ShapeError("multiport degree must equal the dimension");
  double worst = 0.0;
  for (std::uint64_t y = 0; y < dim.vertex_count(); ++y) {
    for (int b = 1; b <= d; ++b) {
      Complex lhs = c.r * gamma.at(Vertex{y ^ dim.generator(b)}, Direction{b});
      for (int a = 1; a <= d; ++a) {
        if (a == b) continue;
        lhs += c.t * gamma.at(Vertex{y ^ dim.generator(a)}, Direction{a});
      }
      worst = std::max(worst, std::abs(lhs - lambda * gamma.at(Vertex{y}, Direction{b})));
    }
  }
  return worst;
}

}  // namespace sqrw
