#include "sqrw/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sqrw/full_evolution.hpp"

namespace sqrw {

namespace {

void require_dense(int d, int cap) {
  if (d > cap) {
    throw ResourceError("dense operator for d=" + std::to_string(d) + " exceeds the cap d <= " +
                        std::to_string(cap));
  }
}

}  // namespace

CoinMatrix::CoinMatrix(const MultiportCoeffs& c) : c_(c) { require_unitary(c_); }

RegisterState apply_phicnot(const RegisterState& s, Direction a) {
  const HypercubeDim dim = s.dim();
  if (a.value < 1 || a.value > dim.value()) throw IndexError("phiCNOT control out of range");
  RegisterState out = s;
  const std::uint64_t flip = dim.generator(a.value);
  for (std::uint64_t x = 0; x < dim.vertex_count(); ++x) {
    out.at(Vertex{x ^ flip}, a) = s.at(Vertex{x}, a);
  }
  return out;
}

RegisterState apply_coin(const RegisterState& s, const CoinMatrix& m) {
  const HypercubeDim dim = s.dim();
  if (m.dim() != dim.value()) throw ShapeError("coin dimension does not match direction register");
  const Eigen::MatrixXcd mat = m.matrix();
  RegisterState out(dim);
  const auto d = static_cast<Eigen::Index>(dim.value());
  for (std::uint64_t x = 0; x < dim.vertex_count(); ++x) {
    const auto in = s.edges_of(x);
    const Eigen::Map<const Eigen::VectorXcd> v(in.data(), d);
    Eigen::Map<Eigen::VectorXcd> w(out.edges_of(x).data(), d);
    w.noalias() = mat * v;
  }
  return out;
}

RegisterState circuit_step(const RegisterState& s, const CoinMatrix& m) {
  RegisterState shifted = s;
  // C_1 ... C_d acting on a ket: C_d is applied first.
  for (int a = s.dim().value(); a >= 1; --a) shifted = apply_phicnot(shifted, Direction{a});
  return apply_coin(shifted, m);
}

RegisterState circuit_evolve(RegisterState s, const CoinMatrix& m, int n) {
  if (n < 0) throw InvalidArgument("step count must be >= 0");
  for (int i = 0; i < n; ++i) s = circuit_step(s, m);
  return s;
}

std::vector<EigenvalueMultiplicity> coin_eigensystem(const CoinMatrix& m) {
  const MultiportCoeffs& c = m.coeffs();
  const int d = c.degree;
  // lambda_k = r + t Sum_{b=1}^{d-1} e^{-2 pi i k b / d}
  std::vector<EigenvalueMultiplicity> out;
  for (int k = 0; k < d; ++k) {
    Complex phase_sum{};
    for (int b = 1; b < d; ++b) phase_sum += std::polar(1.0, -2.0 * std::numbers::pi * k * b / d);
    const Complex lambda = c.r + c.t * phase_sum;
    bool merged = false;
    for (auto& e : out) {
      if (std::abs(e.value - lambda) < 1e-12) {
        ++e.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back({lambda, 1});
  }
  return out;
}

Eigen::VectorXcd coin_fourier_vector(int d, int k) {
  Eigen::VectorXcd v(d);
  for (int a = 1; a <= d; ++a) v(a - 1) = std::polar(1.0 / std::sqrt(static_cast<double>(d)), 2.0 * std::numbers::pi * k * a / d);
  return v;
}

Eigen::MatrixXcd phicnot_operator(HypercubeDim dim, Direction a) {
  require_dense(dim.value(), kCircuitDenseCap);
  return dense_operator(dim, [a](const FullState& s) { return apply_phicnot(s, a); });
}

Eigen::MatrixXcd circuit_operator(HypercubeDim dim, const CoinMatrix& m) {
  require_dense(dim.value(), kCircuitDenseCap);
  return dense_operator(dim, [&m](const FullState& s) { return circuit_step(s, m); });
}

CaEigenReport verify_ca_eigenstructure(int d, double tol) {
  require_dense(d, kCaDenseCap);
  const HypercubeDim dim(d);
  CaEigenReport rep;

  std::vector<Eigen::MatrixXcd> ops;
  for (int a = 1; a <= d; ++a) ops.push_back(phicnot_operator(dim, Direction{a}));
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      const double dev = (ops[a] * ops[b] - ops[b] * ops[a]).cwiseAbs().maxCoeff();
      rep.max_commutator = std::max(rep.max_commutator, dev);
    }
  }
  rep.commute = rep.max_commutator <= tol;

  // |psi> has qubit a in |+> or |-> and a computational state z elsewhere;
  // |chi> is a direction basis state.
  const double h = 1.0 / std::sqrt(2.0);
  double worst_minus = 0.0;
  double worst_plus = 0.0;
  for (int a = 1; a <= d; ++a) {
    const std::uint64_t flip = dim.generator(a);
    for (std::uint64_t z = 0; z < dim.vertex_count(); ++z) {
      if (z & flip) continue;
      for (int chi = 1; chi <= d; ++chi) {
        for (int sign : {+1, -1}) {
          FullState v(dim);
          v.at(Vertex{z}, Direction{chi}) = h;
          v.at(Vertex{z ^ flip}, Direction{chi}) = sign * h;
          const FullState cv = apply_phicnot(v, Direction{a});
          // sigma_x eigenvalue `sign`; C_a multiplies by it only when chi == a.
          const double expected = (sign < 0 && chi == a) ? -1.0 : 1.0;
          double dev = 0.0;
          for (std::size_t i = 0; i < v.size(); ++i) dev = std::max(dev, std::abs(cv[i] - expected * v[i]));
          if (sign < 0) {
            worst_minus = std::max(worst_minus, dev);
          } else {
            worst_plus = std::max(worst_plus, dev);
          }
        }
      }
    }
  }
  rep.minus_eigenvectors = worst_minus <= tol;
  rep.plus_eigenvectors = worst_plus <= tol;
  rep.max_eigen_residual = std::max(worst_minus, worst_plus);
  return rep;
}

CircuitEquivalence verify_circuit(int d, const MultiportCoeffs& c, double tol) {
  require_dense(d, kCircuitDenseCap);
  const HypercubeDim dim(d);
  const CoinMatrix m(c);
  const EvolutionConfig cfg(dim, c);
  const Eigen::MatrixXcd lhs = circuit_operator(dim, m);
  const Eigen::MatrixXcd rhs = dense_operator(dim, [&cfg](const FullState& s) { return step(s, cfg); });
  CircuitEquivalence eq;
  eq.max_deviation = (lhs - rhs).cwiseAbs().maxCoeff();
  eq.pass = eq.max_deviation <= tol;
  return eq;
}

}  // namespace sqrw
