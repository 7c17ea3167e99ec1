#pragma once

#include <Eigen/Dense>

#include "sqrw/hypercube.hpp"
#include "sqrw/multiport.hpp"

namespace sqrw {

/// Position register (d qubits) tensor a d-level direction register. Basis
/// |x>|a> shares the edge layout of FullState (index x * d + a - 1), which is
/// exactly the |x;a> <-> |x>|a> identification between the scattering and the
/// coined walk.
using RegisterState = FullState;

/// Largest d for which dense operators are materialised (dimension d 2^d).
inline constexpr int kCircuitDenseCap = 8;

/// Cap for verify_ca_eigenstructure, which keeps all d controlled flips dense.
inline constexpr int kCaDenseCap = 6;

/// Coin acting on the direction register: r on the diagonal, t elsewhere.
class CoinMatrix {
 public:
  explicit CoinMatrix(const MultiportCoeffs& c);

  const MultiportCoeffs& coeffs() const { return c_; }
  int dim() const { return c_.degree; }
  Eigen::MatrixXcd matrix() const { return multiport_matrix(c_); }

 private:
  MultiportCoeffs c_;
};

/// C_a: flips position qubit a when the direction register is |a>.
RegisterState apply_phicnot(const RegisterState& s, Direction a);

/// 1 (x) M.
RegisterState apply_coin(const RegisterState& s, const CoinMatrix& m);

/// (1 (x) M) C_1 ... C_d.
RegisterState circuit_step(const RegisterState& s, const CoinMatrix& m);

RegisterState circuit_evolve(RegisterState s, const CoinMatrix& m, int n);

/// {r + (d-1)t : 1, r - t : d-1}.
std::vector<EigenvalueMultiplicity> coin_eigensystem(const CoinMatrix& m);

/// Discrete Fourier eigenvector psi_k = Sum_a e^{2 pi i k a / d} e_a (normalised).
Eigen::VectorXcd coin_fourier_vector(int d, int k);

struct CaEigenReport {
  bool commute = false;
  bool minus_eigenvectors = false;
  bool plus_eigenvectors = false;
  double max_commutator = 0.0;
  double max_eigen_residual = 0.0;

  bool ok() const { return commute && minus_eigenvectors && plus_eigenvectors; }
};

/// Dense check of pairwise commutation of all C_a and of the sigma_x-product
/// eigenvectors. Limited to d <= kCaDenseCap.
CaEigenReport verify_ca_eigenstructure(int d, double tol = 1e-12);

/// Dense matrix of a linear map on d 2^d amplitudes, built column by column.
template <typename Apply>
Eigen::MatrixXcd dense_operator(HypercubeDim dim, Apply&& apply) {
  const auto n = static_cast<Eigen::Index>(dim.edge_count());
  Eigen::MatrixXcd op(n, n);
  FullState basis(dim);
  for (Eigen::Index col = 0; col < n; ++col) {
    basis[static_cast<std::size_t>(col)] = 1.0;
    const FullState out = apply(basis);
    for (Eigen::Index row = 0; row < n; ++row) op(row, col) = out[static_cast<std::size_t>(row)];
    basis[static_cast<std::size_t>(col)] = 0.0;
  }
  return op;
}

Eigen::MatrixXcd circuit_operator(HypercubeDim dim, const CoinMatrix& m);
Eigen::MatrixXcd phicnot_operator(HypercubeDim dim, Direction a);

struct CircuitEquivalence {
  double max_deviation = 0.0;
  bool pass = false;
};

/// Max elementwise |circuit_operator - full step operator|.
CircuitEquivalence verify_circuit(int d, const MultiportCoeffs& c, double tol = 1e-12);

}  // namespace sqrw
