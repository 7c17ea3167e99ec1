#pragma once

#include <Eigen/Dense>

#include <string_view>
#include <vector>

#include "sqrw/common.hpp"

namespace sqrw {

/// Local scattering law of a degree-d multiport: an incoming photon is
/// reflected back along its edge with amplitude r and sent down each of the
/// other d-1 edges with amplitude t.
struct MultiportCoeffs {
  Complex r{1.0, 0.0};
  Complex t{0.0, 0.0};
  int degree = 1;
};

struct UnitarityReport {
  bool unitary = false;
  /// |r|^2 + (d-1)|t|^2 - 1
  double norm_residual = 0.0;
  /// (d-2)|t|^2 + 2 Re(conj(r) t)
  double orthogonality_residual = 0.0;
};

struct EigenvalueMultiplicity {
  Complex value;
  int multiplicity = 0;
};

/// r = 2/d - 1, t = 2/d. Throws InvalidArgument for d < 1.
MultiportCoeffs grover_coeffs(int d);

/// t = d^-p, r = sqrt(1 - (d-1)/d^{2p}) e^{i theta} with
/// cos(theta) = (1 - d/2) / sqrt(d^{2p} - d + 1) and sin(theta) >= 0.
/// Throws InvalidArgument for d < 2 or p <= 1/2, and CoefficientError when
/// |cos(theta)| > 1, which happens whenever d^p < d/2.
MultiportCoeffs symmetric_coeffs(int d, double p);

/// Phase-only multiport (t = 0, r = e^{i phase}).
MultiportCoeffs phase_coeffs(int d, double phase);

UnitarityReport validate_unitarity(const MultiportCoeffs& c);

/// Throws CoefficientError unless validate_unitarity passes.
void require_unitary(const MultiportCoeffs& c);

/// d x d matrix with r on the diagonal and t elsewhere.
Eigen::MatrixXcd multiport_matrix(const MultiportCoeffs& c);

/// {r + (d-1)t : 1, r - t : d-1}. Entries with zero multiplicity are dropped,
/// and the two values merge when t = 0.
std::vector<EigenvalueMultiplicity> pseudo_eigensystem(const MultiportCoeffs& c);

/// Parses "grover", "symmetric:p=<real>" or "custom:<re r>,<im r>,<re t>,<im t>"
/// into degree-d coefficients and validates them.
MultiportCoeffs parse_multiport_spec(std::string_view spec, int d);

}  // namespace sqrw
