#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "sqrw/hypercube.hpp"
#include "sqrw/multiport.hpp"

namespace sqrw {

/// Default cap for dense spectral work (matrix dimension d 2^d = 384 at d = 6).
inline constexpr int kSpectralDenseCap = 6;

/// T_b: |x;a> -> |x+b;a>.
FullState translation_apply(const FullState& state, Vertex b);

/// 2^{-d/2} Sum_x (-1)^{k.x} |x;a>.
FullState fourier_basis_state(Vertex k, Direction a, HypercubeDim dim);

/// (-1)^{k.b}
int character(Vertex k, Vertex b);

/// Representation of U on span{|k~ a>}_a: entry (i,j) = M_ij (-1)^{k_j}.
struct BlockMatrix {
  Vertex k;
  Eigen::MatrixXcd entries;
};

BlockMatrix block_matrix(Vertex k, HypercubeDim dim, const MultiportCoeffs& c);

struct LabelledEigenvalue {
  Vertex k;
  Complex value;
};

/// Union over all 2^d momentum labels of spec(V~_k), ordered by k then by the
/// solver's order within a block. Blocks are solved concurrently.
std::vector<LabelledEigenvalue> full_spectrum_via_blocks(HypercubeDim dim,
                                                         const MultiportCoeffs& c,
                                                         int dense_cap = kSpectralDenseCap);

/// Eigenvalues of the dense d 2^d operator U.
std::vector<Complex> dense_spectrum(HypercubeDim dim, const MultiportCoeffs& c,
                                    int dense_cap = kSpectralDenseCap);

/// Greedy nearest-neighbour pairing of two multisets; returns the largest
/// paired distance, or +inf when the sizes differ.
double multiset_distance(std::vector<Complex> a, std::vector<Complex> b);

/// Columns are the Fourier basis vectors |k~ a>, ordered k-major, a-minor.
Eigen::MatrixXcd fourier_basis_matrix(HypercubeDim dim, int dense_cap = kSpectralDenseCap);

/// Largest |<k'~ a'|U|k~ a>| with k' != k.
double max_off_block_element(HypercubeDim dim, const MultiportCoeffs& c,
                             int dense_cap = kSpectralDenseCap);

/// Right cyclic shift of the bit string x_1...x_d -> x_d x_1 ... x_{d-1}.
Vertex rotate_vertex(Vertex x, HypercubeDim dim);

/// |x;a> -> |rot(x); a mod d + 1>.
FullState rotation_apply(const FullState& state);

/// B_x R B_x with B_x|z;a> = |z+x;a>.
FullState rotation_apply_about(const FullState& state, Vertex x);

struct LiftedEigenvector {
  Vertex k;
  Complex eigenvalue;
  FullState vector;
};

/// Lifts every block eigenvector to the full edge space.
std::vector<LiftedEigenvector> lift_block_eigenvectors(HypercubeDim dim, const MultiportCoeffs& c,
                                                       int dense_cap = kSpectralDenseCap);

/// max over (y,b) of |r g(rev(y,b)) + t Sum_{a!=b} g(y+e_a, a) - lambda g(y,b)|,
/// where rev(y,b) = (y+e_b, b) is the reversed edge.
double eigen_recurrence_residual(const FullState& gamma, Complex lambda, const MultiportCoeffs& c);

}  // namespace sqrw
