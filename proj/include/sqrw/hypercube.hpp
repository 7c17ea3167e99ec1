#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "sqrw/common.hpp"

namespace sqrw {

/// Largest dimension for which vertices fit the 64-bit label. Full-state work
/// is further limited by the memory budget below.
inline constexpr int kMaxDimension = 62;

/// Default budget for d * 2^d complex amplitudes (1 GiB). Overridable through
/// the SQRW_MEMORY_CAP environment variable (bytes).
inline constexpr std::size_t kDefaultMemoryCapBytes = std::size_t{1} << 30;

std::size_t memory_cap_bytes();

/// Hypercube dimension d, 1 <= d <= kMaxDimension.
class HypercubeDim {
 public:
  explicit HypercubeDim(int d);

  int value() const { return d_; }
  std::uint64_t vertex_count() const { return std::uint64_t{1} << d_; }
  std::size_t edge_count() const { return static_cast<std::size_t>(d_) * vertex_count(); }

  /// Bitmask of the generator e_a (direction a, 1-based).
  std::uint64_t generator(int a) const { return std::uint64_t{1} << (d_ - a); }

  std::uint64_t all_ones() const { return vertex_count() - 1; }

  friend bool operator==(HypercubeDim, HypercubeDim) = default;

 private:
  int d_;
};

/// A vertex of Z_2^d. The binary string x_1 x_2 ... x_d is stored with x_1 as
/// the most significant bit, so "100" is the integer 4 and direction a flips
/// character a of the string.
struct Vertex {
  std::uint64_t bits = 0;

  friend bool operator==(Vertex, Vertex) = default;
};

/// Generator index a in 1..d.
struct Direction {
  int value = 1;

  friend bool operator==(Direction, Direction) = default;
};

Vertex parse_vertex(std::string_view text, HypercubeDim dim);
std::string format_vertex(Vertex x, HypercubeDim dim);

int hamming_layer(Vertex x);

/// index = x * d + (a - 1). Throws IndexError for a out of 1..d or x out of range.
std::size_t flat_index(Vertex x, Direction a, HypercubeDim dim);

/// Throws ResourceError if a d * 2^d amplitude vector exceeds memory_cap_bytes().
void require_full_state_fits(HypercubeDim dim);

/// Amplitudes over the directed edges |x;a> (photon leaving x toward x + e_a).
class FullState {
 public:
  explicit FullState(HypercubeDim dim);
  FullState(HypercubeDim dim, ComplexVector amplitudes);

  HypercubeDim dim() const { return dim_; }
  std::size_t size() const { return amp_.size(); }

  Complex& operator[](std::size_t i) { return amp_[i]; }
  const Complex& operator[](std::size_t i) const { return amp_[i]; }

  Complex& at(Vertex x, Direction a) { return amp_[flat_index(x, a, dim_)]; }
  const Complex& at(Vertex x, Direction a) const { return amp_[flat_index(x, a, dim_)]; }

  /// The d outgoing amplitudes at vertex x.
  std::span<Complex> edges_of(std::uint64_t x) {
    return {amp_.data() + x * dim_.value(), static_cast<std::size_t>(dim_.value())};
  }
  std::span<const Complex> edges_of(std::uint64_t x) const {
    return {amp_.data() + x * dim_.value(), static_cast<std::size_t>(dim_.value())};
  }

  const ComplexVector& amplitudes() const { return amp_; }
  ComplexVector& amplitudes() { return amp_; }

  double squared_norm() const { return sqrw::squared_norm(amp_); }

 private:
  HypercubeDim dim_;
  ComplexVector amp_;
};

/// Sum_a d^{-1/2} |0...0;a>.
FullState initial_symmetric_state(HypercubeDim dim);

/// 1/sqrt(d 2^d) on every edge.
FullState uniform_edge_state(HypercubeDim dim);

class LayerState;

/// Every edge |x;a> with |x| = w and |x + e_a| = w +/- 1 receives psi_{w,+/-}.
FullState embed_layer_state(const LayerState& s, HypercubeDim dim);

/// Reads psi_{w,+/-} back from one representative edge per class.
/// The input is assumed to lie in the symmetric subspace.
LayerState read_layer_state(const FullState& state);

/// CSV with columns vertex_bits,direction,re,im; rows for |amp| > 1e-15.
void write_full_state_csv(std::ostream& out, const FullState& state);

}  // namespace sqrw
