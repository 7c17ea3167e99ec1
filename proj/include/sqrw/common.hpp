#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqrw {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Tolerance on the two multiport unitarity relations.
inline constexpr double kUnitarityTolerance = 1e-12;

// Error hierarchy. Every failure the library reports derives from sqrw::Error
// so callers (the CLI in particular) can map categories onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class CoefficientError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ShapeError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class IndexError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A requested state or dense operator would exceed the configured budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Amplitude reached the end of a truncated tail.
class TruncationError : public Error {
 public:
  using Error::Error;
};

double squared_norm(const ComplexVector& v);

double binomial(int n, int k);

/// log(n!) via lgamma; exact table lookup for n <= 20.
double log_factorial(int n);

}  // namespace sqrw
