#include "sqrw/multiport.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <string>
#include <vector>

namespace sqrw {

MultiportCoeffs grover_coeffs(int d) {
  if (d < 1) throw InvalidArgument("grover_coeffs: degree must be >= 1, got " + std::to_string(d));
  const double t = 2.0 / d;
  return {Complex(t - 1.0, 0.0), Complex(t, 0.0), d};
}

MultiportCoeffs symmetric_coeffs(int d, double p) {
  if (d < 2) throw InvalidArgument("symmetric_coeffs: degree must be >= 2, got " + std::to_string(d));
  if (!(p > 0.5)) throw InvalidArgument("symmetric_coeffs: p must exceed 1/2");
  const double d2p = std::pow(static_cast<double>(d), 2.0 * p);
  const double t = std::pow(static_cast<double>(d), -p);
  const double r_abs = std::sqrt(1.0 - (d - 1) / d2p);
  const double cos_theta = (1.0 - d / 2.0) / std::sqrt(d2p - d + 1.0);
  if (cos_theta < -1.0 - kUnitarityTolerance) {
    throw CoefficientError("symmetric_coeffs: no unitary solution for d=" + std::to_string(d) + ", p=" +
                           std::to_string(p) + " (needs d^p >= d/2)");
  }
  // sin(theta) >= 0 branch.
  const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
  return {Complex(r_abs * cos_theta, r_abs * sin_theta), Complex(t, 0.0), d};
}

MultiportCoeffs phase_coeffs(int d, double phase) {
  if (d < 1) throw InvalidArgument("phase_coeffs: degree must be >= 1");
  return {std::polar(1.0, phase), Complex(0.0, 0.0), d};
}

UnitarityReport validate_unitarity(const MultiportCoeffs& c) {
  UnitarityReport rep;
  if (c.degree < 1) return rep;
  const double d = c.degree;
  rep.norm_residual = std::norm(c.r) + (d - 1.0) * std::norm(c.t) - 1.0;
  // A single-edge multiport has no transmission channel, so the second
  // relation has nothing to constrain.
  rep.orthogonality_residual =
      c.degree == 1 ? 0.0 : (d - 2.0) * std::norm(c.t) + 2.0 * std::real(std::conj(c.r) * c.t);
  rep.unitary = std::abs(rep.norm_residual) <= kUnitarityTolerance &&
                std::abs(rep.orthogonality_residual) <= kUnitarityTolerance;
  return rep;
}

void require_unitary(const MultiportCoeffs& c) {
  if (c.degree < 1) throw CoefficientError("multiport degree must be >= 1");
  const UnitarityReport rep = validate_unitarity(c);
  if (!rep.unitary) {
    throw CoefficientError("multiport coefficients violate unitarity (residuals " +
                           std::to_string(rep.norm_residual) + ", " +
                           std::to_string(rep.orthogonality_residual) + ")");
  }
}

Eigen::MatrixXcd multiport_matrix(const MultiportCoeffs& c) {
  require_unitary(c);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Constant(c.degree, c.degree, c.t);
  m.diagonal().setConstant(c.r);
  return m;
}

std::vector<EigenvalueMultiplicity> pseudo_eigensystem(const MultiportCoeffs& c) {
  require_unitary(c);
  const Complex uniform = c.r + static_cast<double>(c.degree - 1) * c.t;
  const Complex other = c.r - c.t;
  if (c.degree == 1) return {{uniform, 1}};
  if (std::abs(uniform - other) == 0.0) return {{uniform, c.degree}};
  return {{uniform, 1}, {other, c.degree - 1}};
}

namespace {

double parse_real(std::string_view text, std::string_view spec) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidArgument("bad number '" + std::string(text) + "' in multiport spec '" +
                          std::string(spec) + "'");
  }
  return v;
}

}  // namespace

MultiportCoeffs parse_multiport_spec(std::string_view spec, int d) {
  if (spec == "grover") return grover_coeffs(d);
  constexpr std::string_view sym = "symmetric:p=";
  if (spec.starts_with(sym)) return symmetric_coeffs(d, parse_real(spec.substr(sym.size()), spec));
  constexpr std::string_view custom = "custom:";
  if (spec.starts_with(custom)) {
    std::vector<double> parts;
    std::string_view rest = spec.substr(custom.size());
    while (true) {
      const auto comma = rest.find(',');
      parts.push_back(parse_real(rest.substr(0, comma), spec));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (parts.size() != 4) {
      throw InvalidArgument("custom multiport needs four reals: Re r, Im r, Re t, Im t");
    }
    MultiportCoeffs c{Complex(parts[0], parts[1]), Complex(parts[2], parts[3]), d};
    require_unitary(c);
    return c;
  }
  throw InvalidArgument("unknown multiport spec '" + std::string(spec) +
                        "' (expected grover, symmetric:p=<real> or custom:<re r>,<im r>,<re t>,<im t>)");
}

}  // namespace sqrw
