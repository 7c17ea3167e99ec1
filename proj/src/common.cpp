#include "sqrw/common.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace sqrw {

double squared_norm(const ComplexVector& v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return s;
}

double log_factorial(int n) {
  if (n < 0) throw InvalidArgument("log_factorial: negative argument");
  static const std::array<double, 21> table = [] {
    std::array<double, 21> t{};
    double f = 1.0;
    t[0] = 0.0;
    for (int i = 1; i <= 20; ++i) {
      f *= i;
      t[static_cast<std::size_t>(i)] = std::log(f);
    }
    return t;
  }();
  if (n <= 20) return table[static_cast<std::size_t>(n)];
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  // Exact integers below 2^53; beyond that the product is correctly rounded
  // to within a few ulps.
  return b < 9007199254740992.0 ? std::round(b) : b;
}

}  // namespace sqrw
