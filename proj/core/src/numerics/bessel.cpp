#include "holosim/numerics/bessel.hpp"

#include <cmath>

#include "holosim/errors.hpp"

namespace holosim::num {

double bessel_jn(int order, double argument) {
  if (!std::isfinite(argument))
    throw InvalidInputError("bessel_jn: non-finite argument");

  double sign = 1.0;
  int n = order;
  if (n < 0) {  // J_{-n}(x) = (-1)^n J_n(x)
    n = -n;
    if (n % 2 != 0) sign = -sign;
  }
  double x = argument;
  if (x < 0.0) {  // J_n(-x) = (-1)^n J_n(x)
    x = -x;
    if (n % 2 != 0) sign = -sign;
  }
  if (x == 0.0) return n == 0 ? sign : 0.0;

  // Ascending series: sum_k (-1)^k (x/2)^{n+2k} / (k! (n+k)!).
  const double h = 0.5 * x;
  double term = 1.0;
  for (int k = 1; k <= n; ++k) term *= h / k;  // (x/2)^n / n!
  double sum = term;
  const double h2 = h * h;
  for (int k = 1; k < 200; ++k) {
    term *= -h2 / (double(k) * double(n + k));
    sum += term;
    if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-30)) break;
  }
  return sign * sum;
}

}  // namespace holosim::num
