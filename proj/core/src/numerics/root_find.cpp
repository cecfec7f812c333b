#include "holosim/numerics/root_find.hpp"

#include <cmath>

#include "holosim/errors.hpp"

namespace holosim::num {

double find_root_bracketed(const std::function<double(double)>& f,
                           double lo, double hi, double tol) {
  if (!(tol > 0.0)) throw InvalidInputError("find_root_bracketed: tol must be > 0");
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo * fhi > 0.0)
    throw BracketingError("find_root_bracketed: no sign change in bracket");

  for (int it = 0; it < 200; ++it) {
    // Secant candidate, fall back to the midpoint when it leaves the bracket
    // or stalls.
    double x = lo - flo * (hi - lo) / (fhi - flo);
    const double mid = 0.5 * (lo + hi);
    if (!std::isfinite(x) || x <= lo || x >= hi) x = mid;
    double fx = f(x);
    if (std::abs(fx) <= tol || (hi - lo) <= tol) return x;
    if (flo * fx < 0.0) {
      hi = x;
      fhi = fx;
    } else {
      lo = x;
      flo = fx;
    }
    // Periodic bisection keeps worst-case convergence linear in -log(tol).
    if (it % 2 == 1) {
      const double m = 0.5 * (lo + hi);
      const double fm = f(m);
      if (std::abs(fm) <= tol) return m;
      if (flo * fm < 0.0) {
        hi = m;
        fhi = fm;
      } else {
        lo = m;
        flo = fm;
      }
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace holosim::num
