#pragma once

#include <functional>

namespace holosim::num {

// Bracketed scalar root find: bisection with secant acceleration.
// Requires f(lo)*f(hi) <= 0; returns x with |f(x)| <= tol or bracket
// width <= tol. Throws BracketingError when the bracket has no sign change.
double find_root_bracketed(const std::function<double(double)>& f,
                           double lo, double hi, double tol);

}  // namespace holosim::num
