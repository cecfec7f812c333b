#pragma once

namespace holosim::num {

// Bessel function of the first kind, integer order, by ascending series.
// Intended range |x| <= 10, |n| small; J_{-n}(x) = (-1)^n J_n(x).
double bessel_jn(int order, double argument);

}  // namespace holosim::num
