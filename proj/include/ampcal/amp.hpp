#ifndef AMPCAL_AMP_HPP
#define AMPCAL_AMP_HPP

#include <cmath>
#include <complex>

namespace ampcal {

// A probability amplitude. Tables and evaluation results never hold NaN/Inf.
using Amp = std::complex<double>;

inline bool is_finite(Amp x) {
  return std::isfinite(x.real()) && std::isfinite(x.imag());
}

}  // namespace ampcal

#endif  // AMPCAL_AMP_HPP
