#ifndef AMPCAL_FORMAT_HPP
#define AMPCAL_FORMAT_HPP

#include <string>

#include "ampcal/amp.hpp"

namespace ampcal {

// Scientific notation with 12 digits after the point and a compact
// exponent: 0.3 -> "3.000000000000e-1", 0.0 -> "0.000000000000e0".
std::string format_sci(double v);

// RE(+|-)IMi, both parts in format_sci. Round-trips through the
// amplitude-table parser.
std::string format_amp(Amp a);

// Shortest representation at 12 significant digits (printf %.12g).
std::string format_compact(double v);

}  // namespace ampcal

#endif  // AMPCAL_FORMAT_HPP
