#include "ampcal/format.hpp"

#include <cmath>
#include <cstdio>

namespace ampcal {

std::string format_sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  std::string s(buf);
  auto epos = s.find('e');
  if (epos == std::string::npos) return s;  // inf/nan; not produced normally
  std::string mantissa = s.substr(0, epos);
  std::string exp = s.substr(epos + 1);
  bool negative = !exp.empty() && exp[0] == '-';
  std::size_t digits = (exp.empty() || (exp[0] != '+' && exp[0] != '-')) ? 0 : 1;
  while (digits + 1 < exp.size() && exp[digits] == '0') ++digits;
  std::string trimmed = exp.substr(digits);
  return mantissa + "e" + (negative ? "-" : "") + trimmed;
}

std::string format_amp(Amp a) {
  const char sign = std::signbit(a.imag()) ? '-' : '+';
  return format_sci(a.real()) + sign + format_sci(std::fabs(a.imag())) + "i";
}

std::string format_compact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::string(buf);
}

}  // namespace ampcal
