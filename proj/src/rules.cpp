#include "ampcal/rules.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

#include "ampcal/error.hpp"

namespace ampcal {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

Amp SampleDomain::sample(const CounterRng& rng, std::uint64_t counter,
                         std::uint64_t slot) const {
  double m =
      modulus_min + rng.uniform01(counter, slot) * (modulus_max - modulus_min);
  // (arg_min, arg_max]: u in [0,1) walks down from the inclusive end.
  double a =
      arg_max - rng.uniform01(counter, slot + 1) * (arg_max - arg_min);
  return std::polar(m, a);
}

Regraduation Regraduation::identity() { return Regraduation{}; }

Regraduation Regraduation::scale(Amp factor) {
  if (factor == Amp{0.0, 0.0} || !is_finite(factor)) {
    throw std::invalid_argument("scale regraduation needs a finite c != 0");
  }
  Regraduation h;
  h.kind_ = Kind::scale;
  h.scale_ = factor;
  return h;
}

Regraduation Regraduation::power(double exponent) {
  if (!(exponent > 0.0 && exponent <= 1.0)) {
    throw std::invalid_argument("power regraduation needs 0 < p <= 1");
  }
  Regraduation h;
  h.kind_ = Kind::power;
  h.exponent_ = exponent;
  return h;
}

Regraduation Regraduation::explog() {
  Regraduation h;
  h.kind_ = Kind::explog;
  return h;
}

Amp Regraduation::apply(Amp x) const {
  switch (kind_) {
    case Kind::identity:
      return x;
    case Kind::scale:
      return scale_ * x;
    case Kind::power: {
      if (x == Amp{0.0, 0.0}) return x;
      return std::polar(std::pow(std::abs(x), exponent_),
                        exponent_ * std::arg(x));
    }
    case Kind::explog:
      return std::exp(x);
  }
  return x;  // unreachable
}

Amp Regraduation::invert(Amp x) const {
  switch (kind_) {
    case Kind::identity:
      return x;
    case Kind::scale:
      return x / scale_;
    case Kind::power: {
      if (x == Amp{0.0, 0.0}) return x;
      double a = std::arg(x);
      if (std::fabs(a) > exponent_ * kPi + 1e-12) {
        throw Error(Errc::domain_violation,
                    "power inverse undefined: |arg| = " + std::to_string(
                        std::fabs(a)) + " exceeds p*pi = " +
                        std::to_string(exponent_ * kPi));
      }
      return std::polar(std::pow(std::abs(x), 1.0 / exponent_),
                        a / exponent_);
    }
    case Kind::explog:
      if (x == Amp{0.0, 0.0}) {
        throw Error(Errc::domain_violation, "log of 0 is undefined");
      }
      return std::log(x);
  }
  return x;  // unreachable
}

SampleDomain Regraduation::safe_domain() const {
  switch (kind_) {
    case Kind::identity:
    case Kind::scale:
      return SampleDomain{0.05, 2.0, -kPi, kPi};
    case Kind::power:
      return SampleDomain{0.1, 1.5, -kPi / 4, kPi / 4};
    case Kind::explog:
      return SampleDomain{0.05, 1.0, -kPi / 4, kPi / 4};
  }
  return SampleDomain{};  // unreachable
}

namespace {

std::string short_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return std::string(buf);
}

std::string short_amp(Amp a) {
  return short_real(a.real()) + (std::signbit(a.imag()) ? "-" : "+") +
         short_real(std::fabs(a.imag())) + "i";
}

}  // namespace

std::string Regraduation::name() const {
  switch (kind_) {
    case Kind::identity: return "identity";
    case Kind::scale: return "scale:" + short_amp(scale_);
    case Kind::power: return "power:" + short_real(exponent_);
    case Kind::explog: return "explog";
  }
  return "identity";  // unreachable
}

CompositionRule canonical_rule() {
  CompositionRule rule;
  rule.name = "canonical";
  rule.series_f = [](Amp x, Amp y) { return x * y; };
  rule.parallel_g = [](Amp x, Amp y) { return x + y; };
  rule.safe_domain = SampleDomain{0.05, 2.0, -kPi, kPi};
  rule.expected_consistent = true;
  return rule;
}

CompositionRule regraduated_rule(const Regraduation& h) {
  CompositionRule rule;
  rule.name = h.name();
  rule.series_f = [h](Amp x, Amp y) { return h.invert(h.apply(x) * h.apply(y)); };
  rule.parallel_g = [h](Amp x, Amp y) { return h.invert(h.apply(x) + h.apply(y)); };
  rule.safe_domain = h.safe_domain();
  rule.expected_consistent = true;
  return rule;
}

CompositionRule broken_rule(BrokenKind which) {
  CompositionRule rule = canonical_rule();
  rule.expected_consistent = false;
  if (which == BrokenKind::g_affine) {
    rule.name = "broken:g_affine";
    rule.parallel_g = [](Amp x, Amp y) { return x + 2.0 * y + 0.05; };
  } else {
    rule.name = "broken:f_offset";
    rule.series_f = [](Amp x, Amp y) { return x * y + 0.01; };
  }
  return rule;
}

namespace {

Amp parse_complex_literal(std::string_view text, std::string_view selector) {
  std::string s(text);
  const char* p = s.c_str();
  char* rest = nullptr;
  double re = std::strtod(p, &rest);
  if (rest == p) {
    throw Error(Errc::syntax, "bad rule selector '" + std::string(selector) +
                                  "': expected a complex literal");
  }
  if (*rest == '\0') return Amp(re, 0.0);
  double sign = 1.0;
  if (*rest == '+') {
    ++rest;
  } else if (*rest == '-') {
    sign = -1.0;
    ++rest;
  } else {
    throw Error(Errc::syntax, "bad rule selector '" + std::string(selector) +
                                  "': expected RE(+|-)IMi");
  }
  const char* q = rest;
  double im = std::strtod(q, &rest);
  if (rest == q || rest[0] != 'i' || rest[1] != '\0') {
    throw Error(Errc::syntax, "bad rule selector '" + std::string(selector) +
                                  "': expected RE(+|-)IMi");
  }
  return Amp(re, sign * im);
}

}  // namespace

CompositionRule rule_from_selector(std::string_view selector) {
  if (selector == "canonical") return canonical_rule();
  if (selector == "explog") return regraduated_rule(Regraduation::explog());
  auto colon = selector.find(':');
  if (colon != std::string_view::npos) {
    std::string_view head = selector.substr(0, colon);
    std::string_view arg = selector.substr(colon + 1);
    if (head == "scale") {
      Amp c = parse_complex_literal(arg, selector);
      if (c == Amp{0.0, 0.0}) {
        throw Error(Errc::syntax, "bad rule selector '" +
                                      std::string(selector) +
                                      "': scale factor must be nonzero");
      }
      return regraduated_rule(Regraduation::scale(c));
    }
    if (head == "power") {
      char* rest = nullptr;
      std::string text(arg);
      double p = std::strtod(text.c_str(), &rest);
      if (rest == text.c_str() || *rest != '\0' || !(p > 0.0 && p <= 1.0)) {
        throw Error(Errc::syntax, "bad rule selector '" +
                                      std::string(selector) +
                                      "': power needs 0 < P <= 1");
      }
      return regraduated_rule(Regraduation::power(p));
    }
    if (head == "broken") {
      if (arg == "g_affine") return broken_rule(BrokenKind::g_affine);
      if (arg == "f_offset") return broken_rule(BrokenKind::f_offset);
      throw Error(Errc::syntax,
                  "bad rule selector '" + std::string(selector) +
                      "': expected broken:g_affine or broken:f_offset");
    }
  }
  throw Error(Errc::syntax,
              "unknown rule selector '" + std::string(selector) +
                  "'; expected canonical, scale:RE(+|-)IMi, power:P, explog, "
                  "broken:g_affine or broken:f_offset");
}

}  // namespace ampcal
