#ifndef AMPCAL_RULES_HPP
#define AMPCAL_RULES_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "ampcal/amp.hpp"
#include "ampcal/rng.hpp"

namespace ampcal {

// Annulus wedge in polar form. The lower argument bound is exclusive, the
// upper inclusive, so a full circle is (-pi, pi].
struct SampleDomain {
  double modulus_min = 0.05;
  double modulus_max = 2.0;
  double arg_min = -3.141592653589793;
  double arg_max = 3.141592653589793;

  // Uniform in (modulus, argument), fully determined by (rng.seed, counter,
  // slot): modulus from slot, argument from slot + 1.
  Amp sample(const CounterRng& rng, std::uint64_t counter,
             std::uint64_t slot) const;
};

// Invertible transform H of amplitude values. Composition rules built from
// H change their form without changing their contents.
class Regraduation {
 public:
  enum class Kind { identity, scale, power, explog };

  static Regraduation identity();
  static Regraduation scale(Amp factor);      // factor != 0
  static Regraduation power(double exponent); // 0 < p <= 1
  static Regraduation explog();

  Kind kind() const { return kind_; }
  Amp scale_factor() const { return scale_; }
  double exponent() const { return exponent_; }

  // H(x). Total for every kind; the principal branch is used for power.
  Amp apply(Amp x) const;
  // H^-1(x). Throws DomainViolation on branch-cut hazards: a power inverse
  // whose argument would wrap past the principal branch, or log of 0.
  Amp invert(Amp x) const;

  // The sampling domain a rule built from this transform stays inside.
  SampleDomain safe_domain() const;

  std::string name() const;

 private:
  Kind kind_ = Kind::identity;
  Amp scale_{1.0, 0.0};
  double exponent_ = 1.0;
};

// A pair of binary composition laws: series_f combines amplitudes of
// consecutive processes, parallel_g amplitudes of orthogonal alternatives.
struct CompositionRule {
  std::string name;
  std::function<Amp(Amp, Amp)> series_f;
  std::function<Amp(Amp, Amp)> parallel_g;
  SampleDomain safe_domain;
  bool expected_consistent = true;
};

// f(x,y) = x*y, g(x,y) = x+y over the full annulus.
CompositionRule canonical_rule();

// f = H^-1(H(x)*H(y)), g = H^-1(H(x)+H(y)).
CompositionRule regraduated_rule(const Regraduation& h);

enum class BrokenKind { g_affine, f_offset };

// Deliberately inconsistent rules with symbolically known residuals:
//   g_affine: g(x,y) = x + 2y + 0.05 with canonical f. Associativity of g
//             misses by 2z + 0.05, commutativity by y - x, distributivity
//             by 0.05(z - 1).
//   f_offset: f(x,y) = x*y + 0.01 with canonical g. Associativity of f
//             misses by 0.01(x - z), distributivity by exactly 0.01.
CompositionRule broken_rule(BrokenKind which);

// Selector syntax: canonical | scale:RE(+|-)IMi | power:P | explog |
// broken:g_affine | broken:f_offset.
CompositionRule rule_from_selector(std::string_view selector);

}  // namespace ampcal

#endif  // AMPCAL_RULES_HPP
