#ifndef AMPCAL_BORN_HPP
#define AMPCAL_BORN_HPP

#include <span>
#include <vector>

#include "ampcal/amp.hpp"

namespace ampcal {

// Exponent of Pr = |x|^alpha, positive and finite.
struct BornExponent {
  explicit BornExponent(double a);
  double alpha;
};

// |x|^alpha.
double probability(Amp x, BornExponent alpha);

// |sum_i |x_i|^2 - 1|: how far the amplitudes are from resolving the
// certain event.
double completeness_residual(std::span<const Amp> xs);

// Solves sum_i m_i^alpha = 1 by bisection on [0.1, 10], where the sum is
// strictly decreasing in alpha. Requires every modulus in [0, 1], at least
// two strictly inside (0, 1), and sum m_i^2 = 1 within 1e-12; under those
// conditions the root is 2. Throws DegenerateDistribution, NotNormalized or
// (defensively) NoRootInBracket.
BornExponent solve_exponent(std::span<const double> moduli, double tol);

// [|x_i|^2]; requires completeness_residual(xs) <= 1e-9, else NotNormalized.
std::vector<double> born_probabilities(std::span<const Amp> xs);

}  // namespace ampcal

#endif  // AMPCAL_BORN_HPP
