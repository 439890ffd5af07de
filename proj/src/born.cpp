#include "ampcal/born.hpp"

#include <cmath>
#include <stdexcept>

#include "ampcal/error.hpp"
#include "ampcal/format.hpp"

namespace ampcal {

namespace {

// A modulus this close to 0 or 1 no longer pins the exponent.
constexpr double kInteriorGuard = 1e-9;

}  // namespace

BornExponent::BornExponent(double a) : alpha(a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw std::invalid_argument("Born exponent must be positive and finite");
  }
}

double probability(Amp x, BornExponent alpha) {
  return std::pow(std::abs(x), alpha.alpha);
}

double completeness_residual(std::span<const Amp> xs) {
  double sum = 0.0;
  for (Amp x : xs) sum += std::norm(x);
  return std::fabs(sum - 1.0);
}

BornExponent solve_exponent(std::span<const double> moduli, double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw Error(Errc::domain_violation, "tolerance must be positive");
  }
  double sumsq = 0.0;
  for (double m : moduli) {
    if (!std::isfinite(m) || m < 0.0 || m > 1.0) {
      throw Error(Errc::not_normalized,
                  "modulus " + format_compact(m) + " is outside [0, 1]");
    }
    sumsq += m * m;
  }
  if (std::fabs(sumsq - 1.0) > 1e-12) {
    throw Error(Errc::not_normalized,
                "squared moduli sum to " + format_compact(sumsq) +
                    ", not 1 (completeness requires a normalized set)");
  }
  std::size_t interior = 0;
  for (double m : moduli) {
    if (m >= 1.0 - kInteriorGuard) {
      throw Error(Errc::degenerate_distribution,
                  "a modulus of 1 makes every exponent a solution");
    }
    if (m >= kInteriorGuard) ++interior;
  }
  if (interior < 2) {
    throw Error(Errc::degenerate_distribution,
                "need at least two moduli strictly inside (0, 1)");
  }

  auto sum_pow = [&](double alpha) {
    double s = 0.0;
    for (double m : moduli) s += std::pow(m, alpha);
    return s;
  };
  double lo = 0.1, hi = 10.0;
  if (!(sum_pow(lo) > 1.0) || !(sum_pow(hi) < 1.0)) {
    throw Error(Errc::no_root_in_bracket,
                "sum of moduli^alpha does not cross 1 on [0.1, 10]");
  }
  for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
    double mid = 0.5 * (lo + hi);
    (sum_pow(mid) > 1.0 ? lo : hi) = mid;
  }
  return BornExponent(0.5 * (lo + hi));
}

std::vector<double> born_probabilities(std::span<const Amp> xs) {
  if (xs.empty() || completeness_residual(xs) > 1e-9) {
    throw Error(Errc::not_normalized,
                "amplitudes do not resolve the certain event: sum |x_i|^2 "
                "differs from 1 by more than 1e-9");
  }
  std::vector<double> probs;
  probs.reserve(xs.size());
  for (Amp x : xs) probs.push_back(std::norm(x));
  return probs;
}

}  // namespace ampcal
