#ifndef AMPCAL_LAW_CHECK_HPP
#define AMPCAL_LAW_CHECK_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ampcal/amp.hpp"
#include "ampcal/rules.hpp"

namespace ampcal {

struct CheckConfig {
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  // Residuals are relative: |lhs - rhs| / (1 + max(|lhs|, |rhs|)).
  double tolerance = 1e-9;
};

enum class Law { series_assoc, parallel_assoc, distributivity, parallel_comm };

std::string_view law_name(Law law);

struct LawReport {
  Law law = Law::series_assoc;
  std::size_t samples = 0;
  double max_residual = 0.0;
  std::array<Amp, 3> worst{};  // the sample achieving max_residual
  int worst_arity = 3;         // 2 for parallel_comm
  bool pass = false;           // max_residual <= tolerance used
};

// The two sides of a law at one sample (z ignored for parallel_comm).
std::pair<Amp, Amp> law_sides(Law law, const CompositionRule& rule, Amp x,
                              Amp y, Amp z);

double relative_residual(Amp lhs, Amp rhs);

// Each check samples rule.safe_domain with a counter-based generator, so
// reports are identical for identical (rule, cfg) under any evaluation
// order. A non-finite rule output on the safe domain aborts with
// RuleEvaluationFailure.
LawReport check_series_assoc(const CompositionRule& rule,
                             const CheckConfig& cfg);
LawReport check_parallel_assoc(const CompositionRule& rule,
                               const CheckConfig& cfg);
LawReport check_distributivity(const CompositionRule& rule,
                               const CheckConfig& cfg);
LawReport check_parallel_comm(const CompositionRule& rule,
                              const CheckConfig& cfg);

// All four, in the order above.
std::vector<LawReport> run_full_suite(const CompositionRule& rule,
                                      const CheckConfig& cfg);

// `LAW name PASS|FAIL max_residual=%.3e at (x=..., y=..., z=...)`
std::string render_report(const LawReport& report);

}  // namespace ampcal

#endif  // AMPCAL_LAW_CHECK_HPP
