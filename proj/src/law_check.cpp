#include "ampcal/law_check.hpp"

#include <algorithm>
#include <cstdio>

#include "ampcal/error.hpp"
#include "ampcal/format.hpp"

namespace ampcal {

std::string_view law_name(Law law) {
  switch (law) {
    case Law::series_assoc: return "series_assoc";
    case Law::parallel_assoc: return "parallel_assoc";
    case Law::distributivity: return "distributivity";
    case Law::parallel_comm: return "parallel_comm";
  }
  return "series_assoc";  // unreachable
}

double relative_residual(Amp lhs, Amp rhs) {
  return std::abs(lhs - rhs) / (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
}

namespace {

Amp checked(const std::function<Amp(Amp, Amp)>& op, Amp a, Amp b,
            const CompositionRule& rule) {
  Amp out = op(a, b);
  if (!is_finite(out)) {
    throw Error(Errc::rule_evaluation,
                "rule '" + rule.name + "' produced a non-finite value at (" +
                    format_amp(a) + ", " + format_amp(b) + ")");
  }
  return out;
}

void validate(const CheckConfig& cfg) {
  if (cfg.samples < 1) {
    throw Error(Errc::domain_violation, "samples must be at least 1");
  }
  if (!(cfg.tolerance > 0.0) || !std::isfinite(cfg.tolerance)) {
    throw Error(Errc::domain_violation, "tolerance must be positive");
  }
}

LawReport check_law(Law law, const CompositionRule& rule,
                    const CheckConfig& cfg) {
  validate(cfg);
  const CounterRng rng(cfg.seed);
  LawReport report;
  report.law = law;
  report.samples = cfg.samples;
  report.worst_arity = law == Law::parallel_comm ? 2 : 3;
  double best = -1.0;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    Amp x = rule.safe_domain.sample(rng, i, 0);
    Amp y = rule.safe_domain.sample(rng, i, 2);
    Amp z = report.worst_arity == 3 ? rule.safe_domain.sample(rng, i, 4)
                                    : Amp{0.0, 0.0};
    auto [lhs, rhs] = law_sides(law, rule, x, y, z);
    double r = relative_residual(lhs, rhs);
    if (r > best) {
      best = r;
      report.worst = {x, y, z};
    }
  }
  report.max_residual = best;
  report.pass = best <= cfg.tolerance;
  return report;
}

}  // namespace

std::pair<Amp, Amp> law_sides(Law law, const CompositionRule& rule, Amp x,
                              Amp y, Amp z) {
  const auto& f = rule.series_f;
  const auto& g = rule.parallel_g;
  switch (law) {
    case Law::series_assoc:
      return {checked(f, x, checked(f, y, z, rule), rule),
              checked(f, checked(f, x, y, rule), z, rule)};
    case Law::parallel_assoc:
      return {checked(g, x, checked(g, y, z, rule), rule),
              checked(g, checked(g, x, y, rule), z, rule)};
    case Law::distributivity:
      return {checked(f, checked(g, x, y, rule), z, rule),
              checked(g, checked(f, x, z, rule), checked(f, y, z, rule), rule)};
    case Law::parallel_comm:
      return {checked(g, x, y, rule), checked(g, y, x, rule)};
  }
  return {x, y};  // unreachable
}

LawReport check_series_assoc(const CompositionRule& rule,
                             const CheckConfig& cfg) {
  return check_law(Law::series_assoc, rule, cfg);
}

LawReport check_parallel_assoc(const CompositionRule& rule,
                               const CheckConfig& cfg) {
  return check_law(Law::parallel_assoc, rule, cfg);
}

LawReport check_distributivity(const CompositionRule& rule,
                               const CheckConfig& cfg) {
  return check_law(Law::distributivity, rule, cfg);
}

LawReport check_parallel_comm(const CompositionRule& rule,
                              const CheckConfig& cfg) {
  return check_law(Law::parallel_comm, rule, cfg);
}

std::vector<LawReport> run_full_suite(const CompositionRule& rule,
                                      const CheckConfig& cfg) {
  return {check_series_assoc(rule, cfg), check_parallel_assoc(rule, cfg),
          check_distributivity(rule, cfg), check_parallel_comm(rule, cfg)};
}

std::string render_report(const LawReport& report) {
  char residual[32];
  std::snprintf(residual, sizeof residual, "%.3e", report.max_residual);
  std::string out = "LAW ";
  out += law_name(report.law);
  out += report.pass ? " PASS" : " FAIL";
  out += " max_residual=";
  out += residual;
  out += " at (x=" + format_amp(report.worst[0]) +
         ", y=" + format_amp(report.worst[1]);
  if (report.worst_arity == 3) {
    out += ", z=" + format_amp(report.worst[2]);
  }
  out += ")";
  return out;
}

}  // namespace ampcal
