#include "ampcal/evaluate.hpp"

#include "ampcal/error.hpp"
#include "ampcal/format.hpp"

namespace ampcal {

namespace {

Amp apply_rule(const std::function<Amp(Amp, Amp)>& op, Amp a, Amp b,
               const CompositionRule& rule) {
  Amp out = op(a, b);
  if (!is_finite(out)) {
    throw Error(Errc::rule_evaluation,
                "rule '" + rule.name + "' produced a non-finite value at (" +
                    format_amp(a) + ", " + format_amp(b) + ")");
  }
  return out;
}

}  // namespace

Amp eval_diagram(const ProcessExpr& e, const AmplitudeTable& table,
                 const CompositionRule& rule) {
  return std::visit(
      [&](const auto& n) -> Amp {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, AtomicStep>) {
          return table.lookup(n.from, n.to);
        } else if constexpr (std::is_same_v<T, SeriesComp>) {
          Amp earlier = eval_diagram(*n.first, table, rule);
          Amp later = eval_diagram(*n.second, table, rule);
          return apply_rule(rule.series_f, later, earlier, rule);
        } else {
          Amp acc = eval_diagram(*n.branches.front(), table, rule);
          for (std::size_t i = 1; i < n.branches.size(); ++i) {
            acc = apply_rule(rule.parallel_g, acc,
                             eval_diagram(*n.branches[i], table, rule), rule);
          }
          return acc;
        }
      },
      e.node());
}

ChainValues eval_both_orders(const ProcessExpr& e, const AmplitudeTable& table,
                             const CompositionRule& rule) {
  if (!is_chain(e)) {
    throw Error(Errc::not_a_chain,
                "eval_both_orders needs a pure series chain");
  }
  auto legs = atomic_legs(e);
  std::vector<ExprPtr> steps;
  steps.reserve(legs.size());
  for (const auto& [from, to] : legs) steps.push_back(atomic(from, to));

  ExprPtr right = steps.back();
  for (std::size_t k = steps.size() - 1; k-- > 0;) {
    right = series(steps[k], right);
  }
  ExprPtr left = steps.front();
  for (std::size_t k = 1; k < steps.size(); ++k) {
    left = series(left, steps[k]);
  }
  return {eval_diagram(*right, table, rule), eval_diagram(*left, table, rule)};
}

}  // namespace ampcal
