#ifndef AMPCAL_EVALUATE_HPP
#define AMPCAL_EVALUATE_HPP

#include "ampcal/amp.hpp"
#include "ampcal/amplitude_table.hpp"
#include "ampcal/process_expr.hpp"
#include "ampcal/rules.hpp"

namespace ampcal {

// Composes the amplitude of a process tree from leg amplitudes:
//   Atomic(from, to)      -> table lookup of <to|from>
//   Series(first, second) -> f(later, earlier), i.e. f(<A|B>, <B|C>)
//   Parallel(branches)    -> left fold of g in textual order
// Throws MissingAmplitude naming the offending leg, or
// RuleEvaluationFailure on a non-finite rule output.
Amp eval_diagram(const ProcessExpr& e, const AmplitudeTable& table,
                 const CompositionRule& rule);

struct ChainValues {
  Amp right_nested;
  Amp left_nested;
};

// Re-associates a pure series chain both ways and evaluates each; the two
// agree for consistent rules. Throws NotAChain when e contains a Parallel
// node.
ChainValues eval_both_orders(const ProcessExpr& e, const AmplitudeTable& table,
                             const CompositionRule& rule);

}  // namespace ampcal

#endif  // AMPCAL_EVALUATE_HPP
