#ifndef AMPCAL_DSL_HPP
#define AMPCAL_DSL_HPP

#include <string>
#include <string_view>

#include "ampcal/amplitude_table.hpp"
#include "ampcal/process_expr.hpp"

namespace ampcal {

// Grammar (whitespace-insensitive between tokens, '#' comments to EOL):
//   diagram := node ("->" node)+
//   node    := IDENT | "{" branch ("|" branch)+ "}"
//   branch  := node ("->" node)*
// A chain is right-nested; a braces node between neighbors P and Q becomes
// a Parallel whose branch b1 -> ... -> bk expands to P -> b1 -> ... -> bk -> Q.
// A braces node may not begin or end the diagram, and two braces nodes may
// not be adjacent (there would be no junction state between them).
// Throws Error(Errc::syntax) with a Diagnostic.
ExprPtr parse_diagram(std::string_view source);

// Canonical text: single spaces around "->" and "|". For parser-produced
// expressions, parse_diagram(print_diagram(e)) is structurally equal to e.
// Throws Error(Errc::unprintable) for shapes the grammar cannot express
// (e.g. a parallel branch with no intermediate state).
std::string print_diagram(const ProcessExpr& e);

// One entry per line: `<TO|FROM> = RE(+|-)IMi`, pure-real entries may omit
// the imaginary part. '#' comments, blank lines, LF or CRLF. Conjugate
// conflicts are reported with the offending line.
AmplitudeTable parse_amp_table(std::string_view source);

}  // namespace ampcal

#endif  // AMPCAL_DSL_HPP
