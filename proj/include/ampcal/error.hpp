#ifndef AMPCAL_ERROR_HPP
#define AMPCAL_ERROR_HPP

#include <optional>
#include <stdexcept>
#include <string>

namespace ampcal {

// Position of a problem in source text, 1-based line and byte column.
struct Diagnostic {
  int line = 1;
  int column = 1;
  std::string message;
};

enum class Errc {
  syntax,
  conjugate_conflict,
  non_finite,
  missing_amplitude,
  domain_violation,
  rule_evaluation,
  not_a_chain,
  degenerate_distribution,
  not_normalized,
  no_root_in_bracket,
  group_too_large,
  duplicate_label,
  unknown_label,
  non_orthogonal_branches,
  unprintable,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Error(Errc code, Diagnostic diag)
      : std::runtime_error("line " + std::to_string(diag.line) + ", column " +
                           std::to_string(diag.column) + ": " + diag.message),
        code_(code),
        diagnostic_(std::move(diag)) {}

  Errc code() const { return code_; }
  const std::optional<Diagnostic>& diagnostic() const { return diagnostic_; }

 private:
  Errc code_;
  std::optional<Diagnostic> diagnostic_;
};

}  // namespace ampcal

#endif  // AMPCAL_ERROR_HPP
