#ifndef AMPCAL_HILBERT_HPP
#define AMPCAL_HILBERT_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ampcal/amp.hpp"
#include "ampcal/amplitude_table.hpp"
#include "ampcal/process_expr.hpp"
#include "ampcal/state_label.hpp"

namespace ampcal {

// Finite-dimensional complex inner-product space with labeled unit vectors:
// the brute-force reference model where <A|B> is a literal inner product.
class HilbertModel {
 public:
  HilbertModel(int dim,
               std::vector<std::pair<StateLabel, std::vector<Amp>>> states);

  int dim() const { return dim_; }
  const std::vector<Amp>& vector_for(const StateLabel& label) const;
  const std::vector<std::pair<StateLabel, std::vector<Amp>>>& states() const {
    return states_;
  }

 private:
  int dim_;
  std::vector<std::pair<StateLabel, std::vector<Amp>>> states_;
  std::map<std::string, std::size_t> index_;
};

// <u|v> = sum_i conj(u_i) v_i: conjugate-linear in the bra slot.
Amp inner_product(std::span<const Amp> bra, std::span<const Amp> ket);

// Deterministic fixture generator: every orthogonal group is produced by
// Gram-Schmidt (with a second orthogonalization pass) over seeded random
// complex vectors; remaining labels get independent random unit vectors.
// Throws GroupTooLarge, DuplicateLabel, UnknownLabel.
HilbertModel random_model(int dim, std::span<const StateLabel> labels,
                          std::span<const std::vector<StateLabel>> orthogonal_groups,
                          std::uint64_t seed);

// <to|from>.
Amp model_amplitude(const HilbertModel& m, const StateLabel& from,
                    const StateLabel& to);

// Table with one entry per distinct leg; reverse duplicates resolve through
// conjugate lookup rather than a second stored entry.
AmplitudeTable table_from_model(
    const HilbertModel& m,
    std::span<const std::pair<StateLabel, StateLabel>> legs);

// Atomic -> inner product; Series -> product (later * earlier); Parallel ->
// sum over branches, refused unless every branch's first intermediate state
// is pairwise orthogonal within 1e-10 (NonOrthogonalBranches).
Amp oracle_eval(const HilbertModel& m, const ProcessExpr& e);

// max |<l_i|l_j>| over distinct positions i != j.
double orthogonality_check(const HilbertModel& m,
                           std::span<const StateLabel> labels);

}  // namespace ampcal

#endif  // AMPCAL_HILBERT_HPP
