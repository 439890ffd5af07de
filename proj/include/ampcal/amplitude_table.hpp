#ifndef AMPCAL_AMPLITUDE_TABLE_HPP
#define AMPCAL_AMPLITUDE_TABLE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "ampcal/amp.hpp"
#include "ampcal/state_label.hpp"

namespace ampcal {

// Map from ordered state pairs (from, to) to the amplitude <to|from>.
// The reverse direction is never stored twice: looking up the missing
// direction synthesizes the conjugate, and inserting the reverse of an
// existing entry must match its exact conjugate.
class AmplitudeTable {
 public:
  // Throws NonFinite and ConjugateConflict.
  void insert(const StateLabel& from, const StateLabel& to, Amp amp);

  // Returns <to|from>. Falls back to the conjugate of a stored (to, from)
  // entry; throws MissingAmplitude when neither direction is present.
  Amp lookup(const StateLabel& from, const StateLabel& to) const;

  // Exact-direction presence.
  bool stored(const StateLabel& from, const StateLabel& to) const;
  // Either direction present.
  bool resolvable(const StateLabel& from, const StateLabel& to) const;

  std::size_t size() const { return entries_.size(); }

 private:
  using Key = std::pair<std::string, std::string>;
  std::map<Key, Amp> entries_;
};

}  // namespace ampcal

#endif  // AMPCAL_AMPLITUDE_TABLE_HPP
