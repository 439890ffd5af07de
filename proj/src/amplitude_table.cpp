#include "ampcal/amplitude_table.hpp"

#include "ampcal/error.hpp"
#include "ampcal/format.hpp"

namespace ampcal {

void AmplitudeTable::insert(const StateLabel& from, const StateLabel& to,
                            Amp amp) {
  if (!is_finite(amp)) {
    throw Error(Errc::non_finite, "amplitude <" + to.str() + "|" + from.str() +
                                      "> has a non-finite component");
  }
  Key key{from.str(), to.str()};
  if (auto it = entries_.find(key); it != entries_.end()) {
    if (!(it->second.real() == amp.real() && it->second.imag() == amp.imag())) {
      throw Error(Errc::conjugate_conflict,
                  "duplicate entry <" + to.str() + "|" + from.str() +
                      "> with a different value (" + format_amp(amp) +
                      " vs stored " + format_amp(it->second) + ")");
    }
    return;
  }
  Key reverse{to.str(), from.str()};
  if (auto it = entries_.find(reverse); it != entries_.end()) {
    Amp expected = std::conj(it->second);
    if (!(expected.real() == amp.real() && expected.imag() == amp.imag())) {
      throw Error(Errc::conjugate_conflict,
                  "<" + to.str() + "|" + from.str() + "> = " + format_amp(amp) +
                      " conflicts with stored <" + from.str() + "|" + to.str() +
                      "> = " + format_amp(it->second) +
                      "; it must equal the exact conjugate " +
                      format_amp(expected));
    }
  }
  entries_.emplace(std::move(key), amp);
}

Amp AmplitudeTable::lookup(const StateLabel& from, const StateLabel& to) const {
  if (auto it = entries_.find(Key{from.str(), to.str()}); it != entries_.end()) {
    return it->second;
  }
  if (auto it = entries_.find(Key{to.str(), from.str()}); it != entries_.end()) {
    return std::conj(it->second);
  }
  throw Error(Errc::missing_amplitude,
              "missing amplitude for leg (" + from.str() + " -> " + to.str() +
                  "): neither <" + to.str() + "|" + from.str() + "> nor <" +
                  from.str() + "|" + to.str() + "> is given");
}

bool AmplitudeTable::stored(const StateLabel& from, const StateLabel& to) const {
  return entries_.count(Key{from.str(), to.str()}) != 0;
}

bool AmplitudeTable::resolvable(const StateLabel& from,
                                const StateLabel& to) const {
  return stored(from, to) || stored(to, from);
}

}  // namespace ampcal
