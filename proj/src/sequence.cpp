#include "seqrep/sequence.hpp"

#include <cmath>
#include <stdexcept>

namespace seqrep {

bool TransitionSequence::contiguous() const {
  if (triads.size() != next_states.size()) return false;
  for (std::size_t j = 0; j + 1 < triads.size(); ++j) {
    if (junction && static_cast<std::size_t>(*junction) == j) continue;
    if (next_states[j] != triads[j + 1].state) return false;
  }
  return true;
}

double max_abs_td(const TransitionSequence& seq) {
  if (!seq.has_td_errors()) {
    throw std::logic_error("max_abs_td: sequence carries no TD errors");
  }
  double w = 0.0;
  for (double d : seq.td_errors) w = std::max(w, std::abs(d));
  return w;
}

}  // namespace seqrep
