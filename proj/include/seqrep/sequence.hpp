#pragma once

#include <optional>
#include <vector>

#include "seqrep/types.hpp"

namespace seqrep {

// One (state, action, reward) triad of a transition sequence. Rewards are in
// secondary-task units throughout the sequence machinery.
struct Triad {
  StateId state = 0;
  ActionId action = 0;
  double reward = 0.0;

  bool operator==(const Triad&) const = default;
};

/// Ordered triads with the successor state, TD error and terminal flag of
/// each transition carried in parallel. Consecutive triads are contiguous
/// (next_states[j] == triads[j+1].state) except at the declared splice
/// junction of a virtual sequence.
struct TransitionSequence {
  std::vector<Triad> triads;
  std::vector<StateId> next_states;
  std::vector<double> td_errors;       // empty until captured with errors
  std::vector<std::uint8_t> terminals; // bootstrap suppression per transition
  std::optional<int> junction;         // splice point, virtual sequences only
  long created_at = 0;                 // episode counter at capture time

  std::size_t size() const { return triads.size(); }
  bool empty() const { return triads.empty(); }
  bool has_td_errors() const { return td_errors.size() == triads.size(); }

  // Contiguity check, skipping the declared junction index if any.
  bool contiguous() const;
};

// max_j |delta_j|; the W value of the library acceptance rule.
double max_abs_td(const TransitionSequence& seq);

}  // namespace seqrep
