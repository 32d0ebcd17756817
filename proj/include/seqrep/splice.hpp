#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "seqrep/sequence.hpp"
#include "seqrep/sequence_library.hpp"

namespace seqrep {

// A state shared by the recent window's and a stored sequence's state
// trajectories; the crossover point of a splice.
struct Junction {
  int b_index = 0;  // position in the window sequence (prefix end, inclusive)
  int t_index = 0;  // position in the stored sequence (suffix starts after)
  StateId state = 0;

  bool operator==(const Junction&) const = default;
};

// Which triad sits at the junction of a spliced sequence: the window's own
// (the literal construction; the action actually taken there) or the stored
// sequence's (dynamics-consistent variant for ablation).
enum class JunctionMode { behavior, target };

/// Finds the intersection maximizing the window prefix length: the pair
/// (i, j) with equal states and j not the stored sequence's last position,
/// maximal in i and, among those, minimal in j. Nothing when the state
/// trajectories are disjoint.
std::optional<Junction> find_junction(const TransitionSequence& theta_b,
                                      const TransitionSequence& theta_t);

/// Builds the virtual sequence: the window's triads up to and including
/// b_index followed by the stored sequence's triads strictly after t_index.
/// The junction transition bootstraps from the spliced successor, which is
/// what lets the stored sequence's TD errors propagate into the prefix when
/// replayed in reverse.
TransitionSequence splice(const TransitionSequence& theta_b,
                          const TransitionSequence& theta_t,
                          const Junction& junction, JunctionMode mode);

/// Bounded store of spliced sequences (L_v), rebuilt from the current window
/// whenever replay triggers.
class VirtualLibrary {
 public:
  explicit VirtualLibrary(int capacity);

  int capacity() const { return capacity_; }
  std::size_t size() const { return sequences_.size(); }
  bool empty() const { return sequences_.empty(); }
  const std::vector<TransitionSequence>& sequences() const {
    return sequences_;
  }

  void clear() { sequences_.clear(); }

  friend int rebuild_virtual_library(VirtualLibrary& lv,
                                     const TransitionSequence& theta_b,
                                     const SequenceLibrary& lib,
                                     JunctionMode mode,
                                     std::ostream* junction_log);

 private:
  int capacity_;
  std::vector<TransitionSequence> sequences_;
};

/// Replaces the contents of L_v with one splice per intersecting library
/// sequence; keeps the highest-|TD| splices when more than capacity are
/// produced. Returns the number stored. The optional log receives one
/// `episode,library_index,b_index,t_index` line per junction found.
int rebuild_virtual_library(VirtualLibrary& lv,
                            const TransitionSequence& theta_b,
                            const SequenceLibrary& lib, JunctionMode mode,
                            std::ostream* junction_log = nullptr);

}  // namespace seqrep
