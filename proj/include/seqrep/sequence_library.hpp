#pragma once

#include <ostream>
#include <vector>

#include "seqrep/sequence.hpp"

namespace seqrep {

/// Bounded, tau-gated store of high-reward transition sequences (the replay
/// library L). A candidate enters iff the library is empty or
/// W_new * tau > max_i W_i with W = max |delta|; overflow evicts the oldest
/// entries so exactly `capacity` sequences survive.
class SequenceLibrary {
 public:
  SequenceLibrary(int capacity, double tau);

  int capacity() const { return capacity_; }
  double tau() const { return tau_; }
  std::size_t size() const { return sequences_.size(); }
  bool empty() const { return sequences_.empty(); }

  const std::vector<TransitionSequence>& sequences() const {
    return sequences_;
  }

  // Returns whether the candidate was appended.
  bool consider(TransitionSequence candidate);

  // Line-delimited debug dump: episode,length,W per stored sequence.
  void dump_csv(std::ostream& out) const;

  void clear() { sequences_.clear(); }

 private:
  int capacity_;
  double tau_;
  std::vector<TransitionSequence> sequences_;
};

}  // namespace seqrep
