#pragma once

#include <deque>
#include <optional>

#include "seqrep/sequence.hpp"

namespace seqrep {

/// Ring of the latest m_b transitions of the running episode, each paired
/// with the secondary-task TD error observed when it happened. Cleared at
/// episode boundaries; sequences never span episodes.
class SequenceWindow {
 public:
  explicit SequenceWindow(int capacity);

  int capacity() const { return capacity_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Appends a step; evicts the oldest entry once the window is full.
  void push_step(const Transition& t, double td_error);

  // Call after push_step. If the newest transition's secondary reward meets
  // the threshold, returns the last min(size, m_t) entries as a sequence
  // with TD errors attached; otherwise nothing.
  std::optional<TransitionSequence> capture_on_high_reward(
      int m_t, double threshold, long episode) const;

  // Snapshot of the whole window as a sequence (the Theta_b for splicing).
  TransitionSequence as_sequence(long episode) const;

  void clear() { entries_.clear(); }

 private:
  struct Entry {
    Transition transition;
    double td_error;
  };

  TransitionSequence tail_sequence(std::size_t count, long episode) const;

  int capacity_;
  std::deque<Entry> entries_;
};

}  // namespace seqrep
