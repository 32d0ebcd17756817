#include "seqrep/sequence_window.hpp"

#include <stdexcept>
#include <string>

namespace seqrep {

SequenceWindow::SequenceWindow(int capacity) : capacity_(capacity) {
  if (capacity < 1) {
    throw ConfigError("SequenceWindow: capacity must be >= 1, got " +
                      std::to_string(capacity));
  }
}

void SequenceWindow::push_step(const Transition& t, double td_error) {
  entries_.push_back({t, td_error});
  if (entries_.size() > static_cast<std::size_t>(capacity_)) {
    entries_.pop_front();
  }
}

TransitionSequence SequenceWindow::tail_sequence(std::size_t count,
                                                 long episode) const {
  TransitionSequence seq;
  seq.created_at = episode;
  seq.triads.reserve(count);
  seq.next_states.reserve(count);
  seq.td_errors.reserve(count);
  seq.terminals.reserve(count);
  for (std::size_t i = entries_.size() - count; i < entries_.size(); ++i) {
    const Entry& e = entries_[i];
    seq.triads.push_back(
        {e.transition.state, e.transition.action, e.transition.reward_secondary});
    seq.next_states.push_back(e.transition.next_state);
    seq.td_errors.push_back(e.td_error);
    seq.terminals.push_back(e.transition.terminal_secondary ? 1 : 0);
  }
  return seq;
}

std::optional<TransitionSequence> SequenceWindow::capture_on_high_reward(
    int m_t, double threshold, long episode) const {
  if (m_t < 1) {
    throw ConfigError("capture_on_high_reward: m_t must be >= 1, got " +
                      std::to_string(m_t));
  }
  if (entries_.empty()) return std::nullopt;
  if (entries_.back().transition.reward_secondary < threshold) {
    return std::nullopt;
  }
  const std::size_t count =
      std::min(entries_.size(), static_cast<std::size_t>(m_t));
  return tail_sequence(count, episode);
}

TransitionSequence SequenceWindow::as_sequence(long episode) const {
  return tail_sequence(entries_.size(), episode);
}

}  // namespace seqrep
