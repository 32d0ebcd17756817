#pragma once

#include <vector>

#include "seqrep/types.hpp"

namespace seqrep {

/// Dense tabular action-value function with its learning parameters.
/// Fresh tables are all zeros. Terminal transitions suppress the bootstrap
/// term, so goal states act as absorbing for the task being updated.
class QTable {
 public:
  QTable(int num_states, int num_actions, double alpha, double gamma);

  int num_states() const { return num_states_; }
  int num_actions() const { return num_actions_; }
  double alpha() const { return alpha_; }
  double gamma() const { return gamma_; }

  double value(StateId s, ActionId a) const {
    check(s, a);
    return values_[static_cast<std::size_t>(s) * num_actions_ + a];
  }

  // max over the row; the bootstrap term of the update rule.
  double max_value(StateId s) const;

  // r + gamma * max_a' Q(s', a') - Q(s, a); bootstrap dropped when terminal.
  double td_error(StateId s, ActionId a, double r, StateId s_next,
                  bool terminal) const;

  // Applies Q(s,a) += alpha * delta and returns delta (computed before the
  // write). Touches no other cell.
  double update(StateId s, ActionId a, double r, StateId s_next,
                bool terminal);

  // Argmax over the row, ties broken uniformly at random.
  ActionId greedy_action(StateId s, Rng& rng) const;

  // With probability epsilon a uniformly random action, else greedy.
  ActionId epsilon_greedy(StateId s, double epsilon, Rng& rng) const;

  const std::vector<double>& raw() const { return values_; }

 private:
  void check(StateId s, ActionId a) const;
  void check_state(StateId s) const;

  int num_states_;
  int num_actions_;
  double alpha_;
  double gamma_;
  std::vector<double> values_;
};

}  // namespace seqrep
