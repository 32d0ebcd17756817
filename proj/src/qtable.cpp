#include "seqrep/qtable.hpp"

#include <algorithm>
#include <string>

namespace seqrep {

QTable::QTable(int num_states, int num_actions, double alpha, double gamma)
    : num_states_(num_states),
      num_actions_(num_actions),
      alpha_(alpha),
      gamma_(gamma),
      values_(static_cast<std::size_t>(num_states) * num_actions, 0.0) {
  if (num_states < 1 || num_actions < 1) {
    throw ConfigError("QTable: state and action counts must be positive");
  }
  if (alpha < 0.0 || alpha > 1.0) {
    throw ConfigError("QTable: alpha must lie in [0, 1], got " +
                      std::to_string(alpha));
  }
  if (gamma < 0.0 || gamma >= 1.0) {
    throw ConfigError("QTable: gamma must lie in [0, 1), got " +
                      std::to_string(gamma));
  }
}

void QTable::check_state(StateId s) const {
  if (s < 0 || s >= num_states_) {
    throw std::out_of_range("QTable: state index " + std::to_string(s) +
                            " outside [0, " + std::to_string(num_states_) +
                            ")");
  }
}

void QTable::check(StateId s, ActionId a) const {
  check_state(s);
  if (a < 0 || a >= num_actions_) {
    throw std::out_of_range("QTable: action index " + std::to_string(a) +
                            " outside [0, " + std::to_string(num_actions_) +
                            ")");
  }
}

double QTable::max_value(StateId s) const {
  check_state(s);
  const double* row = values_.data() + static_cast<std::size_t>(s) * num_actions_;
  double best = row[0];
  for (int a = 1; a < num_actions_; ++a) best = std::max(best, row[a]);
  return best;
}

double QTable::td_error(StateId s, ActionId a, double r, StateId s_next,
                        bool terminal) const {
  check(s, a);
  check_state(s_next);
  const double bootstrap = terminal ? 0.0 : max_value(s_next);
  return r + gamma_ * bootstrap - value(s, a);
}

double QTable::update(StateId s, ActionId a, double r, StateId s_next,
                      bool terminal) {
  const double delta = td_error(s, a, r, s_next, terminal);
  values_[static_cast<std::size_t>(s) * num_actions_ + a] += alpha_ * delta;
  return delta;
}

ActionId QTable::greedy_action(StateId s, Rng& rng) const {
  check_state(s);
  const double* row = values_.data() + static_cast<std::size_t>(s) * num_actions_;
  double best = row[0];
  int ties = 1;
  int first = 0;
  for (int a = 1; a < num_actions_; ++a) {
    if (row[a] > best) {
      best = row[a];
      ties = 1;
      first = a;
    } else if (row[a] == best) {
      ++ties;
    }
  }
  if (ties == 1) return first;
  int pick = uniform_index(rng, ties);
  for (int a = first; a < num_actions_; ++a) {
    if (row[a] == best && pick-- == 0) return a;
  }
  return first;  // unreachable
}

ActionId QTable::epsilon_greedy(StateId s, double epsilon, Rng& rng) const {
  if (epsilon < 0.0 || epsilon > 1.0) {
    throw ConfigError("epsilon_greedy: epsilon must lie in [0, 1], got " +
                      std::to_string(epsilon));
  }
  if (uniform_real(rng) < epsilon) {
    return uniform_index(rng, num_actions_);
  }
  return greedy_action(s, rng);
}

}  // namespace seqrep
