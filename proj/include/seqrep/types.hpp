#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace seqrep {

// Dense state/action indices. Environments define the encoding; every table
// and buffer in the library is sized against the same counts.
using StateId = int;
using ActionId = int;

// Single RNG type used everywhere. Each run owns exactly one generator and
// all stochastic decisions (action selection, environment noise, sampling,
// tie breaks) draw from it, so a run is reproducible from its seed.
using Rng = std::mt19937_64;

// Thrown for malformed configuration values (as opposed to programming
// errors, which use the standard logic_error family).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One environment step with both task views attached. The behavior policy
// only looks at the primary fields; the secondary fields feed the off-policy
// learner, the window and the replay buffers.
struct Transition {
  StateId state = 0;
  ActionId action = 0;
  double reward_primary = 0.0;
  double reward_secondary = 0.0;
  StateId next_state = 0;
  bool terminal_primary = false;
  bool terminal_secondary = false;
};

struct StepOutcome {
  StateId next_state = 0;
  double reward_primary = 0.0;
  double reward_secondary = 0.0;
  bool terminal_primary = false;
  bool terminal_secondary = false;
};

inline int uniform_index(Rng& rng, int n) {
  return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(rng));
}

inline double uniform_real(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace seqrep
