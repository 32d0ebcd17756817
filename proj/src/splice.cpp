#include "seqrep/splice.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace seqrep {

std::optional<Junction> find_junction(const TransitionSequence& theta_b,
                                      const TransitionSequence& theta_t) {
  if (theta_b.empty() || theta_t.empty()) return std::nullopt;
  // Earliest usable position of each state in theta_t; the last triad is
  // excluded because a splice needs a non-empty suffix.
  std::unordered_map<StateId, int> earliest;
  earliest.reserve(theta_t.size());
  for (int j = 0; j + 1 < static_cast<int>(theta_t.size()); ++j) {
    earliest.emplace(theta_t.triads[j].state, j);
  }
  for (int i = static_cast<int>(theta_b.size()) - 1; i >= 0; --i) {
    auto it = earliest.find(theta_b.triads[i].state);
    if (it != earliest.end()) {
      return Junction{i, it->second, theta_b.triads[i].state};
    }
  }
  return std::nullopt;
}

namespace {

void validate_junction(const TransitionSequence& theta_b,
                       const TransitionSequence& theta_t,
                       const Junction& junction) {
  const bool b_ok = junction.b_index >= 0 &&
                    junction.b_index < static_cast<int>(theta_b.size());
  const bool t_ok = junction.t_index >= 0 &&
                    junction.t_index + 1 < static_cast<int>(theta_t.size());
  if (!b_ok || !t_ok) {
    throw std::logic_error("splice: junction indices out of range");
  }
  if (theta_b.triads[junction.b_index].state != junction.state ||
      theta_t.triads[junction.t_index].state != junction.state) {
    throw std::logic_error("splice: junction state mismatch");
  }
}

}  // namespace

TransitionSequence splice(const TransitionSequence& theta_b,
                          const TransitionSequence& theta_t,
                          const Junction& junction, JunctionMode mode) {
  validate_junction(theta_b, theta_t, junction);
  const int bi = junction.b_index;
  const int ti = junction.t_index;
  const std::size_t suffix_len = theta_t.size() - ti - 1;

  TransitionSequence v;
  v.created_at = theta_b.created_at;
  v.junction = bi;
  const std::size_t total = bi + 1 + suffix_len;
  v.triads.reserve(total);
  v.next_states.reserve(total);
  v.td_errors.reserve(total);
  v.terminals.reserve(total);

  for (int k = 0; k < bi; ++k) {
    v.triads.push_back(theta_b.triads[k]);
    v.next_states.push_back(theta_b.next_states[k]);
    v.td_errors.push_back(theta_b.td_errors[k]);
    v.terminals.push_back(theta_b.terminals[k]);
  }
  // The junction transition: its successor is always the spliced one, so a
  // reverse replay chains the suffix's values into the prefix.
  if (mode == JunctionMode::behavior) {
    v.triads.push_back(theta_b.triads[bi]);
    v.td_errors.push_back(theta_b.td_errors[bi]);
  } else {
    v.triads.push_back(theta_t.triads[ti]);
    v.td_errors.push_back(theta_t.td_errors[ti]);
  }
  v.next_states.push_back(theta_t.next_states[ti]);
  v.terminals.push_back(theta_t.terminals[ti]);

  for (std::size_t k = ti + 1; k < theta_t.size(); ++k) {
    v.triads.push_back(theta_t.triads[k]);
    v.next_states.push_back(theta_t.next_states[k]);
    v.td_errors.push_back(theta_t.td_errors[k]);
    v.terminals.push_back(theta_t.terminals[k]);
  }
  return v;
}

VirtualLibrary::VirtualLibrary(int capacity) : capacity_(capacity) {
  if (capacity < 1) {
    throw ConfigError("VirtualLibrary: capacity must be >= 1, got " +
                      std::to_string(capacity));
  }
}

int rebuild_virtual_library(VirtualLibrary& lv,
                            const TransitionSequence& theta_b,
                            const SequenceLibrary& lib, JunctionMode mode,
                            std::ostream* junction_log) {
  lv.sequences_.clear();
  for (std::size_t idx = 0; idx < lib.sequences().size(); ++idx) {
    const TransitionSequence& theta_t = lib.sequences()[idx];
    const auto junction = find_junction(theta_b, theta_t);
    if (!junction) continue;
    if (junction_log != nullptr) {
      (*junction_log) << theta_b.created_at << ',' << idx << ','
                      << junction->b_index << ',' << junction->t_index << '\n';
    }
    lv.sequences_.push_back(splice(theta_b, theta_t, *junction, mode));
  }
  if (lv.sequences_.size() > static_cast<std::size_t>(lv.capacity_)) {
    std::stable_sort(lv.sequences_.begin(), lv.sequences_.end(),
                     [](const TransitionSequence& a,
                        const TransitionSequence& b) {
                       return max_abs_td(a) > max_abs_td(b);
                     });
    lv.sequences_.resize(lv.capacity_);
  }
  return static_cast<int>(lv.sequences_.size());
}

}  // namespace seqrep
