#include "seqrep/sequence_library.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace seqrep {

SequenceLibrary::SequenceLibrary(int capacity, double tau)
    : capacity_(capacity), tau_(tau) {
  if (capacity < 1) {
    throw ConfigError("SequenceLibrary: capacity must be >= 1, got " +
                      std::to_string(capacity));
  }
  if (tau <= 0.0) {
    throw ConfigError("SequenceLibrary: tau must be > 0, got " +
                      std::to_string(tau));
  }
}

bool SequenceLibrary::consider(TransitionSequence candidate) {
  if (!candidate.has_td_errors()) {
    throw std::logic_error("SequenceLibrary: candidate carries no TD errors");
  }
  const double w_new = max_abs_td(candidate);
  if (!sequences_.empty()) {
    double w_max = 0.0;
    for (const TransitionSequence& seq : sequences_) {
      w_max = std::max(w_max, max_abs_td(seq));
    }
    // Strict inequality: a candidate exactly at the gate is rejected.
    if (!(w_new * tau_ > w_max)) return false;
  }
  sequences_.push_back(std::move(candidate));
  if (sequences_.size() > static_cast<std::size_t>(capacity_)) {
    sequences_.erase(sequences_.begin(),
                     sequences_.end() - capacity_);
  }
  return true;
}

void SequenceLibrary::dump_csv(std::ostream& out) const {
  out << "episode,length,w\n";
  for (const TransitionSequence& seq : sequences_) {
    out << seq.created_at << ',' << seq.size() << ',' << max_abs_td(seq)
        << '\n';
  }
}

}  // namespace seqrep
