#pragma once

#include <cstdint>
#include <vector>

#include "sytb/coxeter_b.hpp"

namespace sytb {

// A word executed from the identity, with every intermediate state.
struct NetworkRun {
  int n = 0;
  Word word;
  std::vector<SignedPermutation> states;  // states[t] after t letters
  bool reduced = true;                    // word is a reduced word of w0
};

// Height of a card over time: y = sign * position, so the sign change at
// position 1 is a reflection through 0.
struct Trajectory {
  int card = 0;
  std::vector<int> heights;
};

struct SnapshotEntry {
  int position = 0;
  int card = 0;
  int sign = 0;  // +1 or -1

  friend bool operator==(const SnapshotEntry&, const SnapshotEntry&) = default;
};

// Signed permutation matrix at step `step`, one entry per position.
struct MatrixSnapshot {
  double fraction = 0.0;
  std::int64_t step = 0;
  std::vector<SnapshotEntry> entries;
};

// Runs `word` from the identity. Words that are not reduced words of w0 are
// rejected unless `allow_nonreduced`, in which case run.reduced is false.
NetworkRun run_network(int n, const Word& word, bool allow_nonreduced = false);

std::vector<Trajectory> trajectories(const NetworkRun& run);

// Snapshot at step round(fraction * N) for each fraction; fractions must be
// sorted and inside [0, 1].
std::vector<MatrixSnapshot> snapshots(const NetworkRun& run,
                                      const std::vector<double>& fractions);

// Counts of each letter 0..rank-1.
std::vector<std::uint64_t> letter_frequency(const Word& word);

// Step of a snapshot fraction within a word of `length` letters.
std::int64_t snapshot_step(double fraction, std::size_t length);
void check_fractions(const std::vector<double>& fractions);

// Network state without history, for words too long to materialize.
// Keeps the card in each position and the position of each card.
class StreamingNetwork {
 public:
  explicit StreamingNetwork(int n);

  int rank() const { return n_; }
  std::int64_t time() const { return time_; }

  void step(Letter q);

  // Signed height of `card` (1-based).
  int height(int card) const {
    const int pos = position_[card];
    return entries_[pos] > 0 ? pos : -pos;
  }
  MatrixSnapshot snapshot(double fraction) const;
  SignedPermutation state() const;

 private:
  int n_;
  std::int64_t time_ = 0;
  std::vector<int> entries_;   // entries_[position], 1-based
  std::vector<int> position_;  // position_[card], 1-based
};

}  // namespace sytb
