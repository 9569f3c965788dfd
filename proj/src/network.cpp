#include "sytb/network.hpp"

#include <cmath>

#include <fmt/format.h>

#include "sytb/shifted_shape.hpp"

namespace sytb {

NetworkRun run_network(int n, const Word& word, bool allow_nonreduced) {
  if (word.rank != n) {
    throw ValidationError(
        fmt::format("run_network: word has rank {}, network has rank {}", word.rank, n));
  }
  const bool reduced = is_reduced_word_of_w0(word);
  if (!reduced && !allow_nonreduced) {
    throw ValidationError("run_network: word is not a reduced word of w0");
  }
  NetworkRun run{n, word, {}, reduced};
  run.states.reserve(word.size() + 1);
  run.states.push_back(identity(n));
  for (Letter q : word.letters) run.states.push_back(apply_generator(run.states.back(), q));
  return run;
}

std::vector<Trajectory> trajectories(const NetworkRun& run) {
  std::vector<Trajectory> out(static_cast<std::size_t>(run.n));
  for (int card = 1; card <= run.n; ++card) {
    out[card - 1].card = card;
    out[card - 1].heights.reserve(run.states.size());
  }
  for (const SignedPermutation& state : run.states) {
    for (int pos = 1; pos <= run.n; ++pos) {
      const int c = state[pos];
      const int card = std::abs(c);
      out[card - 1].heights.push_back(c > 0 ? pos : -pos);
    }
  }
  return out;
}

void check_fractions(const std::vector<double>& fractions) {
  for (std::size_t k = 0; k < fractions.size(); ++k) {
    const double f = fractions[k];
    if (!(f >= 0.0 && f <= 1.0)) {
      throw ValidationError(fmt::format("snapshot fraction {} is outside [0, 1]", f));
    }
    if (k > 0 && f < fractions[k - 1]) {
      throw ValidationError("snapshot fractions must be sorted");
    }
  }
}

std::int64_t snapshot_step(double fraction, std::size_t length) {
  return std::llround(fraction * static_cast<double>(length));
}

namespace {

MatrixSnapshot make_snapshot(double fraction, std::int64_t step,
                             std::span<const int> entries) {
  MatrixSnapshot snap{fraction, step, {}};
  snap.entries.reserve(entries.size());
  for (std::size_t p = 0; p < entries.size(); ++p) {
    const int c = entries[p];
    snap.entries.push_back({static_cast<int>(p) + 1, std::abs(c), c > 0 ? 1 : -1});
  }
  return snap;
}

}  // namespace

std::vector<MatrixSnapshot> snapshots(const NetworkRun& run,
                                      const std::vector<double>& fractions) {
  check_fractions(fractions);
  std::vector<MatrixSnapshot> out;
  out.reserve(fractions.size());
  for (double f : fractions) {
    const std::int64_t t = snapshot_step(f, run.word.size());
    out.push_back(make_snapshot(f, t, run.states[static_cast<std::size_t>(t)].entries()));
  }
  return out;
}

std::vector<std::uint64_t> letter_frequency(const Word& word) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(word.rank), 0);
  for (Letter q : word.letters) ++counts[static_cast<std::size_t>(q)];
  return counts;
}

namespace {

int checked_rank(int n) {
  if (n < 1) throw ValidationError(fmt::format("StreamingNetwork: n = {} < 1", n));
  return n;
}

}  // namespace

StreamingNetwork::StreamingNetwork(int n)
    : n_(checked_rank(n)),
      entries_(static_cast<std::size_t>(n_) + 1),
      position_(static_cast<std::size_t>(n_) + 1) {
  for (int i = 1; i <= n; ++i) {
    entries_[i] = i;
    position_[i] = i;
  }
}

void StreamingNetwork::step(Letter q) {
  if (q < 0 || q >= n_) {
    throw ValidationError(fmt::format("generator {} is outside 0..{}", q, n_ - 1));
  }
  if (q == 0) {
    entries_[1] = -entries_[1];
  } else {
    std::swap(entries_[q], entries_[q + 1]);
    position_[std::abs(entries_[q])] = q;
    position_[std::abs(entries_[q + 1])] = q + 1;
  }
  ++time_;
}

MatrixSnapshot StreamingNetwork::snapshot(double fraction) const {
  return make_snapshot(fraction, time_, std::span<const int>(entries_).subspan(1));
}

SignedPermutation StreamingNetwork::state() const {
  return SignedPermutation(std::vector<int>(entries_.begin() + 1, entries_.end()));
}

}  // namespace sytb
