#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "sytb/random_stream.hpp"
#include "sytb/shifted_shape.hpp"
#include "sytb/tableau.hpp"

namespace sytb {

// Mutable view of a shifted diagram that shrinks one corner at a time.
// Row ends, per-column occupancy and a Fenwick tree over row lengths are
// kept in sync, so hook lengths cost O(1) and a uniform cell costs
// O(log rows).
class ShrinkingShape {
 public:
  explicit ShrinkingShape(const StrictPartition& shape);

  std::int64_t size() const { return cells_; }
  int num_rows() const { return rows_; }

  int row_length(int i) const {
    return (i >= 1 && i <= rows_) ? end_[i] - i + 1 : 0;
  }
  int column_height(int j) const {
    return j < static_cast<int>(reach_.size()) ? std::min(j, reach_[j]) : 0;
  }
  int hook_length(const Cell& c) const {
    return end_[c.row] - c.col + column_height(c.col) - c.row + 1 +
           row_length(c.col + 1);
  }

  Cell uniform_cell(RandomStream& rng) const;

  // One move of the hook walk: a uniform cell of the hook of c other than c.
  // Returns c itself when c is a corner.
  Cell hook_step(const Cell& c, RandomStream& rng) const;

  // Runs a hook walk from a uniform cell until it reaches a corner.
  Cell walk(RandomStream& rng) const;

  // Removes a corner cell; the caller guarantees c is removable.
  void remove_corner(const Cell& c);

 private:
  void fenwick_add(int row, int delta);

  int rows_ = 0;
  std::int64_t cells_ = 0;
  std::vector<int> end_;    // end_[i]: last column of row i (i - 1 if empty)
  std::vector<int> reach_;  // reach_[j]: nonempty rows whose end is >= j
  std::vector<std::int64_t> fenwick_;
  int fenwick_top_ = 1;
};

Cell hook_walk(const StrictPartition& shape, RandomStream& rng);

// Uniformly random standard tableau: labels m, m-1, ..., 1 are placed at the
// corners selected by successive hook walks on the shrinking shape.
ShiftedTableau sample_syt(const StrictPartition& shape, RandomStream& rng);

// `count` independent tableaux; tableau k is drawn from stream (seed, k).
// Parallel over tableaux; the result does not depend on the thread count.
std::vector<ShiftedTableau> sample_syt_batch(const StrictPartition& shape,
                                             std::size_t count,
                                             std::uint64_t seed);

struct CornerHistogram {
  StrictPartition shape;
  std::map<Cell, std::uint64_t> counts;
  std::uint64_t total = 0;

  void merge(const CornerHistogram& other);
  std::uint64_t count(const Cell& c) const;
};

// Histogram of `samples` hook walks drawn from a single stream.
CornerHistogram corner_distribution_empirical(const StrictPartition& shape,
                                              std::uint64_t samples,
                                              RandomStream& rng);

// Samples are split over `streams` stream indices (stream s gets
// samples / streams draws, the first samples % streams streams one more).
// The serial and OpenMP versions produce identical histograms.
CornerHistogram corner_distribution_streams_serial(const StrictPartition& shape,
                                                   std::uint64_t samples,
                                                   std::uint64_t seed,
                                                   std::uint64_t streams);
CornerHistogram corner_distribution_parallel(const StrictPartition& shape,
                                             std::uint64_t samples,
                                             std::uint64_t seed,
                                             std::uint64_t streams);

}  // namespace sytb
