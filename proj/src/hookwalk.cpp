#include "sytb/hookwalk.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace sytb {

ShrinkingShape::ShrinkingShape(const StrictPartition& shape)
    : rows_(shape.num_rows()), cells_(shape.size()) {
  end_.assign(static_cast<std::size_t>(rows_) + 2, 0);
  for (int i = 1; i <= rows_; ++i) end_[i] = shape.row_end(i);

  const int max_col = rows_ > 0 ? shape.row_end(1) : 0;
  reach_.assign(static_cast<std::size_t>(max_col) + 2, 0);
  for (int i = 1; i <= rows_; ++i) ++reach_[end_[i]];
  for (int j = max_col - 1; j >= 1; --j) reach_[j] += reach_[j + 1];

  fenwick_.assign(static_cast<std::size_t>(rows_) + 1, 0);
  while (fenwick_top_ * 2 <= rows_) fenwick_top_ *= 2;
  for (int i = 1; i <= rows_; ++i) fenwick_add(i, row_length(i));
}

void ShrinkingShape::fenwick_add(int row, int delta) {
  for (int i = row; i <= rows_; i += i & -i) fenwick_[i] += delta;
}

Cell ShrinkingShape::uniform_cell(RandomStream& rng) const {
  auto target = static_cast<std::int64_t>(
      rng.below(static_cast<std::uint64_t>(cells_)));
  // Largest prefix whose total is <= target; the cell is in the next row.
  int pos = 0;
  for (int step = fenwick_top_; step > 0; step >>= 1) {
    const int next = pos + step;
    if (next <= rows_ && fenwick_[next] <= target) {
      pos = next;
      target -= fenwick_[next];
    }
  }
  const int row = pos + 1;
  return {row, row + static_cast<int>(target)};
}

Cell ShrinkingShape::hook_step(const Cell& c, RandomStream& rng) const {
  const int arm = end_[c.row] - c.col;
  const int leg = column_height(c.col) - c.row;
  const int broken = row_length(c.col + 1);
  const int others = arm + leg + broken;
  if (others == 0) return c;
  auto k = static_cast<int>(rng.below(static_cast<std::uint64_t>(others)));
  if (k < arm) return {c.row, c.col + 1 + k};
  k -= arm;
  if (k < leg) return {c.row + 1 + k, c.col};
  k -= leg;
  return {c.col + 1, c.col + 1 + k};
}

Cell ShrinkingShape::walk(RandomStream& rng) const {
  Cell c = uniform_cell(rng);
  for (;;) {
    const Cell next = hook_step(c, rng);
    if (next == c) return c;
    c = next;
  }
}

void ShrinkingShape::remove_corner(const Cell& c) {
  --reach_[end_[c.row]];
  --end_[c.row];
  if (end_[c.row] < c.row) {
    // An empty row no longer reaches any column.
    for (int j = 1; j <= end_[c.row]; ++j) --reach_[j];
  }
  --cells_;
  fenwick_add(c.row, -1);
}

Cell hook_walk(const StrictPartition& shape, RandomStream& rng) {
  if (shape.empty()) throw ValidationError("hook_walk: shape is empty");
  return ShrinkingShape(shape).walk(rng);
}

ShiftedTableau sample_syt(const StrictPartition& shape, RandomStream& rng) {
  if (shape.empty()) throw ValidationError("sample_syt: shape is empty");
  std::vector<std::vector<Label>> rows;
  rows.reserve(static_cast<std::size_t>(shape.num_rows()));
  for (int i = 1; i <= shape.num_rows(); ++i) {
    rows.emplace_back(static_cast<std::size_t>(shape.row_length(i)), 0);
  }
  ShrinkingShape state(shape);
  for (auto label = static_cast<Label>(shape.size()); label >= 1; --label) {
    const Cell c = state.walk(rng);
    rows[c.row - 1][c.col - c.row] = label;
    state.remove_corner(c);
  }
  return ShiftedTableau(shape, std::move(rows));
}

std::vector<ShiftedTableau> sample_syt_batch(const StrictPartition& shape,
                                             std::size_t count,
                                             std::uint64_t seed) {
  if (shape.empty()) throw ValidationError("sample_syt_batch: shape is empty");
  std::vector<ShiftedTableau> out(count);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < count; ++k) {
    RandomStream rng(seed, k);
    out[k] = sample_syt(shape, rng);
  }
  return out;
}

void CornerHistogram::merge(const CornerHistogram& other) {
  for (const auto& [cell, n] : other.counts) counts[cell] += n;
  total += other.total;
}

std::uint64_t CornerHistogram::count(const Cell& c) const {
  const auto it = counts.find(c);
  return it == counts.end() ? 0 : it->second;
}

namespace {

// Dense tally indexed by row: every corner is the last cell of its row.
CornerHistogram tally(const StrictPartition& shape, std::uint64_t samples,
                      RandomStream& rng) {
  const ShrinkingShape state(shape);
  std::vector<std::uint64_t> by_row(static_cast<std::size_t>(shape.num_rows()) + 1,
                                    0);
  for (std::uint64_t s = 0; s < samples; ++s) ++by_row[state.walk(rng).row];
  CornerHistogram h{shape, {}, samples};
  for (int i = 1; i <= shape.num_rows(); ++i) {
    if (by_row[i] > 0) h.counts[{i, shape.row_end(i)}] = by_row[i];
  }
  return h;
}

std::uint64_t stream_share(std::uint64_t samples, std::uint64_t streams,
                           std::uint64_t s) {
  return samples / streams + (s < samples % streams ? 1 : 0);
}

void check_inputs(const StrictPartition& shape, std::uint64_t streams) {
  if (shape.empty()) throw ValidationError("corner distribution: shape is empty");
  if (streams == 0) throw ValidationError("corner distribution: streams must be >= 1");
}

}  // namespace

CornerHistogram corner_distribution_empirical(const StrictPartition& shape,
                                              std::uint64_t samples,
                                              RandomStream& rng) {
  check_inputs(shape, 1);
  return tally(shape, samples, rng);
}

CornerHistogram corner_distribution_streams_serial(const StrictPartition& shape,
                                                   std::uint64_t samples,
                                                   std::uint64_t seed,
                                                   std::uint64_t streams) {
  check_inputs(shape, streams);
  CornerHistogram h{shape, {}, 0};
  for (std::uint64_t s = 0; s < streams; ++s) {
    RandomStream rng(seed, s);
    h.merge(tally(shape, stream_share(samples, streams, s), rng));
  }
  return h;
}

CornerHistogram corner_distribution_parallel(const StrictPartition& shape,
                                             std::uint64_t samples,
                                             std::uint64_t seed,
                                             std::uint64_t streams) {
  check_inputs(shape, streams);
  std::vector<CornerHistogram> parts(streams);
#pragma omp parallel for schedule(dynamic)
  for (std::uint64_t s = 0; s < streams; ++s) {
    RandomStream rng(seed, s);
    parts[s] = tally(shape, stream_share(samples, streams, s), rng);
  }
  CornerHistogram h{shape, {}, 0};
  for (const auto& part : parts) h.merge(part);
  return h;
}

}  // namespace sytb
