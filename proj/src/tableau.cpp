#include "sytb/tableau.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include <fmt/format.h>

namespace sytb {

ShiftedTableau::ShiftedTableau(StrictPartition shape,
                               std::vector<std::vector<Label>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.num_rows()) {
    throw ValidationError(fmt::format("tableau has {} rows, shape ({}) has {}",
                                      rows_.size(), to_string(shape_),
                                      shape_.num_rows()));
  }
  for (int i = 1; i <= shape_.num_rows(); ++i) {
    if (static_cast<int>(rows_[i - 1].size()) != shape_.row_length(i)) {
      throw ValidationError(fmt::format(
          "tableau row {} has {} entries, shape ({}) expects {}", i,
          rows_[i - 1].size(), to_string(shape_), shape_.row_length(i)));
    }
  }
}

std::vector<Label> ShiftedTableau::reading_word() const {
  std::vector<Label> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
  return out;
}

int ShiftedTableau::staircase_rank() const {
  const int n = shape_.num_rows();
  if (n == 0) return 0;
  for (int i = 1; i <= n; ++i) {
    if (shape_.row_length(i) != 2 * (n - i) + 1) return 0;
  }
  return n;
}

namespace {

enum class Fault { none, range, duplicate, row_order, column_order };

Fault check_local(const ShiftedTableau& t, const Cell& c) {
  const Label v = t.at(c);
  if (v < 1 || v > t.size()) return Fault::range;
  if (c.col > c.row && t.at({c.row, c.col - 1}) >= v) return Fault::row_order;
  if (c.row > 1 && t.at({c.row - 1, c.col}) >= v) return Fault::column_order;
  return Fault::none;
}

ValidationReport make_report(const ShiftedTableau& t, const Cell& c,
                             Fault fault) {
  const Label v = t.at(c);
  std::string message;
  switch (fault) {
    case Fault::range:
      message = fmt::format("label {} at {} is outside 1..{}", v, to_string(c),
                            t.size());
      break;
    case Fault::duplicate:
      message = fmt::format("label {} at {} repeats an earlier cell", v,
                            to_string(c));
      break;
    case Fault::row_order:
      message = fmt::format("label {} at {} does not exceed its left neighbour",
                            v, to_string(c));
      break;
    case Fault::column_order:
      message = fmt::format("label {} at {} does not exceed the cell above it",
                            v, to_string(c));
      break;
    case Fault::none:
      break;
  }
  return ValidationReport{false, c, std::move(message)};
}

}  // namespace

ValidationReport validate(const ShiftedTableau& t) {
  std::vector<bool> seen(static_cast<std::size_t>(t.size()) + 1, false);
  const auto& shape = t.shape();
  for (int i = 1; i <= shape.num_rows(); ++i) {
    for (int j = i; j <= shape.row_end(i); ++j) {
      const Cell c{i, j};
      Fault fault = check_local(t, c);
      if (fault == Fault::none) {
        const auto v = static_cast<std::size_t>(t.at(c));
        if (seen[v]) fault = Fault::duplicate;
        seen[v] = true;
      }
      if (fault != Fault::none) return make_report(t, c, fault);
    }
  }
  return {};
}

ValidationReport validate_parallel(const ShiftedTableau& t) {
  const auto& shape = t.shape();
  const int rows = shape.num_rows();
  const std::int64_t m = t.size();
  constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();

  // Start index of each row in reading order.
  std::vector<std::int64_t> offset(static_cast<std::size_t>(rows) + 1, 0);
  for (int i = 1; i <= rows; ++i) offset[i] = offset[i - 1] + shape.row_length(i);

  // First reading-order index holding each label.
  std::vector<std::atomic<std::int64_t>> first(static_cast<std::size_t>(m) + 1);
#pragma omp parallel for schedule(static)
  for (std::int64_t v = 0; v <= m; ++v) {
    first[v].store(kNone, std::memory_order_relaxed);
  }

#pragma omp parallel for schedule(dynamic, 16)
  for (int i = 1; i <= rows; ++i) {
    const auto& row = t.rows()[i - 1];
    for (std::size_t k = 0; k < row.size(); ++k) {
      const Label v = row[k];
      if (v < 1 || v > m) continue;
      const std::int64_t idx = offset[i - 1] + static_cast<std::int64_t>(k);
      auto& slot = first[static_cast<std::size_t>(v)];
      std::int64_t cur = slot.load(std::memory_order_relaxed);
      while (idx < cur &&
             !slot.compare_exchange_weak(cur, idx, std::memory_order_relaxed)) {
      }
    }
  }

  std::vector<std::int64_t> bad_index(static_cast<std::size_t>(rows), kNone);
  std::vector<Fault> bad_fault(static_cast<std::size_t>(rows), Fault::none);
#pragma omp parallel for schedule(dynamic, 16)
  for (int i = 1; i <= rows; ++i) {
    for (int j = i; j <= shape.row_end(i); ++j) {
      const Cell c{i, j};
      Fault fault = check_local(t, c);
      const std::int64_t idx = offset[i - 1] + (j - i);
      if (fault == Fault::none &&
          first[static_cast<std::size_t>(t.at(c))].load(
              std::memory_order_relaxed) != idx) {
        fault = Fault::duplicate;
      }
      if (fault != Fault::none) {
        bad_index[i - 1] = idx;
        bad_fault[i - 1] = fault;
        break;
      }
    }
  }

  for (int i = 1; i <= rows; ++i) {
    if (bad_fault[i - 1] != Fault::none) {
      const int col = i + static_cast<int>(bad_index[i - 1] - offset[i - 1]);
      return make_report(t, {i, col}, bad_fault[i - 1]);
    }
  }
  return {};
}

std::vector<ShiftedTableau> enumerate_syt(const StrictPartition& shape,
                                          int max_cells) {
  if (shape.size() > max_cells) {
    throw OracleBoundExceeded(fmt::format(
        "enumerate_syt: shape ({}) has {} cells, bound is {}",
        to_string(shape), shape.size(), max_cells));
  }
  std::vector<std::vector<Label>> rows;
  for (int i = 1; i <= shape.num_rows(); ++i) {
    rows.emplace_back(static_cast<std::size_t>(shape.row_length(i)), 0);
  }

  // Largest labels go into removable corners of the shrinking shape.
  std::vector<std::vector<Label>> found;
  std::vector<int> lengths(shape.parts().begin(), shape.parts().end());
  const auto removable = [&](int r) {
    const int len = lengths[r];
    if (len == 0) return false;
    const int below = r + 1 < static_cast<int>(lengths.size()) ? lengths[r + 1] : 0;
    return len - 1 > below || (len == 1 && below == 0);
  };
  auto rec = [&](auto&& self, Label label) -> void {
    if (label == 0) {
      std::vector<Label> word;
      for (const auto& row : rows) word.insert(word.end(), row.begin(), row.end());
      found.push_back(std::move(word));
      return;
    }
    for (int r = 0; r < static_cast<int>(lengths.size()); ++r) {
      if (!removable(r)) continue;
      rows[r][lengths[r] - 1] = label;
      --lengths[r];
      self(self, label - 1);
      ++lengths[r];
    }
  };
  rec(rec, static_cast<Label>(shape.size()));

  std::sort(found.begin(), found.end());
  std::vector<ShiftedTableau> out;
  out.reserve(found.size());
  for (const auto& word : found) {
    std::vector<std::vector<Label>> r;
    std::size_t pos = 0;
    for (int i = 1; i <= shape.num_rows(); ++i) {
      const auto len = static_cast<std::size_t>(shape.row_length(i));
      r.emplace_back(word.begin() + static_cast<std::ptrdiff_t>(pos),
                     word.begin() + static_cast<std::ptrdiff_t>(pos + len));
      pos += len;
    }
    out.emplace_back(shape, std::move(r));
  }
  return out;
}

Cell max_cell(const ShiftedTableau& t) {
  if (t.size() == 0) throw ValidationError("max_cell: tableau is empty");
  const auto m = static_cast<Label>(t.size());
  const auto& shape = t.shape();
  for (int i = 1; i <= shape.num_rows(); ++i) {
    const auto& row = t.rows()[i - 1];
    const auto it = std::find(row.begin(), row.end(), m);
    if (it != row.end()) return {i, i + static_cast<int>(it - row.begin())};
  }
  throw ValidationError(fmt::format("max_cell: label {} not present", m));
}

}  // namespace sytb
