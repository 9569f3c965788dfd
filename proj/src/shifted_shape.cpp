#include "sytb/shifted_shape.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <fmt/format.h>

namespace sytb {

std::string to_string(const Cell& c) {
  return fmt::format("({},{})", c.row, c.col);
}

StrictPartition::StrictPartition(std::vector<int> parts)
    : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw ValidationError(fmt::format(
          "strict partition: part {} is {}, parts must be positive", i + 1,
          parts_[i]));
    }
    if (i > 0 && parts_[i] >= parts_[i - 1]) {
      throw ValidationError(fmt::format(
          "strict partition: parts must strictly decrease, got {} then {}",
          parts_[i - 1], parts_[i]));
    }
    size_ += parts_[i];
  }
}

std::vector<Cell> StrictPartition::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int i = 1; i <= num_rows(); ++i) {
    for (int j = i; j <= row_end(i); ++j) out.push_back({i, j});
  }
  return out;
}

StrictPartition make_strict_partition(std::vector<int> parts) {
  return StrictPartition(std::move(parts));
}

StrictPartition parse_strict_partition(const std::string& text) {
  std::vector<int> parts;
  if (text.empty()) return StrictPartition{};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ValidationError(fmt::format("malformed shape part '{}'", item));
    }
    if (used != item.size()) {
      throw ValidationError(fmt::format("malformed shape part '{}'", item));
    }
    parts.push_back(value);
  }
  if (!text.empty() && text.back() == ',') {
    throw ValidationError("malformed shape: trailing comma");
  }
  return StrictPartition(std::move(parts));
}

std::string to_string(const StrictPartition& shape) {
  return fmt::format("{}", fmt::join(shape.parts(), ","));
}

StrictPartition staircase(int n) {
  if (n <= 0) {
    throw ValidationError(fmt::format("staircase: n must be >= 1, got {}", n));
  }
  std::vector<int> parts(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) parts[k] = 2 * (n - k) - 1;
  return StrictPartition(std::move(parts));
}

namespace {

void require_cell(const StrictPartition& shape, const Cell& c,
                  const char* what) {
  if (!shape.contains(c)) {
    throw ValidationError(fmt::format("{}: cell {} is not in shape ({})", what,
                                      to_string(c), to_string(shape)));
  }
}

}  // namespace

std::vector<Cell> hook_cells(const StrictPartition& shape, const Cell& c) {
  require_cell(shape, c, "hook_cells");
  std::vector<Cell> out;
  for (const Cell& d : shape.cells()) {
    const bool arm = d.row == c.row && d.col >= c.col;
    const bool leg = d.col == c.col && d.row >= c.row;
    const bool broken_row = d.row == c.col + 1 && d.col >= c.col + 1;
    if (arm || leg || broken_row) out.push_back(d);
  }
  return out;
}

int column_height(const StrictPartition& shape, int col) {
  // Row ends weakly decrease, so the rows reaching `col` form a prefix.
  const auto parts = shape.parts();
  int reaching = 0;
  int lo = 0;
  int hi = shape.num_rows();
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (parts[mid] + mid >= col) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  reaching = lo;
  return std::max(0, std::min(col, reaching));
}

int hook_length(const StrictPartition& shape, const Cell& c) {
  require_cell(shape, c, "hook_length");
  const int arm = shape.row_end(c.row) - c.col;
  const int leg = column_height(shape, c.col) - c.row;
  return arm + leg + 1 + shape.row_length(c.col + 1);
}

BigCount count_syt(const StrictPartition& shape) {
  BigCount numerator = 1;
  for (std::int64_t k = 2; k <= shape.size(); ++k) numerator *= k;
  BigCount hooks = 1;
  for (const Cell& c : shape.cells()) hooks *= hook_length(shape, c);
  return numerator / hooks;
}

double log_count_syt(const StrictPartition& shape) {
  double value = std::lgamma(static_cast<double>(shape.size()) + 1.0);
  for (const Cell& c : shape.cells()) value -= std::log(hook_length(shape, c));
  return value;
}

bool is_removable(const StrictPartition& shape, const Cell& c) {
  if (!shape.contains(c)) return false;
  if (c.col != shape.row_end(c.row)) return false;
  return shape.row_length(c.row) - 1 > shape.row_length(c.row + 1) ||
         c.row == shape.num_rows();
}

std::vector<Cell> removable_cells(const StrictPartition& shape) {
  if (shape.empty()) {
    throw ValidationError("removable_cells: shape is empty");
  }
  std::vector<Cell> out;
  for (int i = 1; i <= shape.num_rows(); ++i) {
    const Cell c{i, shape.row_end(i)};
    if (is_removable(shape, c)) out.push_back(c);
  }
  return out;
}

StrictPartition remove_cell(const StrictPartition& shape, const Cell& c) {
  if (!is_removable(shape, c)) {
    throw ValidationError(fmt::format("remove_cell: {} is not removable from ({})",
                                      to_string(c), to_string(shape)));
  }
  std::vector<int> parts(shape.parts().begin(), shape.parts().end());
  if (--parts[c.row - 1] == 0) parts.pop_back();
  return StrictPartition(std::move(parts));
}

std::vector<StrictPartition> strict_partitions_up_to(int max_cells) {
  std::vector<StrictPartition> out;
  for (int m = 0; m <= max_cells; ++m) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int largest) -> void {
      if (remaining == 0) {
        out.emplace_back(cur);
        return;
      }
      for (int p = std::min(remaining, largest); p >= 1; --p) {
        cur.push_back(p);
        self(self, remaining - p, p - 1);
        cur.pop_back();
      }
    };
    rec(rec, m, m);
  }
  return out;
}

}  // namespace sytb
