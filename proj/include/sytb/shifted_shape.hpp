#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sytb {

using BigCount = boost::multiprecision::cpp_int;

// Thrown when a caller-supplied value violates a documented precondition.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown by oracle-only routines asked to work beyond their size bound.
class OracleBoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// 1-based (row, column) position in a shifted diagram.
struct Cell {
  int row = 0;
  int col = 0;

  friend constexpr bool operator==(const Cell&, const Cell&) = default;
  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& c);

// A strict partition lambda_1 > lambda_2 > ... > lambda_k > 0, identified with
// its shifted Young diagram: row i occupies columns i .. lambda_i + i - 1.
class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts);
  StrictPartition(std::initializer_list<int> parts)
      : StrictPartition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  int num_rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  std::int64_t size() const { return size_; }

  // Length of row i (1-based); 0 for rows past the last one.
  int row_length(int i) const {
    return (i >= 1 && i <= num_rows()) ? parts_[i - 1] : 0;
  }
  // Last occupied column of row i.
  int row_end(int i) const { return row_length(i) + i - 1; }

  bool contains(const Cell& c) const {
    return c.row >= 1 && c.row <= num_rows() && c.col >= c.row &&
           c.col <= row_end(c.row);
  }

  // Cells in reading order (row by row, left to right).
  std::vector<Cell> cells() const;

  friend bool operator==(const StrictPartition&,
                         const StrictPartition&) = default;

 private:
  std::vector<int> parts_;
  std::int64_t size_ = 0;
};

StrictPartition make_strict_partition(std::vector<int> parts);

// Parses "a,b,c"; the empty string is the empty partition.
StrictPartition parse_strict_partition(const std::string& text);
std::string to_string(const StrictPartition& shape);

// (2n-1, 2n-3, ..., 3, 1), which has n^2 cells.
StrictPartition staircase(int n);

// Shifted hook of c: the arm to the right in row c.row, the leg below in
// column c.col, and all of row c.col + 1. Materialized cell by cell; the
// returned list is sorted and contains c itself.
std::vector<Cell> hook_cells(const StrictPartition& shape, const Cell& c);

// Size of the shifted hook, computed from row lengths without expanding it.
int hook_length(const StrictPartition& shape, const Cell& c);

// Number of rows of `shape` occupying column `col`.
int column_height(const StrictPartition& shape, int col);

// Exact count of standard tableaux via the shifted hook-length formula.
BigCount count_syt(const StrictPartition& shape);

// Natural log of count_syt, for display of counts too large to print.
double log_count_syt(const StrictPartition& shape);

// Cells whose removal leaves a strict partition (equivalently, hook length 1).
std::vector<Cell> removable_cells(const StrictPartition& shape);
bool is_removable(const StrictPartition& shape, const Cell& c);

StrictPartition remove_cell(const StrictPartition& shape, const Cell& c);

// All strict partitions with at most `max_cells` cells, including the empty
// one, ordered by size and then reverse-lexicographically.
std::vector<StrictPartition> strict_partitions_up_to(int max_cells);

}  // namespace sytb
