#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sytb/shifted_shape.hpp"

namespace sytb {

using Label = std::int32_t;

// A labelling of a shifted diagram, stored as ragged rows. Construction only
// checks that row lengths match the shape; standardness is checked by
// validate().
class ShiftedTableau {
 public:
  ShiftedTableau() = default;
  ShiftedTableau(StrictPartition shape, std::vector<std::vector<Label>> rows);

  const StrictPartition& shape() const { return shape_; }
  const std::vector<std::vector<Label>>& rows() const { return rows_; }
  std::int64_t size() const { return shape_.size(); }

  Label at(const Cell& c) const { return rows_[c.row - 1][c.col - c.row]; }
  Label& at(const Cell& c) { return rows_[c.row - 1][c.col - c.row]; }

  // Rows concatenated top to bottom.
  std::vector<Label> reading_word() const;

  // n if the shape is staircase(n), otherwise 0.
  int staircase_rank() const;

  friend bool operator==(const ShiftedTableau&, const ShiftedTableau&) = default;

 private:
  StrictPartition shape_;
  std::vector<std::vector<Label>> rows_;
};

struct ValidationReport {
  bool ok = true;
  std::optional<Cell> cell;  // first offending cell in reading order
  std::string message;

  explicit operator bool() const { return ok; }
};

// Checks that labels are a bijection onto 1..m and that rows and columns
// strictly increase. Serial reference implementation.
ValidationReport validate(const ShiftedTableau& t);

// Same contract as validate(), rows checked in parallel. Reports the same
// offending cell as the serial version.
ValidationReport validate_parallel(const ShiftedTableau& t);

inline constexpr int kDefaultEnumerationBound = 16;

// Every standard tableau of `shape`, sorted by reading word. Oracle use only:
// refuses shapes with more than `max_cells` cells.
std::vector<ShiftedTableau> enumerate_syt(
    const StrictPartition& shape, int max_cells = kDefaultEnumerationBound);

// The cell carrying the largest label.
Cell max_cell(const ShiftedTableau& t);

}  // namespace sytb
