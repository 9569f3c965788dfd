#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "sytb/coxeter_b.hpp"
#include "sytb/tableau.hpp"

namespace sytb {

// One promotion step: where the maximal label sat and the letter it emitted.
struct PromotionTrace {
  std::int64_t step = 0;  // 1-based
  Cell max_cell;
  Letter letter = 0;  // (col - row) / 2
};

// Shifted promotion on a staircase tableau: delete the maximal label, slide
// the hole back to (1,1) by moving in the larger of its left and upper
// neighbours, add one to every label and put 1 at (1,1).
// Reference implementation, O(n^2) per call.
ShiftedTableau promote(const ShiftedTableau& t);

// Promotion kernel used for long runs. Cells are stored by anti-diagonal
// d = row + col, so the two candidates of every slide move are adjacent in
// memory and the n corners form the last diagonal. Labels are stored
// relative to a running offset so a promotion costs one slide of 2n - 2
// moves plus a scan of the corners.
class PromotionEngine {
 public:
  explicit PromotionEngine(const ShiftedTableau& t);

  int rank() const { return n_; }
  std::int64_t steps_taken() const { return offset_; }

  // Offset r of the corner (n - r, n + r) that holds the maximal label.
  Letter max_letter() const;

  // Promotes once and returns the letter of the corner that was vacated.
  Letter step();

  // Performs out.size() promotions and writes their letters. Promotion k + 1
  // trails promotion k by two diagonals, which it never reads before k has
  // finalized them, so up to n slides advance together. Same result as
  // calling step() repeatedly.
  void run(std::span<Letter> out);

  ShiftedTableau tableau() const;

 private:
  // Slot of 1-based cell (row, col).
  std::size_t slot(int row, int col) const {
    return diagonal_start_[row + col] + static_cast<std::size_t>(row - 1);
  }

  struct FreeDeleter {
    void operator()(std::int32_t* p) const;
  };

  int n_ = 0;
  std::int64_t cells_ = 0;
  std::int64_t offset_ = 0;
  // 2 MiB aligned and advised for transparent huge pages: every slide move
  // lands on a different diagonal, so 4 KiB pages thrash the TLB.
  std::unique_ptr<std::int32_t[], FreeDeleter> values_;
  std::vector<std::size_t> diagonal_start_;  // indexed by d = 2..2n
};

// Reduced word read off n^2 successive promotions; letter t is the offset of
// the maximal cell before the t-th promotion.
Word tableau_to_word(const ShiftedTableau& t);
Word tableau_to_word(const ShiftedTableau& t, std::vector<PromotionTrace>& trace);

// Offset S of the maximal cell (n - S, n + S), without promoting.
Letter first_letter(const ShiftedTableau& t);

}  // namespace sytb
