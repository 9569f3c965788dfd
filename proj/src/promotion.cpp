#include "sytb/promotion.hpp"

#include <algorithm>
#include <cstdlib>
#include <new>

#include <sys/mman.h>

#include <fmt/format.h>

namespace sytb {

namespace {

int require_staircase_syt(const ShiftedTableau& t, const char* what) {
  const int n = t.staircase_rank();
  if (n == 0) {
    throw ValidationError(fmt::format("{}: shape ({}) is not a staircase", what,
                                      to_string(t.shape())));
  }
  const ValidationReport report = validate_parallel(t);
  if (!report) {
    throw ValidationError(fmt::format("{}: invalid tableau: {}", what, report.message));
  }
  return n;
}

}  // namespace

ShiftedTableau promote(const ShiftedTableau& t) {
  require_staircase_syt(t, "promote");
  ShiftedTableau out = t;
  Cell hole = max_cell(out);
  while (hole != Cell{1, 1}) {
    const Cell left{hole.row, hole.col - 1};
    const Cell up{hole.row - 1, hole.col};
    const bool has_left = left.col >= left.row;
    const bool has_up = up.row >= 1;
    Cell from = has_left ? left : up;
    if (has_left && has_up && out.at(up) > out.at(left)) from = up;
    out.at(hole) = out.at(from);
    hole = from;
  }
  for (const Cell& c : out.shape().cells()) ++out.at(c);
  out.at({1, 1}) = 1;
  return out;
}

namespace {

constexpr std::size_t kHugePage = std::size_t{2} << 20;

std::int32_t* allocate_values(std::size_t count) {
  const std::size_t bytes =
      (count * sizeof(std::int32_t) + kHugePage - 1) / kHugePage * kHugePage;
  void* p = std::aligned_alloc(kHugePage, bytes);
  if (p == nullptr) throw std::bad_alloc();
  madvise(p, bytes, MADV_HUGEPAGE);
  return static_cast<std::int32_t*>(p);
}

}  // namespace

void PromotionEngine::FreeDeleter::operator()(std::int32_t* p) const { std::free(p); }

PromotionEngine::PromotionEngine(const ShiftedTableau& t)
    : n_(require_staircase_syt(t, "PromotionEngine")), cells_(t.size()) {
  // Diagonal d holds cells (i, d - i) for i = 1..floor(d / 2).
  diagonal_start_.assign(static_cast<std::size_t>(2 * n_) + 2, 0);
  for (int d = 2; d <= 2 * n_; ++d) {
    diagonal_start_[d + 1] = diagonal_start_[d] + static_cast<std::size_t>(d / 2);
  }
  values_.reset(allocate_values(static_cast<std::size_t>(cells_)));
  for (int i = 1; i <= n_; ++i) {
    const auto& row = t.rows()[i - 1];
    for (std::size_t k = 0; k < row.size(); ++k) {
      values_[slot(i, i + static_cast<int>(k))] = row[k];
    }
  }
}

Letter PromotionEngine::max_letter() const {
  // The corners (n - r, n + r) fill diagonal 2n in order of rising row.
  const auto target = static_cast<std::int32_t>(cells_ - offset_);
  const std::int32_t* first = values_.get() + diagonal_start_[2 * n_];
  const std::int32_t* last = values_.get() + cells_;
  const std::int32_t* it = std::find(first, last, target);
  return static_cast<Letter>(n_ - 1 - (it - first));
}

Letter PromotionEngine::step() {
  constexpr int kLookahead = 64;
  const Letter r = max_letter();
  std::int32_t* v = values_.get();
  const std::size_t* start = diagonal_start_.data();

  // Hole at 0-based offset `o` of diagonal d. Its left neighbour sits at
  // offset o and its upper neighbour at offset o - 1 of diagonal d - 1.
  int d = 2 * n_;
  int o = n_ - r - 1;
  std::size_t hole = start[d] + static_cast<std::size_t>(o);
  for (; d > 2; --d) {
    if (d - 1 - kLookahead >= 2) {
      const int ahead = std::max(0, o - kLookahead);
      __builtin_prefetch(v + start[d - 1 - kLookahead] + ahead, 1);
      __builtin_prefetch(v + start[d - 1 - kLookahead] + o, 1);
    }
    const std::size_t left = start[d - 1] + static_cast<std::size_t>(o);
    const bool has_left = o < (d - 1) / 2;
    const bool has_up = o > 0;
    const bool take_up = !has_left || (has_up && v[left - 1] > v[left]);
    const std::size_t from = left - static_cast<std::size_t>(take_up);
    v[hole] = v[from];
    hole = from;
    o -= static_cast<int>(take_up);
  }
  ++offset_;
  v[0] = static_cast<std::int32_t>(1 - offset_);
  return r;
}

void PromotionEngine::run(std::span<Letter> out) {
  struct Slide {
    int d;
    int o;
    std::size_t hole;
    std::int64_t index;  // global promotion number
  };
  std::int32_t* v = values_.get();
  const std::size_t* start = diagonal_start_.data();
  const int last = 2 * n_;
  const std::int32_t* corners = v + start[last];
  const std::int32_t* corners_end = v + cells_;

  // Active slides, oldest (lowest diagonal) first, in a power-of-two ring
  // holding at least n of them.
  std::size_t cap = 1;
  while (cap < static_cast<std::size_t>(n_) + 1) cap <<= 1;
  const std::size_t mask = cap - 1;
  std::vector<Slide> ring(cap);
  std::size_t head = 0;
  std::size_t count = 0;

  const auto total = static_cast<std::int64_t>(out.size());
  std::int64_t started = 0;
  std::int64_t finished = 0;
  const auto finish = [&](const Slide& s) {
    v[0] = static_cast<std::int32_t>(-s.index);  // label 1 after s.index + 1 shifts
    ++finished;
  };

  while (finished < total) {
    if (started < total &&
        (count == 0 || ring[(head + count - 1) & mask].d <= last - 2)) {
      const std::int64_t index = offset_ + started;
      const auto target = static_cast<std::int32_t>(cells_ - index);
      const int o = static_cast<int>(std::find(corners, corners_end, target) - corners);
      out[static_cast<std::size_t>(started)] = static_cast<Letter>(n_ - 1 - o);
      ++started;
      const Slide s{last, o, start[last] + static_cast<std::size_t>(o), index};
      if (s.d == 2) {
        finish(s);
      } else {
        ring[(head + count) & mask] = s;
        ++count;
      }
    }
    for (std::size_t k = 0; k < count; ++k) {
      Slide& s = ring[(head + k) & mask];
      const std::size_t left = start[s.d - 1] + static_cast<std::size_t>(s.o);
      const bool has_left = s.o < (s.d - 1) / 2;
      const bool take_up = !has_left || (s.o > 0 && v[left - 1] > v[left]);
      const std::size_t from = left - static_cast<std::size_t>(take_up);
      v[s.hole] = v[from];
      s.hole = from;
      s.o -= static_cast<int>(take_up);
      --s.d;
    }
    while (count > 0 && ring[head].d == 2) {
      finish(ring[head]);
      head = (head + 1) & mask;
      --count;
    }
  }
  offset_ += total;
}

ShiftedTableau PromotionEngine::tableau() const {
  std::vector<std::vector<Label>> rows;
  rows.reserve(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i) {
    std::vector<Label> row(static_cast<std::size_t>(2 * (n_ - i) + 1));
    for (std::size_t k = 0; k < row.size(); ++k) {
      row[k] = static_cast<Label>(values_[slot(i, i + static_cast<int>(k))] + offset_);
    }
    rows.push_back(std::move(row));
  }
  return ShiftedTableau(staircase(n_), std::move(rows));
}

Word tableau_to_word(const ShiftedTableau& t) {
  PromotionEngine engine(t);
  std::vector<Letter> letters(static_cast<std::size_t>(t.size()));
  for (auto& letter : letters) letter = engine.step();
  return Word(engine.rank(), std::move(letters));
}

Word tableau_to_word(const ShiftedTableau& t, std::vector<PromotionTrace>& trace) {
  PromotionEngine engine(t);
  const int n = engine.rank();
  const auto length = static_cast<std::size_t>(t.size());
  std::vector<Letter> letters(length);
  trace.clear();
  trace.reserve(length);
  for (std::size_t k = 0; k < length; ++k) {
    letters[k] = engine.step();
    trace.push_back({static_cast<std::int64_t>(k) + 1,
                     Cell{n - letters[k], n + letters[k]}, letters[k]});
  }
  return Word(n, std::move(letters));
}

Letter first_letter(const ShiftedTableau& t) {
  require_staircase_syt(t, "first_letter");
  const Cell c = max_cell(t);
  return static_cast<Letter>((c.col - c.row) / 2);
}

}  // namespace sytb
