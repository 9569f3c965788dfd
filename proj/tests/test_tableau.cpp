#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "sytb/hookwalk.hpp"
#include "sytb/tableau.hpp"

using namespace sytb;

namespace {

ShiftedTableau make(StrictPartition s, std::vector<std::vector<Label>> rows) {
  return ShiftedTableau(std::move(s), std::move(rows));
}

}  // namespace

TEST_CASE("validate accepts and rejects (3,1) fillings") {
  CHECK(validate(make({3, 1}, {{1, 2, 3}, {4}})).ok);
  CHECK(validate(make({3, 1}, {{1, 2, 4}, {3}})).ok);
  const auto bad = validate(make({3, 1}, {{1, 3, 2}, {4}}));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.cell.has_value());
  CHECK(*bad.cell == Cell{1, 3});
  CHECK_FALSE(bad.message.empty());
}

TEST_CASE("validate reports column, range and duplicate faults") {
  // 2 sits below 2: duplicate and column fault at (2,2).
  auto r = validate(make({3, 1}, {{1, 2, 3}, {2}}));
  CHECK_FALSE(r.ok);
  CHECK(*r.cell == Cell{2, 2});
  // Column fault: (2,2) = 2 is below (1,2) = 3.
  r = validate(make({3, 1}, {{1, 3, 4}, {2}}));
  CHECK_FALSE(r.ok);
  CHECK(*r.cell == Cell{2, 2});
  // Out of range.
  r = validate(make({3, 1}, {{1, 2, 3}, {5}}));
  CHECK_FALSE(r.ok);
  CHECK(*r.cell == Cell{2, 2});
  r = validate(make({1}, {{0}}));
  CHECK_FALSE(r.ok);
  CHECK(*r.cell == Cell{1, 1});
  CHECK(validate(ShiftedTableau(StrictPartition{}, {})).ok);
}

TEST_CASE("tableau construction checks row lengths") {
  CHECK_THROWS_AS(make({3, 1}, {{1, 2}, {3, 4}}), ValidationError);
  CHECK_THROWS_AS(make({3, 1}, {{1, 2, 3}}), ValidationError);
}

TEST_CASE("enumeration of (4,2,1) in reading-word order") {
  const std::vector<std::vector<std::vector<Label>>> expected{
      {{1, 2, 3, 4}, {5, 6}, {7}}, {{1, 2, 3, 5}, {4, 6}, {7}},
      {{1, 2, 3, 6}, {4, 5}, {7}}, {{1, 2, 3, 7}, {4, 5}, {6}},
      {{1, 2, 4, 5}, {3, 6}, {7}}, {{1, 2, 4, 6}, {3, 5}, {7}},
      {{1, 2, 4, 7}, {3, 5}, {6}}};
  const auto all = enumerate_syt(StrictPartition{4, 2, 1});
  REQUIRE(all.size() == expected.size());
  for (std::size_t k = 0; k < all.size(); ++k) CHECK(all[k].rows() == expected[k]);
}

TEST_CASE("small enumerations") {
  const auto one = enumerate_syt(StrictPartition{1});
  REQUIRE(one.size() == 1);
  CHECK(one[0].rows() == std::vector<std::vector<Label>>{{1}});
  CHECK(enumerate_syt(StrictPartition{5, 3, 1}).size() == 42);
  CHECK(enumerate_syt(StrictPartition{}).size() == 1);
  CHECK_THROWS_AS(enumerate_syt(staircase(5)), OracleBoundExceeded);
  CHECK_THROWS_AS(enumerate_syt(StrictPartition{4, 2, 1}, 6), OracleBoundExceeded);
}

TEST_CASE("enumeration matches brute force over permutations") {
  for (const auto& s : strict_partitions_up_to(8)) {
    const oracle::Parts p(s.parts().begin(), s.parts().end());
    const auto ref = oracle::fillings_by_permutation(p);
    const auto got = enumerate_syt(s);
    REQUIRE(got.size() == ref.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
      const auto w = got[k].reading_word();
      CHECK(std::vector<int>(w.begin(), w.end()) == ref[k]);
    }
  }
}

TEST_CASE("enumeration properties up to 12 cells") {
  for (const auto& s : strict_partitions_up_to(12)) {
    const auto all = enumerate_syt(s);
    CHECK(BigCount(all.size()) == count_syt(s));
    std::set<std::vector<Label>> words;
    for (const auto& t : all) {
      REQUIRE(validate(t).ok);
      words.insert(t.reading_word());
    }
    CHECK(words.size() == all.size());
    CHECK(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) {
      return a.reading_word() < b.reading_word();
    }));
  }
}

TEST_CASE("duplicating any entry breaks validity") {
  for (const auto& s : {StrictPartition{4, 2, 1}, StrictPartition{5, 3, 1},
                        StrictPartition{6, 3, 2}}) {
    for (const auto& t : enumerate_syt(s)) {
      const auto cells = s.cells();
      for (const Cell& a : cells) {
        for (const Cell& b : cells) {
          if (a == b) continue;
          ShiftedTableau u = t;
          u.at(a) = t.at(b);
          CHECK_FALSE(validate(u).ok);
          CHECK_FALSE(validate_parallel(u).ok);
        }
      }
    }
  }
}

TEST_CASE("parallel validation reports the same fault as the serial one") {
  RandomStream rng(42, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(12));
    ShiftedTableau t = sample_syt(staircase(n), rng);
    CHECK(validate_parallel(t).ok);
    const int faults = 1 + static_cast<int>(rng.below(3));
    const auto cells = t.shape().cells();
    for (int f = 0; f < faults; ++f) {
      const Cell c = cells[rng.below(cells.size())];
      t.at(c) = static_cast<Label>(rng.below(static_cast<std::uint64_t>(t.size()) + 2));
    }
    const auto serial = validate(t);
    const auto parallel = validate_parallel(t);
    CHECK(serial.ok == parallel.ok);
    CHECK(serial.cell == parallel.cell);
    CHECK(serial.message == parallel.message);
  }
}

TEST_CASE("max cell") {
  CHECK(max_cell(make({3, 1}, {{1, 2, 3}, {4}})) == Cell{2, 2});
  CHECK(max_cell(make({3, 1}, {{1, 2, 4}, {3}})) == Cell{1, 3});
  CHECK(max_cell(make({1}, {{1}})) == Cell{1, 1});
  CHECK_THROWS_AS(max_cell(ShiftedTableau(StrictPartition{}, {})), ValidationError);
}

TEST_CASE("staircase max cell is a removable anti-diagonal cell") {
  for (int n = 1; n <= 4; ++n) {
    const auto s = staircase(n);
    for (const auto& t : enumerate_syt(s)) {
      const Cell c = max_cell(t);
      CHECK(c.row + c.col == 2 * n);
      CHECK(is_removable(s, c));
    }
  }
}

TEST_CASE("staircase rank") {
  CHECK(make({3, 1}, {{1, 2, 3}, {4}}).staircase_rank() == 2);
  CHECK(make({1}, {{1}}).staircase_rank() == 1);
  CHECK(make({3}, {{1, 2, 3}}).staircase_rank() == 0);
}
