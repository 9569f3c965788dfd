#include <doctest.h>

#include <cmath>
#include <map>

#include "oracles.hpp"
#include "sytb/hookwalk.hpp"
#include "sytb/maxcell_dist.hpp"
#include "sytb/stats.hpp"

using namespace sytb;

TEST_CASE("random streams are reproducible and distinct") {
  RandomStream a(7, 3), b(7, 3), c(7, 4), d(8, 3);
  bool differs_c = false, differs_d = false;
  for (int k = 0; k < 100; ++k) {
    const auto x = a.next();
    CHECK(x == b.next());
    differs_c |= x != c.next();
    differs_d |= x != d.next();
  }
  CHECK(differs_c);
  CHECK(differs_d);
}

TEST_CASE("bounded draws stay in range and are roughly uniform") {
  RandomStream rng(1, 0);
  std::vector<std::uint64_t> counts(7, 0);
  for (int k = 0; k < 70000; ++k) {
    const auto x = rng.below(7);
    REQUIRE(x < 7);
    ++counts[x];
  }
  const std::vector<double> p(7, 1.0 / 7);
  CHECK(chi_square_test(counts, p).p_value > 0.001);
  CHECK(rng.below(1) == 0);
  CHECK_THROWS_AS(rng.below(0), ValidationError);
}

TEST_CASE("shrinking shape tracks hooks of the current diagram") {
  RandomStream rng(5, 0);
  for (const auto& start : {staircase(5), StrictPartition{9, 6, 4, 1}, StrictPartition{3}}) {
    ShrinkingShape state(start);
    StrictPartition shape = start;
    while (!shape.empty()) {
      CHECK(state.size() == shape.size());
      for (const Cell& c : shape.cells()) {
        REQUIRE(state.hook_length(c) == hook_length(shape, c));
      }
      for (int i = 1; i <= start.num_rows() + 1; ++i) {
        CHECK(state.row_length(i) == shape.row_length(i));
      }
      const auto corners = removable_cells(shape);
      const Cell c = corners[rng.below(corners.size())];
      state.remove_corner(c);
      shape = remove_cell(shape, c);
    }
  }
}

TEST_CASE("uniform cell covers the diagram evenly") {
  const StrictPartition s{4, 2, 1};
  const ShrinkingShape state(s);
  RandomStream rng(9, 0);
  std::map<Cell, std::uint64_t> hits;
  for (int k = 0; k < 70000; ++k) ++hits[state.uniform_cell(rng)];
  REQUIRE(hits.size() == 7);
  std::vector<std::uint64_t> counts;
  for (const Cell& c : s.cells()) counts.push_back(hits[c]);
  CHECK(chi_square_test(counts, std::vector<double>(7, 1.0 / 7)).p_value > 0.001);
}

TEST_CASE("hook steps stay inside the hook") {
  const StrictPartition s{6, 4, 3, 1};
  const ShrinkingShape state(s);
  RandomStream rng(2, 0);
  for (const Cell& c : s.cells()) {
    const auto hook = hook_cells(s, c);
    for (int k = 0; k < 50; ++k) {
      const Cell next = state.hook_step(c, rng);
      if (hook.size() == 1) {
        CHECK(next == c);
      } else {
        CHECK(next != c);
        CHECK(std::find(hook.begin(), hook.end(), next) != hook.end());
      }
    }
  }
}

TEST_CASE("hook walk basics") {
  RandomStream rng(0, 0);
  for (int k = 0; k < 10; ++k) CHECK(hook_walk(StrictPartition{1}, rng) == Cell{1, 1});
  CHECK_THROWS_AS(hook_walk(StrictPartition{}, rng), ValidationError);
  for (int k = 0; k < 200; ++k) {
    const auto s = staircase(6);
    CHECK(is_removable(s, hook_walk(s, rng)));
  }
}

TEST_CASE("corner frequencies on small staircases") {
  RandomStream rng(1, 0);
  const auto h2 = corner_distribution_empirical(staircase(2), 100000, rng);
  CHECK(h2.total == 100000);
  const double f = static_cast<double>(h2.count({2, 2})) / 1e5;
  CHECK(std::abs(f - 0.5) < 0.01);
  // Three binomial standard deviations.
  CHECK(std::abs(f - 0.5) < 3 * std::sqrt(0.25 / 1e5));

  const auto h3 = corner_distribution_empirical(staircase(3), 100000, rng);
  // S = 0, 1, 2 sit at rows 3, 2, 1; the 42 tableaux split 14, 16, 12.
  const std::vector<double> p{14.0 / 42, 16.0 / 42, 12.0 / 42};
  const std::vector<std::uint64_t> obs{h3.count({3, 3}), h3.count({2, 4}), h3.count({1, 5})};
  for (int r = 0; r < 3; ++r) {
    CHECK(std::abs(static_cast<double>(obs[r]) / 1e5 - p[r]) < 0.01);
  }
  CHECK(chi_square_test(obs, p).p_value > 0.001);
}

TEST_CASE("single-cell histogram") {
  RandomStream rng(3, 0);
  const auto h = corner_distribution_empirical(StrictPartition{1}, 100, rng);
  CHECK(h.total == 100);
  CHECK(h.counts.size() == 1);
  CHECK(h.count({1, 1}) == 100);
}

TEST_CASE("histogram keys are corners and counts add up") {
  RandomStream rng(4, 0);
  const StrictPartition s{7, 5, 2};
  const auto h = corner_distribution_empirical(s, 5000, rng);
  std::uint64_t sum = 0;
  for (const auto& [c, n] : h.counts) {
    CHECK(is_removable(s, c));
    sum += n;
  }
  CHECK(sum == h.total);
}

TEST_CASE("hook walk hits corners with tableau-count ratios") {
  // Goodness of fit for every strict shape with at most 10 cells, against an
  // oracle count that never uses hook lengths.
  std::map<oracle::Parts, oracle::Big> memo;
  std::uint64_t stream = 0;
  int tested = 0;
  for (const auto& s : strict_partitions_up_to(10)) {
    const auto corners = removable_cells(s.empty() ? StrictPartition{1} : s);
    if (s.empty() || corners.size() < 2) continue;
    const oracle::Parts p(s.parts().begin(), s.parts().end());
    const auto total = oracle::count(p, memo);
    std::vector<double> expected;
    for (const Cell& c : corners) {
      const auto rest = remove_cell(s, c);
      const oracle::Parts q(rest.parts().begin(), rest.parts().end());
      expected.push_back(static_cast<double>(oracle::count(q, memo)) /
                         static_cast<double>(total));
    }
    RandomStream rng(11, stream++);
    const auto h = corner_distribution_empirical(s, 20000, rng);
    std::vector<std::uint64_t> observed;
    for (const Cell& c : corners) observed.push_back(h.count(c));
    const auto chi = chi_square_test(observed, expected);
    INFO("shape " << to_string(s) << " p = " << chi.p_value);
    CHECK(chi.p_value > 0.001);
    ++tested;
  }
  CHECK(tested > 20);
}

TEST_CASE("sampled tableaux are valid and reproducible") {
  for (const auto& s : {staircase(1), staircase(4), staircase(20), StrictPartition{9, 7, 4, 2, 1},
                        StrictPartition{30}, StrictPartition{12, 1}}) {
    RandomStream a(99, 0), b(99, 0);
    for (int k = 0; k < 20; ++k) {
      const auto t = sample_syt(s, a);
      CHECK(validate(t).ok);
      CHECK(t == sample_syt(s, b));
    }
  }
  RandomStream rng(0, 0);
  CHECK(sample_syt(StrictPartition{1}, rng).rows() == std::vector<std::vector<Label>>{{1}});
  CHECK_THROWS_AS(sample_syt(StrictPartition{}, rng), ValidationError);
}

TEST_CASE("sample_syt is uniform on (4,2,1)") {
  const StrictPartition s{4, 2, 1};
  const auto all = enumerate_syt(s);
  std::map<std::vector<Label>, std::size_t> index;
  for (std::size_t k = 0; k < all.size(); ++k) index[all[k].reading_word()] = k;
  std::vector<std::uint64_t> counts(all.size(), 0);
  RandomStream rng(kDefaultSeed, 0);
  for (int k = 0; k < 70000; ++k) ++counts[index.at(sample_syt(s, rng).reading_word())];
  for (auto c : counts) CHECK(std::abs(static_cast<double>(c) / 70000 - 1.0 / 7) < 0.005);
  CHECK(chi_square_test(counts, std::vector<double>(7, 1.0 / 7)).p_value > 0.001);
}

TEST_CASE("batch sampling matches per-stream sampling") {
  const auto s = staircase(8);
  const auto batch = sample_syt_batch(s, 12, 31);
  REQUIRE(batch.size() == 12);
  for (std::size_t k = 0; k < batch.size(); ++k) {
    RandomStream rng(31, k);
    CHECK(batch[k] == sample_syt(s, rng));
  }
  CHECK_THROWS_AS(sample_syt_batch(StrictPartition{}, 1, 0), ValidationError);
}

TEST_CASE("parallel corner histogram equals the serial reference") {
  for (std::uint64_t streams : {1, 3, 8, 17}) {
    const auto s = staircase(9);
    const auto serial = corner_distribution_streams_serial(s, 30001, 5, streams);
    const auto parallel = corner_distribution_parallel(s, 30001, 5, streams);
    CHECK(serial.total == 30001);
    CHECK(parallel.total == 30001);
    CHECK(serial.counts == parallel.counts);
  }
  CHECK_THROWS_AS(corner_distribution_parallel(staircase(2), 10, 0, 0), ValidationError);
}

TEST_CASE("one stream reproduces the single-stream histogram") {
  RandomStream rng(6, 0);
  const auto a = corner_distribution_empirical(staircase(5), 4000, rng);
  const auto b = corner_distribution_streams_serial(staircase(5), 4000, 6, 1);
  CHECK(a.counts == b.counts);
}
