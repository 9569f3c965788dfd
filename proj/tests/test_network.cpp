#include <doctest.h>

#include <set>

#include "sytb/hookwalk.hpp"
#include "sytb/maxcell_dist.hpp"
#include "sytb/network.hpp"
#include "sytb/promotion.hpp"

using namespace sytb;

namespace {

SignedPermutation sp(std::vector<int> v) { return SignedPermutation(std::move(v)); }

Word sampled_word(int n, std::uint64_t seed) {
  RandomStream rng(seed, 0);
  return tableau_to_word(sample_syt(staircase(n), rng));
}

}  // namespace

TEST_CASE("network states for rank 2") {
  const auto run = run_network(2, Word(2, {0, 1, 0, 1}));
  CHECK(run.reduced);
  CHECK(run.states == std::vector<SignedPermutation>{sp({1, 2}), sp({-1, 2}), sp({2, -1}),
                                                     sp({-2, -1}), sp({-1, -2})});
  CHECK(run_network(1, Word(1, {0})).states ==
        std::vector<SignedPermutation>{sp({1}), sp({-1})});
  CHECK(run_network(2, Word(2, {1, 0, 1, 0})).states.back() == sp({-1, -2}));
}

TEST_CASE("network input checks") {
  CHECK_THROWS_AS(run_network(3, Word(2, {0, 1, 0, 1})), ValidationError);
  CHECK_THROWS_AS(run_network(2, Word(2, {0, 1, 1, 0})), ValidationError);
  const auto loose = run_network(2, Word(2, {0, 1, 1, 0}), true);
  CHECK_FALSE(loose.reduced);
  CHECK(loose.states.back() == identity(2));
}

TEST_CASE("trajectories for rank 1 and 2") {
  const auto tr = trajectories(run_network(2, Word(2, {0, 1, 0, 1})));
  REQUIRE(tr.size() == 2);
  CHECK(tr[0].card == 1);
  CHECK(tr[0].heights == std::vector<int>{1, -1, -2, -2, -1});
  CHECK(tr[1].card == 2);
  CHECK(tr[1].heights == std::vector<int>{2, 2, 1, -1, -2});
  CHECK(trajectories(run_network(1, Word(1, {0})))[0].heights == std::vector<int>{1, -1});
}

TEST_CASE("snapshots") {
  const auto run = run_network(2, Word(2, {0, 1, 0, 1}));
  const auto snaps = snapshots(run, {0.0, 0.5, 1.0});
  REQUIRE(snaps.size() == 3);
  CHECK(snaps[0].step == 0);
  CHECK(snaps[0].entries == std::vector<SnapshotEntry>{{1, 1, 1}, {2, 2, 1}});
  CHECK(snaps[1].step == 2);
  CHECK(snaps[1].entries == std::vector<SnapshotEntry>{{1, 2, 1}, {2, 1, -1}});
  CHECK(snaps[2].step == 4);
  CHECK(snaps[2].entries == std::vector<SnapshotEntry>{{1, 1, -1}, {2, 2, -1}});
  CHECK_THROWS_AS(snapshots(run, {1.5}), ValidationError);
  CHECK_THROWS_AS(snapshots(run, {-0.1}), ValidationError);
  CHECK_THROWS_AS(snapshots(run, {0.5, 0.25}), ValidationError);
  CHECK(snapshot_step(0.3, 9) == 3);
  CHECK(snapshot_step(0.25, 90000) == 22500);
}

TEST_CASE("letter frequency") {
  CHECK(letter_frequency(Word(2, {0, 1, 0, 1})) == std::vector<std::uint64_t>{2, 2});
  CHECK(letter_frequency(Word(1, {0})) == std::vector<std::uint64_t>{1});
  CHECK(letter_frequency(Word(3, {})) == std::vector<std::uint64_t>{0, 0, 0});
}

TEST_CASE("network invariants on sampled words") {
  for (int n = 1; n <= 9; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Word w = sampled_word(n, seed);
      const auto run = run_network(n, w);
      REQUIRE(run.states.size() == w.size() + 1);
      CHECK(run.states.back() == longest_element(n));
      const auto tr = trajectories(run);
      std::uint64_t total = 0;
      for (auto c : letter_frequency(w)) total += c;
      CHECK(total == static_cast<std::uint64_t>(n * n));

      for (std::size_t t = 0; t < run.states.size(); ++t) {
        std::set<int> abs_heights;
        for (const auto& traj : tr) {
          const int y = traj.heights[t];
          CHECK(std::abs(y) >= 1);
          CHECK(std::abs(y) <= n);
          abs_heights.insert(std::abs(y));
        }
        CHECK(abs_heights.size() == static_cast<std::size_t>(n));
      }
      for (std::size_t t = 0; t + 1 < run.states.size(); ++t) {
        const Letter q = w.letters[t];
        for (const auto& traj : tr) {
          const int a = traj.heights[t];
          const int b = traj.heights[t + 1];
          const int pos = std::abs(a);
          const bool touched = q == 0 ? pos == 1 : (pos == q || pos == q + 1);
          if (!touched) {
            CHECK(a == b);
          } else if (q == 0) {
            // Reflection through 0.
            CHECK(b == -a);
          } else {
            CHECK(std::abs(b - a) == 1);
            CHECK((a > 0) == (b > 0));
          }
          if ((a > 0) != (b > 0)) {
            CHECK(q == 0);
            CHECK(std::abs(a) == 1);
          }
        }
      }
    }
  }
}

TEST_CASE("streaming network replays the materialized run") {
  for (int n : {1, 4, 11}) {
    const Word w = sampled_word(n, 3);
    const auto run = run_network(n, w);
    const auto tr = trajectories(run);
    StreamingNetwork net(n);
    CHECK(net.rank() == n);
    for (std::size_t t = 0;; ++t) {
      CHECK(net.time() == static_cast<std::int64_t>(t));
      CHECK(net.state() == run.states[t]);
      for (int card = 1; card <= n; ++card) CHECK(net.height(card) == tr[card - 1].heights[t]);
      if (t == w.size()) break;
      net.step(w.letters[t]);
    }
    const auto snap = net.snapshot(1.0);
    CHECK(snap.step == static_cast<std::int64_t>(w.size()));
    for (int p = 1; p <= n; ++p) CHECK(snap.entries[p - 1] == SnapshotEntry{p, p, -1});
  }
  CHECK_THROWS_AS(StreamingNetwork(0), ValidationError);
  StreamingNetwork net(2);
  CHECK_THROWS_AS(net.step(2), ValidationError);
}

TEST_CASE("snapshot entries cover every position and card once") {
  const Word w = sampled_word(7, 9);
  const auto run = run_network(7, w);
  for (const auto& snap : snapshots(run, {0, 0.1, 0.37, 0.5, 0.9, 1})) {
    std::set<int> positions, cards;
    for (const auto& e : snap.entries) {
      positions.insert(e.position);
      cards.insert(e.card);
      CHECK(std::abs(e.sign) == 1);
    }
    CHECK(positions.size() == 7);
    CHECK(cards.size() == 7);
  }
}

TEST_CASE("letter frequencies of a rank 300 word follow the quarter-circle law") {
  constexpr int n = 300;
  const Word w = sampled_word(n, kDefaultSeed);
  const auto counts = letter_frequency(w);
  std::vector<double> normalized(counts.size());
  for (std::size_t q = 0; q < counts.size(); ++q) {
    normalized[q] = static_cast<double>(counts[q]) / static_cast<double>(w.size());
  }
  const double tv =
      tv_distance(DistributionTable::from_float(normalized), quarter_circle_bins(n));
  INFO("tv = " << tv);
  CHECK(tv < 0.05);
}
