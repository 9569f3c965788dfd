#include "commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include <fmt/format.h>

#include "sytb/coxeter_b.hpp"
#include "sytb/export.hpp"
#include "sytb/hookwalk.hpp"
#include "sytb/maxcell_dist.hpp"
#include "sytb/network.hpp"
#include "sytb/promotion.hpp"
#include "sytb/shifted_shape.hpp"
#include "sytb/stats.hpp"

namespace sytb::cli {

namespace {

class InvariantBreach : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Maps library exceptions onto the exit-code contract.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const InvariantBreach& e) {
    err << "internal invariant breach: " << e.what() << '\n';
    return kInvariantBreach;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const OracleBoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

void require_rank(int n) {
  if (n < 1) throw ValidationError(fmt::format("--n must be >= 1, got {}", n));
}

Word checked_word(const ShiftedTableau& t) {
  Word w = tableau_to_word(t);
  if (!is_reduced_word_of_w0(w)) {
    throw InvariantBreach("promotion produced a word that is not a reduced word of w0");
  }
  return w;
}

std::filesystem::path output_dir(const std::string& configured) {
  if (!configured.empty()) return configured;
  if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') {
    return env;
  }
  return ".";
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError(fmt::format("cannot write '{}'", path.string()));
  return out;
}

}  // namespace

std::int64_t default_stride(int n) {
  const std::int64_t total = static_cast<std::int64_t>(n) * n;
  return std::max<std::int64_t>(1, total / 2000);
}

std::string snapshot_file_name(std::size_t index) {
  return fmt::format("snapshot_{}.csv", index);
}

int cmd_count(const std::string& shape, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << count_syt(parse_strict_partition(shape)).str() << '\n';
    return kOk;
  });
}

int cmd_prob(int n, bool exact, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_rank(n);
    io::write_prob_csv(out, exact ? maxcell_pmf_exact(n) : maxcell_pmf_float(n));
    return kOk;
  });
}

int cmd_sample_corner(const SampleCornerConfig& cfg, std::ostream& out,
                      std::ostream& err) {
  return guarded(err, [&] {
    require_rank(cfg.n);
    if (cfg.samples == 0) throw ValidationError("--samples must be >= 1");
    if (cfg.streams == 0) throw ValidationError("--streams must be >= 1");
    const StrictPartition shape = staircase(cfg.n);
    const CornerHistogram hist =
        corner_distribution_parallel(shape, cfg.samples, cfg.seed, cfg.streams);
    const DistributionTable exact = maxcell_pmf_float(cfg.n);
    const auto counts = io::counts_by_offset(hist, cfg.n);
    std::vector<double> empirical(counts.size());
    for (std::size_t r = 0; r < counts.size(); ++r) {
      empirical[r] = static_cast<double>(counts[r]) / static_cast<double>(hist.total);
    }
    const double tv = tv_distance(DistributionTable::from_float(empirical), exact);
    std::vector<StatReport> reports = {
        distance_report("TV", tv, cfg.tv_threshold, hist.total),
        chi_square_report(counts, exact.probs, cfg.alpha)};
    io::write_corner_csv(out, hist, exact, reports);
    for (const auto& r : reports) {
      if (!r.pass) return kVerificationFailed;
    }
    return kOk;
  });
}

int cmd_word(const WordConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ShiftedTableau t;
    if (!cfg.tableau_in.empty()) {
      std::ifstream in(cfg.tableau_in);
      if (!in) throw ValidationError(fmt::format("cannot read '{}'", cfg.tableau_in));
      nlohmann::json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw ValidationError(fmt::format("'{}': {}", cfg.tableau_in, e.what()));
      }
      t = io::tableau_from_json(j);
    } else {
      require_rank(cfg.n);
      RandomStream rng(cfg.seed, 0);
      t = sample_syt(staircase(cfg.n), rng);
    }
    if (!cfg.tableau_out.empty()) {
      auto file = open_output(cfg.tableau_out);
      file << io::tableau_to_json(t).dump() << '\n';
    }
    out << to_string(checked_word(t)) << '\n';
    return kOk;
  });
}

int cmd_tableau(const TableauConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    StrictPartition shape;
    if (cfg.n.has_value() == !cfg.shape.empty()) {
      throw ValidationError("give exactly one of --n and --shape");
    }
    if (cfg.n) {
      require_rank(*cfg.n);
      shape = staircase(*cfg.n);
    } else {
      shape = parse_strict_partition(cfg.shape);
    }
    RandomStream rng(cfg.seed, 0);
    const ShiftedTableau t = sample_syt(shape, rng);
    if (!validate(t)) throw InvariantBreach("sampled tableau failed validation");
    out << io::tableau_to_json(t).dump() << '\n';
    return kOk;
  });
}

int cmd_simulate(const SimulateConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_rank(cfg.n);
    check_fractions(cfg.fractions);
    if (cfg.stride < 0) throw ValidationError("--stride must be >= 0");
    const std::int64_t stride = cfg.stride > 0 ? cfg.stride : default_stride(cfg.n);
    const std::filesystem::path dir = output_dir(cfg.out_dir);

    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    auto traj = open_output(dir / kTrajectoryFile);
    auto freq = open_output(dir / kFrequencyFile);
    std::vector<std::ofstream> snap_files;
    for (std::size_t k = 0; k < cfg.fractions.size(); ++k) {
      snap_files.push_back(open_output(dir / snapshot_file_name(k)));
    }

    RandomStream rng(cfg.seed, 0);
    const ShiftedTableau t = sample_syt(staircase(cfg.n), rng);
    const Word word = checked_word(t);
    const auto length = static_cast<std::int64_t>(word.size());

    std::vector<std::int64_t> snap_steps;
    for (double f : cfg.fractions) snap_steps.push_back(snapshot_step(f, word.size()));

    StreamingNetwork net(cfg.n);
    std::size_t next_snap = 0;
    io::write_trajectory_header(traj);
    for (std::int64_t time = 0;; ++time) {
      if (time % stride == 0 || time == length) io::write_trajectory_rows(traj, net);
      while (next_snap < snap_steps.size() && snap_steps[next_snap] == time) {
        io::write_snapshot_csv(snap_files[next_snap], net.snapshot(cfg.fractions[next_snap]));
        ++next_snap;
      }
      if (time == length) break;
      net.step(word.letters[static_cast<std::size_t>(time)]);
    }
    if (net.state() != longest_element(cfg.n)) {
      throw InvariantBreach("network did not end at the longest element");
    }
    io::write_frequency_csv(freq, letter_frequency(word));

    for (auto* f : {&traj, &freq}) {
      f->flush();
      if (!*f) throw ValidationError("write failed");
    }
    for (auto& f : snap_files) {
      f.flush();
      if (!f) throw ValidationError("write failed");
    }
    out << (dir / kTrajectoryFile).string() << '\n';
    for (std::size_t k = 0; k < cfg.fractions.size(); ++k) {
      out << (dir / snapshot_file_name(k)).string() << '\n';
    }
    out << (dir / kFrequencyFile).string() << '\n';
    return kOk;
  });
}

namespace {

struct Gate {
  std::string name;
  std::string detail;
  bool pass;
};

std::vector<Gate> shape_gates() {
  constexpr int kMaxCells = 12;
  bool hooks_ok = true;
  bool recurrence_ok = true;
  bool enumeration_ok = true;
  bool corners_ok = true;
  std::size_t shapes = 0;
  for (const auto& shape : strict_partitions_up_to(kMaxCells)) {
    ++shapes;
    for (const Cell& c : shape.cells()) {
      const int h = hook_length(shape, c);
      hooks_ok &= h == static_cast<int>(hook_cells(shape, c).size());
      corners_ok &= (h == 1) == is_removable(shape, c);
    }
    const BigCount total = count_syt(shape);
    if (!shape.empty()) {
      BigCount sum = 0;
      for (const Cell& c : removable_cells(shape)) sum += count_syt(remove_cell(shape, c));
      recurrence_ok &= sum == total;
    }
    enumeration_ok &= BigCount(enumerate_syt(shape).size()) == total;
  }
  const std::string scope = fmt::format("{} shapes with <= {} cells", shapes, kMaxCells);
  return {{"hook-length", "constant-time formula = hook expansion, " + scope, hooks_ok},
          {"corners", "removable cells = hook length 1, " + scope, corners_ok},
          {"counting-recurrence", "count = sum over corners, " + scope, recurrence_ok},
          {"enumeration", "enumerated tableaux = hook-formula count, " + scope,
           enumeration_ok}};
}

Gate uniformity_gate(const StrictPartition& shape, std::uint64_t seed) {
  const auto all = enumerate_syt(shape);
  std::map<std::vector<Label>, std::size_t> index;
  for (std::size_t k = 0; k < all.size(); ++k) index.emplace(all[k].reading_word(), k);
  const std::uint64_t samples = std::max<std::uint64_t>(70000, 20 * all.size());
  std::vector<std::uint64_t> counts(all.size(), 0);
  RandomStream rng(seed, 0);
  bool valid = true;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const ShiftedTableau t = sample_syt(shape, rng);
    const auto it = index.find(t.reading_word());
    if (it == index.end()) {
      valid = false;
      break;
    }
    ++counts[it->second];
  }
  const std::vector<double> expected(all.size(), 1.0 / static_cast<double>(all.size()));
  const StatReport rep = chi_square_report(counts, expected, 0.001);
  return {"uniformity",
          fmt::format("sample_syt ({}) {} samples over {} tableaux, chi-square p = {:.4g}",
                      to_string(shape), samples, all.size(), rep.p_value),
          valid && rep.pass};
}

}  // namespace

int cmd_verify(int n_max, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (n_max < 1 || n_max > kReducedWordBound) {
      throw ValidationError(
          fmt::format("--n-max must be in 1..{}, got {}", kReducedWordBound, n_max));
    }
    std::vector<Gate> gates = shape_gates();
    for (int n = 1; n <= n_max; ++n) {
      const auto exact = maxcell_pmf_exact(n);
      const auto brute = maxcell_pmf_bruteforce(n);
      Rational sum = 0;
      for (const auto& p : exact.exact) sum += p;
      gates.push_back({"pmf-equivalence",
                       fmt::format("closed form = hook-count ratio at n={}", n),
                       exact.exact == brute.exact && sum == 1});

      const auto words = enumerate_reduced_words(n);
      const BigCount tableaux = count_syt(staircase(n));
      gates.push_back({"reduced-word-count",
                       fmt::format("reduced-word count {} = tableau count {}",
                                   words.size(), tableaux.str()),
                       BigCount(words.size()) == tableaux});

      std::set<Word> image;
      bool all_reduced = true;
      bool first_ok = true;
      for (const auto& t : enumerate_syt(staircase(n))) {
        const Word w = tableau_to_word(t);
        all_reduced &= is_reduced_word_of_w0(w);
        first_ok &= w.letters.front() == first_letter(t);
        image.insert(w);
      }
      const std::set<Word> expected(words.begin(), words.end());
      gates.push_back({"bijection",
                       fmt::format("bijection image = {} enumerated words at n={}",
                                   expected.size(), n),
                       all_reduced && first_ok && image == expected});
      if (n >= 2) gates.push_back(uniformity_gate(staircase(n), kDefaultSeed));
    }
    gates.push_back(uniformity_gate(StrictPartition{4, 2, 1}, kDefaultSeed));

    bool all = true;
    out << io::kVerifyHeader << '\n';
    for (const auto& g : gates) {
      out << g.name << ",\"" << g.detail << "\"," << (g.pass ? "pass" : "fail") << '\n';
      if (!g.pass) {
        err << "gate failed: " << g.name << " (" << g.detail << ")\n";
        all = false;
      }
    }
    return all ? kOk : kVerificationFailed;
  });
}

}  // namespace sytb::cli
