#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sytb/random_stream.hpp"

namespace sytb::cli {

// Process exit codes.
enum Exit : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kInvariantBreach = 3,
};

// Environment variable naming the default directory for `simulate` output.
inline constexpr const char* kOutputDirEnv = "SYTB_OUTPUT_DIR";

struct SampleCornerConfig {
  int n = 1;
  std::uint64_t samples = 100000;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t streams = 1;
  double tv_threshold = 0.01;
  double alpha = 0.001;
};

struct WordConfig {
  int n = 1;
  std::uint64_t seed = kDefaultSeed;
  std::string tableau_in;   // read the tableau instead of sampling
  std::string tableau_out;  // write the sampled tableau as JSON
};

struct TableauConfig {
  std::optional<int> n;
  std::string shape;
  std::uint64_t seed = kDefaultSeed;
};

struct SimulateConfig {
  int n = 1;
  std::uint64_t seed = kDefaultSeed;
  std::string out_dir;  // empty: $SYTB_OUTPUT_DIR, else "."
  std::vector<double> fractions = {0.0, 0.25, 0.5, 0.75, 1.0};
  std::int64_t stride = 0;  // 0: max(1, n^2 / 2000)
};

int cmd_count(const std::string& shape, std::ostream& out, std::ostream& err);
int cmd_prob(int n, bool exact, std::ostream& out, std::ostream& err);
int cmd_sample_corner(const SampleCornerConfig& cfg, std::ostream& out,
                      std::ostream& err);
int cmd_word(const WordConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_tableau(const TableauConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_simulate(const SimulateConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(int n_max, std::ostream& out, std::ostream& err);

// File names written by cmd_simulate inside the output directory.
std::string snapshot_file_name(std::size_t index);
inline constexpr const char* kTrajectoryFile = "trajectories.csv";
inline constexpr const char* kFrequencyFile = "frequency.csv";

std::int64_t default_stride(int n);

}  // namespace sytb::cli
