#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>

namespace sytb {

struct StatReport {
  std::string test;  // "chi-square", "TV" or "KS"
  double statistic = 0.0;
  double threshold = 0.0;  // upper bound on a distance, lower bound on p
  bool pass = false;
  std::uint64_t sample_size = 0;
  double p_value = 1.0;  // chi-square only
};

struct ChiSquare {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

// Pearson goodness of fit of `observed` against `expected` probabilities.
// Cells with zero expected probability must have zero count and are skipped.
ChiSquare chi_square_test(std::span<const std::uint64_t> observed,
                          std::span<const double> expected);

// Pass when the p-value exceeds `alpha`.
StatReport chi_square_report(std::span<const std::uint64_t> observed,
                             std::span<const double> expected, double alpha);

// Pass when the distance is strictly below `threshold`.
StatReport distance_report(std::string test, double distance, double threshold,
                           std::uint64_t sample_size);

}  // namespace sytb
