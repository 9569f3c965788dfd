#include "sytb/stats.hpp"

#include <numeric>

#include <boost/math/distributions/chi_squared.hpp>
#include <fmt/format.h>

#include "sytb/shifted_shape.hpp"

namespace sytb {

ChiSquare chi_square_test(std::span<const std::uint64_t> observed,
                          std::span<const double> expected) {
  if (observed.size() != expected.size()) {
    throw ValidationError(fmt::format("chi_square_test: {} counts vs {} probabilities",
                                      observed.size(), expected.size()));
  }
  const double total = static_cast<double>(
      std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}));
  ChiSquare out;
  int cells = 0;
  for (std::size_t k = 0; k < observed.size(); ++k) {
    const double e = expected[k] * total;
    if (e <= 0.0) {
      if (observed[k] != 0) {
        out.statistic = std::numeric_limits<double>::infinity();
        out.p_value = 0.0;
        return out;
      }
      continue;
    }
    const double d = static_cast<double>(observed[k]) - e;
    out.statistic += d * d / e;
    ++cells;
  }
  out.dof = cells - 1;
  if (out.dof <= 0) {
    out.p_value = 1.0;
    return out;
  }
  const boost::math::chi_squared_distribution<double> dist(out.dof);
  out.p_value = boost::math::cdf(boost::math::complement(dist, out.statistic));
  return out;
}

StatReport chi_square_report(std::span<const std::uint64_t> observed,
                             std::span<const double> expected, double alpha) {
  const ChiSquare c = chi_square_test(observed, expected);
  const auto total = std::accumulate(observed.begin(), observed.end(), std::uint64_t{0});
  return StatReport{"chi-square", c.statistic, alpha, c.p_value > alpha, total,
                    c.p_value};
}

StatReport distance_report(std::string test, double distance, double threshold,
                           std::uint64_t sample_size) {
  return StatReport{std::move(test), distance, threshold, distance < threshold,
                    sample_size, 1.0};
}

}  // namespace sytb
