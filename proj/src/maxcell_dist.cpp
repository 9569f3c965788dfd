#include "sytb/maxcell_dist.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "sytb/shifted_shape.hpp"

namespace sytb {

DistributionTable DistributionTable::from_exact(std::vector<Rational> values) {
  DistributionTable t;
  t.n = static_cast<int>(values.size());
  t.probs.reserve(values.size());
  for (const auto& v : values) t.probs.push_back(static_cast<double>(v));
  t.exact = std::move(values);
  return t;
}

DistributionTable DistributionTable::from_float(std::vector<double> values) {
  DistributionTable t;
  t.n = static_cast<int>(values.size());
  t.probs = std::move(values);
  return t;
}

std::vector<Rational> half_binom_table(int count) {
  std::vector<Rational> b;
  if (count <= 0) return b;
  b.reserve(static_cast<std::size_t>(count));
  b.emplace_back(1);
  for (int r = 0; r + 1 < count; ++r) {
    b.push_back(b.back() * Rational(2 * r + 1, 2 * r + 2));
  }
  return b;
}

Rational half_binom(int r) {
  if (r < 0) throw ValidationError(fmt::format("half_binom: r = {} < 0", r));
  return half_binom_table(r + 1).back();
}

std::vector<double> log_half_binom_table(int count) {
  std::vector<double> out;
  if (count <= 0) return out;
  out.reserve(static_cast<std::size_t>(count));
  long double acc = 0.0L;
  out.push_back(0.0);
  for (int r = 0; r + 1 < count; ++r) {
    acc += std::log1p(-1.0L / (2.0L * r + 2.0L));
    out.push_back(static_cast<double>(acc));
  }
  return out;
}

namespace {

void require_rank(int n, const char* what) {
  if (n < 1) throw ValidationError(fmt::format("{}: n must be >= 1, got {}", what, n));
}

}  // namespace

DistributionTable maxcell_pmf_exact(int n) {
  require_rank(n, "maxcell_pmf_exact");
  const auto b = half_binom_table(2 * n);
  const Rational n2(static_cast<long long>(n) * n);
  std::vector<Rational> p(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    const Rational front((2LL * r + 1) * (2LL * n - 2LL * r - 1));
    p[r] = front / n2 * b[r] * b[r] * b[n - r - 1] * b[2 * r + 1] /
           (b[2 * r] * b[n + r]);
  }
  return DistributionTable::from_exact(std::move(p));
}

DistributionTable maxcell_pmf_float(int n) {
  require_rank(n, "maxcell_pmf_float");
  const auto lb = log_half_binom_table(2 * n);
  const double log_n2 = 2.0 * std::log(static_cast<double>(n));
  std::vector<double> p(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
  for (int r = 0; r < n; ++r) {
    const double front = std::log(2.0 * r + 1.0) +
                         std::log(2.0 * n - 2.0 * r - 1.0) - log_n2;
    p[r] = std::exp(front + 2.0 * lb[r] + lb[n - r - 1] + lb[2 * r + 1] -
                    lb[2 * r] - lb[n + r]);
  }
  return DistributionTable::from_float(std::move(p));
}

DistributionTable maxcell_pmf_bruteforce(int n) {
  require_rank(n, "maxcell_pmf_bruteforce");
  if (n > kBruteforceBound) {
    throw OracleBoundExceeded(fmt::format(
        "maxcell_pmf_bruteforce: n = {} exceeds bound {}", n, kBruteforceBound));
  }
  const StrictPartition shape = staircase(n);
  const BigCount total = count_syt(shape);
  std::vector<Rational> p(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    const BigCount part = count_syt(remove_cell(shape, {n - r, n + r}));
    p[r] = Rational(part, total);
  }
  return DistributionTable::from_exact(std::move(p));
}

namespace {

void require_unit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw ValidationError(fmt::format("{}: x = {} is outside [0, 1]", what, x));
  }
}

}  // namespace

double quarter_circle_pdf(double x) {
  require_unit(x, "quarter_circle_pdf");
  return 4.0 / std::numbers::pi * std::sqrt(1.0 - x * x);
}

double quarter_circle_cdf(double x) {
  require_unit(x, "quarter_circle_cdf");
  return 2.0 / std::numbers::pi * (x * std::sqrt(1.0 - x * x) + std::asin(x));
}

DistributionTable quarter_circle_bins(int n) {
  require_rank(n, "quarter_circle_bins");
  std::vector<double> p(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    p[r] = quarter_circle_cdf(static_cast<double>(r + 1) / n) -
           quarter_circle_cdf(static_cast<double>(r) / n);
  }
  return DistributionTable::from_float(std::move(p));
}

double tv_distance(const DistributionTable& p, const DistributionTable& q) {
  if (p.size() != q.size()) {
    throw ValidationError(fmt::format("tv_distance: support sizes {} and {} differ",
                                      p.size(), q.size()));
  }
  double sum = 0.0;
  for (std::size_t r = 0; r < p.size(); ++r) sum += std::abs(p.probs[r] - q.probs[r]);
  return 0.5 * sum;
}

double ks_distance(const DistributionTable& p,
                   const std::function<double(double)>& cdf) {
  const auto n = static_cast<double>(p.size());
  double running = 0.0;
  double worst = 0.0;
  for (std::size_t r = 0; r < p.size(); ++r) {
    running += p.probs[r];
    worst = std::max(worst, std::abs(running - cdf(static_cast<double>(r + 1) / n)));
  }
  return worst;
}

}  // namespace sytb
