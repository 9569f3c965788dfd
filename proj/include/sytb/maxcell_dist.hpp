#pragma once

#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sytb {

using Rational = boost::multiprecision::cpp_rational;

// Probabilities over r = 0..n-1, where r is the offset of the maximal cell
// (n - r, n + r) of a staircase tableau. `probs` is always filled; `exact`
// is filled only for tables built in rational arithmetic.
struct DistributionTable {
  int n = 0;
  std::vector<double> probs;
  std::vector<Rational> exact;

  bool is_exact() const { return !exact.empty(); }
  std::size_t size() const { return probs.size(); }

  static DistributionTable from_exact(std::vector<Rational> values);
  static DistributionTable from_float(std::vector<double> values);
};

// b(r) = C(2r, r) / 4^r, by the recurrence b(r+1) = b(r) (2r+1) / (2r+2).
Rational half_binom(int r);

// b(0), ..., b(count - 1).
std::vector<Rational> half_binom_table(int count);

// log b(0), ..., log b(count - 1), same recurrence in log space.
std::vector<double> log_half_binom_table(int count);

// P(S = r) = (2r+1)(2n-2r-1)/n^2 * b(r)^2 b(n-r-1) b(2r+1) / (b(2r) b(n+r)).
DistributionTable maxcell_pmf_exact(int n);
DistributionTable maxcell_pmf_float(int n);

// Ratio count_syt(staircase minus corner) / count_syt(staircase), computed
// from hook-length counts. Refuses n > 8.
inline constexpr int kBruteforceBound = 8;
DistributionTable maxcell_pmf_bruteforce(int n);

double quarter_circle_pdf(double x);
double quarter_circle_cdf(double x);

// Bin masses F((r+1)/n) - F(r/n) of the quarter-circle law.
DistributionTable quarter_circle_bins(int n);

double tv_distance(const DistributionTable& p, const DistributionTable& q);

// sup_r |P(S <= r) - F((r+1)/n)| with n = p.size().
double ks_distance(const DistributionTable& p,
                   const std::function<double(double)>& cdf);

}  // namespace sytb
