#include "sytb/export.hpp"

#include <iterator>

#include <fmt/format.h>

namespace sytb::io {

std::string format_double(double x) { return fmt::format("{:.17g}", x); }

std::string format_rational(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

void write_prob_csv(std::ostream& out, const DistributionTable& table) {
  out << kProbHeader << '\n';
  for (std::size_t r = 0; r < table.size(); ++r) {
    out << r << ','
        << (table.is_exact() ? format_rational(table.exact[r])
                             : format_double(table.probs[r]))
        << '\n';
  }
}

std::vector<std::uint64_t> counts_by_offset(const CornerHistogram& hist, int n) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n; ++r) counts[r] = hist.count({n - r, n + r});
  return counts;
}

std::string format_report(const StatReport& r) {
  return fmt::format("{},{},{},{},{}", r.test,
                     format_double(r.test == "chi-square" ? r.p_value : r.statistic),
                     format_double(r.threshold), r.pass ? "pass" : "fail",
                     r.sample_size);
}

void write_corner_csv(std::ostream& out, const CornerHistogram& hist,
                      const DistributionTable& exact,
                      const std::vector<StatReport>& reports) {
  const int n = static_cast<int>(exact.size());
  const auto counts = counts_by_offset(hist, n);
  out << kCornerHeader << '\n';
  for (int r = 0; r < n; ++r) {
    const double empirical =
        hist.total > 0 ? static_cast<double>(counts[r]) / static_cast<double>(hist.total)
                       : 0.0;
    out << r << ',' << counts[r] << ',' << format_double(empirical) << ','
        << format_double(exact.probs[r]) << '\n';
  }
  for (const StatReport& rep : reports) out << "# " << format_report(rep) << '\n';
}

void write_snapshot_csv(std::ostream& out, const MatrixSnapshot& snap) {
  out << kSnapshotHeader << '\n';
  fmt::memory_buffer buf;
  for (const SnapshotEntry& e : snap.entries) {
    fmt::format_to(std::back_inserter(buf), "{},{},{}\n", e.position, e.card, e.sign);
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

void write_frequency_csv(std::ostream& out, const std::vector<std::uint64_t>& counts) {
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  out << kFrequencyHeader << '\n';
  for (std::size_t q = 0; q < counts.size(); ++q) {
    const double normalized =
        total > 0 ? static_cast<double>(counts[q]) / static_cast<double>(total) : 0.0;
    out << q << ',' << counts[q] << ',' << format_double(normalized) << '\n';
  }
}

void write_trajectory_header(std::ostream& out) { out << kTrajectoryHeader << '\n'; }

void write_trajectory_rows(std::ostream& out, const StreamingNetwork& net) {
  fmt::memory_buffer buf;
  for (int card = 1; card <= net.rank(); ++card) {
    fmt::format_to(std::back_inserter(buf), "{},{},{}\n", net.time(), card,
                   net.height(card));
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

nlohmann::json tableau_to_json(const ShiftedTableau& t) {
  nlohmann::json j;
  j["shape"] = std::vector<int>(t.shape().parts().begin(), t.shape().parts().end());
  j["rows"] = t.rows();
  return j;
}

ShiftedTableau tableau_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("shape") || !j.contains("rows")) {
    throw ValidationError("tableau JSON needs \"shape\" and \"rows\"");
  }
  try {
    auto parts = j.at("shape").get<std::vector<int>>();
    auto rows = j.at("rows").get<std::vector<std::vector<Label>>>();
    return ShiftedTableau(StrictPartition(std::move(parts)), std::move(rows));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(fmt::format("tableau JSON: {}", e.what()));
  }
}

}  // namespace sytb::io
