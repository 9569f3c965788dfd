#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sytb/coxeter_b.hpp"
#include "sytb/hookwalk.hpp"
#include "sytb/maxcell_dist.hpp"
#include "sytb/network.hpp"
#include "sytb/stats.hpp"
#include "sytb/tableau.hpp"

// CSV files are comma separated with LF line ends and a single header row.
// Floats are written with 17 significant digits so they round-trip.
//
//   prob          r,prob
//   sample-corner r,count,empirical,exact   (+ "# test,..." footer lines)
//   trajectories  t,card,y
//   snapshot      position,card,sign
//   frequency     letter,count,normalized
//
// Tableaux are JSON: {"shape":[4,2,1],"rows":[[1,2,3,4],[5,6],[7]]}.
namespace sytb::io {

inline constexpr const char* kProbHeader = "r,prob";
inline constexpr const char* kCornerHeader = "r,count,empirical,exact";
inline constexpr const char* kTrajectoryHeader = "t,card,y";
inline constexpr const char* kSnapshotHeader = "position,card,sign";
inline constexpr const char* kFrequencyHeader = "letter,count,normalized";
inline constexpr const char* kVerifyHeader = "gate,detail,pass";

std::string format_double(double x);
std::string format_rational(const Rational& q);

void write_prob_csv(std::ostream& out, const DistributionTable& table);

// One row per corner offset r of staircase(n); footer lines list each report
// as "# test,statistic,threshold,pass,samples".
void write_corner_csv(std::ostream& out, const CornerHistogram& hist,
                      const DistributionTable& exact,
                      const std::vector<StatReport>& reports);

void write_snapshot_csv(std::ostream& out, const MatrixSnapshot& snap);
void write_frequency_csv(std::ostream& out, const std::vector<std::uint64_t>& counts);

// Row writer for the trajectory file.
void write_trajectory_header(std::ostream& out);
void write_trajectory_rows(std::ostream& out, const StreamingNetwork& net);

std::string format_report(const StatReport& r);

nlohmann::json tableau_to_json(const ShiftedTableau& t);
ShiftedTableau tableau_from_json(const nlohmann::json& j);

// Histogram counts indexed by corner offset r (row n - r).
std::vector<std::uint64_t> counts_by_offset(const CornerHistogram& hist, int n);

}  // namespace sytb::io
