#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

std::vector<double> parse_fractions(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    out.push_back(std::stod(item, &used));
    if (used != item.size()) throw std::invalid_argument(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace sytb::cli;

  CLI::App app{"Shifted staircase tableaux, type B sorting networks and the "
               "maximal-cell distribution"};
  app.require_subcommand(1);

  std::string shape;
  auto* count = app.add_subcommand("count", "exact number of standard tableaux of a shape");
  count->add_option("--shape", shape, "strict partition, e.g. 4,2,1")->required();

  int prob_n = 1;
  bool prob_exact = false;
  auto* prob = app.add_subcommand("prob", "P(S = r) for the staircase of rank n as CSV");
  prob->add_option("--n", prob_n, "rank")->required();
  prob->add_flag("--exact", prob_exact, "print exact rationals p/q");

  SampleCornerConfig corner;
  auto* sample = app.add_subcommand("sample-corner",
                                    "hook-walk histogram of the maximal corner vs the exact pmf");
  sample->add_option("--n", corner.n, "rank")->required();
  sample->add_option("--samples", corner.samples, "number of hook walks");
  sample->add_option("--seed", corner.seed, "random seed");
  sample->add_option("--streams", corner.streams, "number of random streams");
  sample->add_option("--tv-threshold", corner.tv_threshold, "TV distance pass threshold");
  sample->add_option("--alpha", corner.alpha, "chi-square p-value pass threshold");

  WordConfig word;
  auto* wordc = app.add_subcommand("word", "reduced word of w0 from a uniform random tableau");
  wordc->add_option("--n", word.n, "rank");
  wordc->add_option("--seed", word.seed, "random seed");
  wordc->add_option("--tableau-in", word.tableau_in, "convert this tableau JSON instead");
  wordc->add_option("--tableau-out", word.tableau_out, "write the tableau as JSON");

  TableauConfig tab;
  int tab_n = 0;
  auto* tabc = app.add_subcommand("tableau", "uniform random standard tableau as JSON");
  auto* tab_n_opt = tabc->add_option("--n", tab_n, "staircase rank");
  tabc->add_option("--shape", tab.shape, "strict partition");
  tabc->add_option("--seed", tab.seed, "random seed");

  SimulateConfig sim;
  std::string fractions;
  auto* simc = app.add_subcommand("simulate",
                                  "run a random type B sorting network and export CSVs");
  simc->add_option("--n", sim.n, "rank")->required();
  simc->add_option("--seed", sim.seed, "random seed");
  simc->add_option("--out-dir", sim.out_dir,
                   "output directory (default $SYTB_OUTPUT_DIR or .)");
  simc->add_option("--fractions", fractions, "snapshot times as fractions of n^2");
  simc->add_option("--stride", sim.stride, "trajectory down-sampling stride");

  int n_max = 2;
  auto* verify = app.add_subcommand("verify", "run the oracle gates");
  verify->add_option("--n-max", n_max, "largest rank to check (<= 4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  if (*count) return cmd_count(shape, std::cout, std::cerr);
  if (*prob) return cmd_prob(prob_n, prob_exact, std::cout, std::cerr);
  if (*sample) return cmd_sample_corner(corner, std::cout, std::cerr);
  if (*wordc) return cmd_word(word, std::cout, std::cerr);
  if (*tabc) {
    if (*tab_n_opt) tab.n = tab_n;
    return cmd_tableau(tab, std::cout, std::cerr);
  }
  if (*simc) {
    if (!fractions.empty()) {
      try {
        sim.fractions = parse_fractions(fractions);
      } catch (const std::exception&) {
        std::cerr << "error: malformed --fractions '" << fractions << "'\n";
        return kUsageError;
      }
    }
    return cmd_simulate(sim, std::cout, std::cerr);
  }
  if (*verify) return cmd_verify(n_max, std::cout, std::cerr);
  return kUsageError;
}
