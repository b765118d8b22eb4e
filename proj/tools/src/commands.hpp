#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "cli.hpp"
#include "sigmavote/synth.hpp"

namespace sigmavote::cli {

struct AnalyzeOptions {
  std::filesystem::path input;
  std::optional<std::filesystem::path> output;
  std::optional<std::filesystem::path> graph;
  std::optional<int> seats;
  std::string input_format = "auto";
};

struct SweepOptions {
  std::filesystem::path corpus;
  std::optional<std::filesystem::path> output;
  std::optional<std::filesystem::path> summary;
  std::string group_by = "rule,candidates,seats";
  std::string extension = ".csv";
  std::string input_format = "auto";
};

struct SyntheticOptions {
  BtConfig bt;
  int seats = 3;
  std::string strengths = "fresh";
  std::string sampler = "auto";
  /// generate: directory receiving profiles, experiment.csv and config.json.
  std::optional<std::filesystem::path> out_dir;
  /// bt-experiment: experiment CSV path (stdout when absent).
  std::optional<std::filesystem::path> output;
};

struct BootstrapOptions {
  std::filesystem::path input;
  std::optional<std::filesystem::path> output;
  std::size_t resamples = 1000;
  double confidence = 0.95;
  std::string metrics = "sigma_iia,sigma_u";
  std::optional<int> seats;
  std::string input_format = "auto";
};

int cmd_analyze(const GlobalOptions& g, const AnalyzeOptions& o, std::ostream& out, std::ostream& err);
int cmd_sweep(const GlobalOptions& g, const SweepOptions& o, std::ostream& out, std::ostream& err);
int cmd_generate(const GlobalOptions& g, const SyntheticOptions& o, std::ostream& out, std::ostream& err);
int cmd_bt_experiment(const GlobalOptions& g, const SyntheticOptions& o, std::ostream& out, std::ostream& err);
int cmd_bootstrap(const GlobalOptions& g, const BootstrapOptions& o, std::ostream& out, std::ostream& err);

Election load_election(const std::filesystem::path& path, const std::string& input_format,
                       std::optional<int> seats_override);

}  // namespace sigmavote::cli
