#include <fstream>
#include <ostream>

#include "commands.hpp"
#include "manifest.hpp"
#include "sigmavote/stats.hpp"

namespace sigmavote::cli {

int cmd_bootstrap(const GlobalOptions& g, const BootstrapOptions& o, std::ostream& out, std::ostream&) {
  const BootstrapConfig cfg{o.resamples, o.confidence, g.seed};
  cfg.validate();
  std::vector<Metric> metrics;
  {
    std::string list = o.metrics + ",";
    std::string item;
    for (char c : list) {
      if (c != ',') {
        item += c;
      } else if (!item.empty()) {
        metrics.push_back(parse_metric(item));
        item.clear();
      }
    }
  }
  const Election e = load_election(o.input, o.input_format, o.seats);
  const auto rules = rules_for(g.rules, e.seats, e.profile.m());

  std::ofstream file;
  if (o.output) file = open_output(*o.output);
  std::ostream& sink = o.output ? static_cast<std::ostream&>(file) : out;
  sink << kBootstrapCsvHeader << '\n';
  for (const VotingRule& rule : rules) {
    for (Metric metric : metrics) {
      sink << bootstrap_csv_row(e.election_id, bootstrap_metric(e.profile, rule, metric, cfg, g.jobs)) << '\n';
    }
  }
  if (o.output) {
    RunManifest manifest{"bootstrap", {o.input.string()}, {o.output->string()}, g.rules, g.seed, {}};
    manifest.config["resamples"] = std::to_string(o.resamples);
    manifest.config["confidence"] = std::to_string(o.confidence);
    manifest.config["metrics"] = o.metrics;
    manifest.config["pooling"] = "none (per election)";
    write_manifest(*o.output, manifest);
  }
  return kOk;
}

}  // namespace sigmavote::cli
