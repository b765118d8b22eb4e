#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "commands.hpp"
#include "manifest.hpp"
#include "sigmavote/metrics.hpp"
#include "sigmavote/pairwise.hpp"
#include "sigmavote/registry.hpp"
#include "sigmavote/report_io.hpp"

namespace sigmavote::cli {

namespace {

std::string positions(const Ranking& r, const CandidateRoster& roster) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(roster.position(r[i]) + 1);
  }
  return s + ")";
}

void print_table(std::ostream& out, const Election& e, const std::vector<MetricReport>& reports) {
  const Profile& p = e.profile;
  const auto& roster = p.roster();
  out << e.election_id;
  if (auto title = e.metadata.find("title"); title != e.metadata.end()) out << " - " << title->second;
  out << " (n=" << to_string(p.n()) << ", m=" << p.m();
  if (e.seats) out << ", seats=" << *e.seats;
  out << ")\n";
  for (std::size_t i = 0; i < roster.size(); ++i) out << "  " << i + 1 << ": " << roster.name(roster.at(i)) << '\n';

  std::size_t width = 9;
  for (const auto& r : reports) width = std::max(width, positions(r.ranking, roster).size());
  char line[256];
  std::snprintf(line, sizeof line, "%-10s %-*s %9s %9s\n", "rule", static_cast<int>(width), "ranking", "sigma_IIA",
                "sigma_U");
  out << line;
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "%-10s %-*s %9s %9s\n", display_label(r.rule_name).c_str(),
                  static_cast<int>(width), positions(r.ranking, roster).c_str(), to_fixed(r.sigma_iia, 2).c_str(),
                  to_fixed(r.sigma_u, 2).c_str());
    out << line;
  }
}

std::filesystem::path rankings_path_for(const std::filesystem::path& output) {
  auto p = output.parent_path() / output.stem();
  p += "_rankings.csv";
  return p;
}

}  // namespace

int cmd_analyze(const GlobalOptions& g, const AnalyzeOptions& o, std::ostream& out, std::ostream&) {
  const Election e = load_election(o.input, o.input_format, o.seats);
  const auto rules = rules_for(g.rules, e.seats, e.profile.m());
  auto reports = evaluate_all(rules, e.profile);

  // table rows follow the order the rules were requested in
  std::vector<MetricReport> ordered;
  for (const VotingRule& rule : rules) {
    auto it = std::find_if(reports.begin(), reports.end(), [&](const auto& r) { return r.rule_name == rule.name(); });
    if (it != reports.end()) ordered.push_back(*it);
  }
  print_table(out, e, ordered);

  const ReportContext ctx = context_of(e.election_id, e.profile, e.seats);
  RunManifest manifest{"analyze", {o.input.string()}, {}, g.rules, g.seed, {}};
  manifest.config["format"] = g.format == OutputFormat::json ? "json" : "csv";
  if (e.seats) manifest.config["seats"] = std::to_string(*e.seats);

  if (o.output) {
    auto file = open_output(*o.output);
    if (g.format == OutputFormat::json) {
      write_report_json(file, ctx, reports, e.profile.roster());
    } else {
      write_report_csv(file, ctx, reports);
      const auto rankings = rankings_path_for(*o.output);
      auto rf = open_output(rankings);
      rf << "election_id,rule,rank,candidate\n";
      for (const auto& r : reports) {
        const auto names = ranking_names(r.ranking, e.profile.roster());
        for (std::size_t i = 0; i < names.size(); ++i) {
          rf << e.election_id << ',' << r.rule_name << ',' << i + 1 << ',' << names[i] << '\n';
        }
      }
      manifest.outputs.push_back(rankings.string());
    }
    manifest.outputs.insert(manifest.outputs.begin(), o.output->string());
  }
  if (o.graph) {
    auto gf = open_output(*o.graph);
    write_edge_list(gf, build_pwcg(e.profile));
    manifest.outputs.push_back(o.graph->string());
  }
  if (!manifest.outputs.empty()) write_manifest(manifest.outputs.front(), manifest);
  return kOk;
}

}  // namespace sigmavote::cli
