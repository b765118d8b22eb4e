#include "cli.hpp"

#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "sigmavote/errors.hpp"
#include "sigmavote/registry.hpp"

namespace sigmavote::cli {

namespace {

std::vector<std::string> split_list(const std::string& list) {
  std::vector<std::string> items;
  std::string item;
  for (char c : list + ",") {
    if (c == ',') {
      const auto b = item.find_first_not_of(" \t");
      if (b != std::string::npos) items.push_back(item.substr(b, item.find_last_not_of(" \t") - b + 1));
      item.clear();
    } else {
      item += c;
    }
  }
  return items;
}

void check_stv_seats(long k, std::size_t m) {
  if (k < 1 || static_cast<std::size_t>(k) >= m) {
    throw ConfigError("STV needs 1 <= seats < candidates, got seats=" + std::to_string(k) + " with " +
                      std::to_string(m) + " candidates");
  }
}

int report(std::ostream& err, int code, const std::string& what) {
  err << "sigmavote: " << what << '\n';
  return code;
}

}  // namespace

std::vector<VotingRule> rules_for(const std::string& list, std::optional<int> seats, std::size_t m) {
  for (const std::string& item : split_list(list)) {
    if (item == "stv") {
      if (!seats) throw ConfigError("rule 'stv' needs a seat count; pass --seats or use stv:k=N");
      check_stv_seats(*seats, m);
    } else if (item.starts_with("stv:k=")) {
      check_stv_seats(std::strtol(item.c_str() + 6, nullptr, 10), m);
    }
  }
  return make_rules(list, seats);
}

std::optional<ProfileFormat> parse_input_format(const std::string& name) {
  if (name == "auto") return std::nullopt;
  if (name == "canonical") return ProfileFormat::canonical_csv;
  if (name == "position") return ProfileFormat::position_columns_csv;
  throw ConfigError("unknown input format '" + name + "' (expected auto, canonical or position)");
}

std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  return out;
}

Election load_election(const std::filesystem::path& path, const std::string& input_format,
                       std::optional<int> seats_override) {
  const auto format = parse_input_format(input_format);
  if (!std::filesystem::is_regular_file(path)) throw ParseError("no such file: '" + path.string() + "'");
  Election e = read_election(path, format);
  if (seats_override) e.seats = seats_override;
  return e;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stability (sigma_IIA) and majoritarian alignment (sigma_U) of ranked-ballot voting rules"};
  app.name("sigmavote");
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  std::string format = "csv";
  app.add_option("--rules", g.rules, "Comma-separated rules: borda, 3-approval, 2-approval, plurality, "
                                     "stv, stv:k=N, dictator:i=N, optimal-u")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for every random draw")->capture_default_str();
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();

  AnalyzeOptions analyze;
  auto* a = app.add_subcommand("analyze", "Evaluate rules on one election");
  a->add_option("profile", analyze.input, "Profile file")->required();
  a->add_option("-o,--output", analyze.output, "Report file (CSV or JSON per --format)");
  a->add_option("--graph", analyze.graph, "Write the pairwise majority graph as a from,to,weight edge list");
  a->add_option("--seats", analyze.seats, "Seat count for 'stv' (overrides the file)");
  a->add_option("--input-format", analyze.input_format, "auto, canonical or position")->capture_default_str();

  SweepOptions sweep;
  auto* s = app.add_subcommand("sweep", "Evaluate rules on every election under a directory");
  s->add_option("corpus", sweep.corpus, "Corpus directory (searched recursively)")->required();
  s->add_option("-o,--output", sweep.output, "Report file (stdout when omitted)");
  s->add_option("--summary", sweep.summary, "Per-group summary statistics CSV");
  s->add_option("--group-by", sweep.group_by, "Summary grouping: any of rule,candidates,seats")->capture_default_str();
  s->add_option("--ext", sweep.extension, "Profile file extension")->capture_default_str();
  s->add_option("--input-format", sweep.input_format, "auto, canonical or position")->capture_default_str();

  auto add_synthetic = [](CLI::App* cmd, SyntheticOptions& o) {
    cmd->add_option("--alpha", o.bt.alpha, "Dirichlet concentration")->capture_default_str();
    cmd->add_option("-m,--candidates", o.bt.m, "Candidates per profile")->capture_default_str();
    cmd->add_option("--voters", o.bt.voters, "Ballots per profile")->capture_default_str();
    cmd->add_option("--profiles", o.bt.profiles, "Replicates")->capture_default_str();
    cmd->add_option("--seats", o.seats, "Seat count for 'stv'")->capture_default_str();
    cmd->add_option("--strengths", o.strengths, "fresh (per replicate) or shared")
        ->check(CLI::IsMember({"fresh", "shared"}))
        ->capture_default_str();
    cmd->add_option("--sampler", o.sampler, "auto, exact or mcmc")
        ->check(CLI::IsMember({"auto", "exact", "mcmc"}))
        ->capture_default_str();
    cmd->add_option("--burn-in", o.bt.burn_in, "MCMC burn-in steps (default 10 m^2)");
    cmd->add_option("--thin", o.bt.thin, "MCMC steps between samples (default m^2)");
  };
  SyntheticOptions generate;
  auto* gen = app.add_subcommand("generate", "Write Bradley-Terry profiles and their experiment table");
  add_synthetic(gen, generate);
  gen->add_option("--out-dir", generate.out_dir, "Output directory")->required();

  SyntheticOptions experiment;
  auto* exp = app.add_subcommand("bt-experiment", "Run a Bradley-Terry experiment without keeping profiles");
  add_synthetic(exp, experiment);
  exp->add_option("-o,--output", experiment.output, "Experiment CSV (stdout when omitted)");

  BootstrapOptions boot;
  auto* b = app.add_subcommand("bootstrap", "Percentile bootstrap intervals over voters");
  b->add_option("profile", boot.input, "Profile file")->required();
  b->add_option("-o,--output", boot.output, "Interval CSV (stdout when omitted)");
  b->add_option("-B,--resamples", boot.resamples, "Resample count")->capture_default_str();
  b->add_option("--confidence", boot.confidence, "Confidence level")->capture_default_str();
  b->add_option("--metrics", boot.metrics, "sigma_iia, sigma_u or both")->capture_default_str();
  b->add_option("--seats", boot.seats, "Seat count for 'stv' (overrides the file)");
  b->add_option("--input-format", boot.input_format, "auto, canonical or position")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    return report(err, kConfigError, e.what());
  }
  g.format = format == "json" ? OutputFormat::json : OutputFormat::csv;

  try {
    if (a->parsed()) return cmd_analyze(g, analyze, out, err);
    if (s->parsed()) return cmd_sweep(g, sweep, out, err);
    if (gen->parsed()) return cmd_generate(g, generate, out, err);
    if (exp->parsed()) return cmd_bt_experiment(g, experiment, out, err);
    if (b->parsed()) return cmd_bootstrap(g, boot, out, err);
  } catch (const ParseError& e) {
    return report(err, kParseError, e.what());
  } catch (const RosterError& e) {
    return report(err, kParseError, e.what());
  } catch (const BallotError& e) {
    return report(err, kParseError, e.what());
  } catch (const ValueError& e) {
    return report(err, kParseError, e.what());
  } catch (const ConfigError& e) {
    return report(err, kConfigError, e.what());
  } catch (const std::exception& e) {
    return report(err, kFailure, e.what());
  }
  return kFailure;
}

}  // namespace sigmavote::cli
