#include <cstdio>
#include <fstream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "manifest.hpp"
#include "sigmavote/errors.hpp"
#include "sigmavote/profile_io.hpp"

namespace sigmavote::cli {

namespace {

BtConfig resolve(const GlobalOptions& g, const SyntheticOptions& o) {
  BtConfig cfg = o.bt;
  cfg.seed = g.seed;
  cfg.strengths = o.strengths == "shared" ? StrengthMode::shared : StrengthMode::fresh_per_replicate;
  cfg.sampler = o.sampler == "exact" ? SamplerKind::exact : o.sampler == "mcmc" ? SamplerKind::mcmc : SamplerKind::automatic;
  cfg.validate();
  return cfg;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

RunManifest manifest_for(const std::string& command, const GlobalOptions& g, const SyntheticOptions& o,
                         const BtConfig& cfg) {
  RunManifest m{command, {}, {}, g.rules, g.seed, {}};
  m.config["alpha"] = format_double(cfg.alpha);
  m.config["m"] = std::to_string(cfg.m);
  m.config["voters"] = std::to_string(cfg.voters);
  m.config["profiles"] = std::to_string(cfg.profiles);
  m.config["seats"] = std::to_string(o.seats);
  m.config["strengths"] = o.strengths;
  m.config["sampler"] = o.sampler;
  m.config["burn_in"] = std::to_string(cfg.effective_burn_in());
  m.config["thin"] = std::to_string(cfg.effective_thin());
  return m;
}

}  // namespace

int cmd_generate(const GlobalOptions& g, const SyntheticOptions& o, std::ostream& out, std::ostream&) {
  const BtConfig cfg = resolve(g, o);
  const auto rules = rules_for(g.rules, o.seats, cfg.m);
  const std::filesystem::path dir = *o.out_dir;
  std::filesystem::create_directories(dir);

  RunManifest manifest = manifest_for("generate", g, o, cfg);
  nlohmann::ordered_json strengths = nlohmann::ordered_json::array();
  auto sink = [&](std::size_t replicate, const StrengthVector& s, const Profile& p) {
    char name[32];
    std::snprintf(name, sizeof name, "profile_%04zu.csv", replicate);
    auto file = open_output(dir / name);
    file << "# election: bt-" << replicate << '\n';
    write_profile(file, p, o.seats);
    strengths.push_back({{"replicate", replicate}, {"strengths", s}});
  };
  const auto rows = run_bt_experiment(cfg, rules, g.jobs, sink);

  const auto experiment = dir / "experiment.csv";
  {
    auto file = open_output(experiment);
    write_experiment_csv(file, rows);
  }
  {
    nlohmann::ordered_json config;
    config["config_hash"] = manifest.config_hash();
    config["seed"] = g.seed;
    config["rules"] = g.rules;
    for (const auto& [k, v] : manifest.config) config[k] = v;
    config["strength_draws"] = std::move(strengths);
    auto file = open_output(dir / "config.json");
    file << config.dump(2) << '\n';
  }
  manifest.outputs = {experiment.string(), (dir / "config.json").string()};
  write_manifest(experiment, manifest);
  out << "generate: " << cfg.profiles << " profiles, " << rows.size() << " rows in " << dir.string() << '\n';
  return kOk;
}

int cmd_bt_experiment(const GlobalOptions& g, const SyntheticOptions& o, std::ostream& out, std::ostream&) {
  const BtConfig cfg = resolve(g, o);
  const auto rules = rules_for(g.rules, o.seats, cfg.m);
  const auto rows = run_bt_experiment(cfg, rules, g.jobs);
  if (!o.output) {
    write_experiment_csv(out, rows);
    return kOk;
  }
  {
    auto file = open_output(*o.output);
    write_experiment_csv(file, rows);
  }
  RunManifest manifest = manifest_for("bt-experiment", g, o, cfg);
  manifest.outputs.push_back(o.output->string());
  write_manifest(*o.output, manifest);
  return kOk;
}

}  // namespace sigmavote::cli
