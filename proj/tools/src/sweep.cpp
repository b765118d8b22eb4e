#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include "commands.hpp"
#include "manifest.hpp"
#include "sigmavote/errors.hpp"
#include "sigmavote/metrics.hpp"
#include "sigmavote/report_io.hpp"
#include "sigmavote/stats.hpp"

namespace sigmavote::cli {

namespace {

struct FileResult {
  std::string election_id;
  std::optional<ReportContext> ctx;
  std::optional<CandidateRoster> roster;
  std::vector<MetricReport> reports;
  std::string error;
};

std::vector<std::filesystem::path> find_profiles(const std::filesystem::path& root, const std::string& ext) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(root)) {
    if (entry.is_regular_file() && entry.path().extension() == ext) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::string election_id_for(const std::filesystem::path& root, const std::filesystem::path& file) {
  auto rel = std::filesystem::relative(file, root);
  rel.replace_extension();
  return rel.generic_string();
}

}  // namespace

int cmd_sweep(const GlobalOptions& g, const SweepOptions& o, std::ostream& out, std::ostream& err) {
  if (!std::filesystem::is_directory(o.corpus)) throw ParseError("no such directory: '" + o.corpus.string() + "'");
  const auto fields = parse_group_fields(o.group_by);
  parse_input_format(o.input_format);
  const auto files = find_profiles(o.corpus, o.extension);

  std::vector<FileResult> results(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      FileResult& r = results[i];
      r.election_id = election_id_for(o.corpus, files[i]);
      try {
        const Election e = load_election(files[i], o.input_format, std::nullopt);
        const auto rules = rules_for(g.rules, e.seats, e.profile.m());
        r.reports = evaluate_all(rules, e.profile);
        r.ctx = context_of(r.election_id, e.profile, e.seats);
        r.roster = e.profile.roster();
      } catch (const std::exception& ex) {
        r.error = ex.what();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(g.jobs, static_cast<unsigned>(std::max<std::size_t>(1, files.size()))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::sort(results.begin(), results.end(),
            [](const FileResult& a, const FileResult& b) { return a.election_id < b.election_id; });
  std::size_t parsed = 0;
  std::size_t rows = 0;
  std::vector<CorpusRecord> records;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const FileResult& r = results[i];
    if (!r.ctx) {
      err << "sweep: skipped " << r.election_id << ": " << r.error << '\n';
      continue;
    }
    ++parsed;
    rows += r.reports.size();
    for (const auto& rep : r.reports) {
      records.push_back({r.election_id, rep.rule_name, r.ctx->m, r.ctx->seats, rep.sigma_iia, rep.sigma_u});
    }
  }
  err << "sweep: " << files.size() << " files, " << parsed << " evaluated, " << files.size() - parsed
      << " failed, " << rows << " rows\n";
  if (parsed == 0) return kEmptyCorpus;

  std::ofstream file;
  if (o.output) file = open_output(*o.output);
  std::ostream& sink = o.output ? static_cast<std::ostream&>(file) : out;
  if (g.format == OutputFormat::json) {
    sink << "[\n";
    bool first = true;
    for (const FileResult& r : results) {
      if (!r.ctx) continue;
      for (const auto& rep : r.reports) {
        sink << (first ? "" : ",\n") << report_json(*r.ctx, rep, *r.roster);
        first = false;
      }
    }
    sink << "\n]\n";
  } else {
    sink << kReportCsvHeader << '\n';
    for (const FileResult& r : results) {
      if (r.ctx) write_report_csv(sink, *r.ctx, r.reports, false);
    }
  }

  RunManifest manifest{"sweep", {o.corpus.string()}, {}, g.rules, g.seed, {}};
  manifest.config["extension"] = o.extension;
  manifest.config["files"] = std::to_string(files.size());
  manifest.config["evaluated"] = std::to_string(parsed);
  if (o.output) manifest.outputs.push_back(o.output->string());
  if (o.summary) {
    auto sf = open_output(*o.summary);
    write_summary_csv(sf, fields, aggregate_corpus(records, fields));
    manifest.outputs.push_back(o.summary->string());
    manifest.config["group_by"] = o.group_by;
  }
  if (!manifest.outputs.empty()) write_manifest(manifest.outputs.front(), manifest);
  return kOk;
}

}  // namespace sigmavote::cli
