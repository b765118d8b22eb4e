#include "sigmavote/report_io.hpp"

#include <ostream>

#include <nlohmann/json.hpp>

namespace sigmavote {

namespace {

nlohmann::ordered_json to_json(const ReportContext& ctx, const MetricReport& r, const CandidateRoster& roster) {
  nlohmann::ordered_json j;
  j["election_id"] = ctx.election_id;
  j["rule"] = r.rule_name;
  j["ranking"] = ranking_names(r.ranking, roster);
  j["sigma_iia"] = to_double(r.sigma_iia);
  j["sigma_u"] = to_double(r.sigma_u);
  j["m_value"] = to_double(r.m_value);
  j["exact"] = {{"sigma_iia", to_string(r.sigma_iia)},
                {"sigma_u", to_string(r.sigma_u)},
                {"m_value", to_string(r.m_value)}};
  j["n"] = to_string(ctx.n);
  j["m"] = ctx.m;
  if (ctx.seats) {
    j["seats"] = *ctx.seats;
  } else {
    j["seats"] = nullptr;
  }
  nlohmann::ordered_json swaps = nlohmann::ordered_json::object();
  for (const auto& [c, d] : r.per_candidate_swaps) swaps[roster.name(c)] = d;
  j["per_candidate_swaps"] = std::move(swaps);
  return j;
}

}  // namespace

ReportContext context_of(const std::string& election_id, const Profile& p, std::optional<int> seats) {
  return {election_id, p.n(), p.m(), seats};
}

std::string report_csv_row(const ReportContext& ctx, const MetricReport& r) {
  std::string row = ctx.election_id;
  row += ',' + r.rule_name;
  row += ',' + to_decimal(r.sigma_iia);
  row += ',' + to_decimal(r.sigma_u);
  row += ',' + to_decimal(r.m_value);
  row += ',' + to_string(ctx.n);
  row += ',' + std::to_string(ctx.m);
  row += ',';
  if (ctx.seats) row += std::to_string(*ctx.seats);
  return row;
}

void write_report_csv(std::ostream& out, const ReportContext& ctx, std::span<const MetricReport> reports,
                      bool header) {
  if (header) out << kReportCsvHeader << '\n';
  for (const MetricReport& r : reports) out << report_csv_row(ctx, r) << '\n';
}

std::string report_json(const ReportContext& ctx, const MetricReport& r, const CandidateRoster& roster) {
  return to_json(ctx, r, roster).dump();
}

void write_report_json(std::ostream& out, const ReportContext& ctx, std::span<const MetricReport> reports,
                       const CandidateRoster& roster) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const MetricReport& r : reports) arr.push_back(to_json(ctx, r, roster));
  out << arr.dump(2) << '\n';
}

}  // namespace sigmavote
