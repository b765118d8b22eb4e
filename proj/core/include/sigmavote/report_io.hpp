#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "sigmavote/ballots.hpp"
#include "sigmavote/metrics.hpp"

namespace sigmavote {

/// Everything needed to place a MetricReport in a corpus-wide table.
struct ReportContext {
  std::string election_id;
  Rational n;
  std::size_t m = 0;
  std::optional<int> seats;
};

ReportContext context_of(const std::string& election_id, const Profile& p, std::optional<int> seats);

inline constexpr const char* kReportCsvHeader = "election_id,rule,sigma_iia,sigma_u,m_value,n,m,seats";

/// One CSV row without the trailing newline. Metric values use 12 significant
/// digits; n is written exactly; an unknown seat count is an empty cell.
std::string report_csv_row(const ReportContext& ctx, const MetricReport& r);
void write_report_csv(std::ostream& out, const ReportContext& ctx, std::span<const MetricReport> reports,
                      bool header = true);

/// JSON object for one report: decimals for the metrics, exact rationals
/// alongside, the output ranking by name and the per-candidate swap map.
std::string report_json(const ReportContext& ctx, const MetricReport& r, const CandidateRoster& roster);
/// A JSON array of report objects, pretty-printed.
void write_report_json(std::ostream& out, const ReportContext& ctx, std::span<const MetricReport> reports,
                       const CandidateRoster& roster);

}  // namespace sigmavote
