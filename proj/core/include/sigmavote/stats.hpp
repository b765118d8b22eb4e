#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sigmavote/ballots.hpp"
#include "sigmavote/rules.hpp"

namespace sigmavote {

enum class Metric { sigma_iia, sigma_u };

std::string_view metric_name(Metric metric);
/// Accepts "sigma_iia" and "sigma_u"; throws ConfigError otherwise.
Metric parse_metric(std::string_view name);
Rational metric_value(Metric metric, const VotingRule& rule, const Profile& p);

struct BootstrapConfig {
  std::size_t resamples = 1000;
  double confidence = 0.95;
  std::uint64_t seed = 0;

  /// Throws ConfigError unless resamples >= 1 and 0 < confidence < 1.
  void validate() const;
};

/// n voters drawn with replacement from the expanded voter multiset; ballots
/// keep their original order and carry the number of times they were drawn.
/// Requires integer weights (ValueError otherwise).
Profile resample_voters(const Profile& p, std::mt19937_64& rng);

/// Nearest-rank percentile of sorted data: the ceil(q * N)-th smallest value,
/// clamped to [1, N].
Rational nearest_rank_percentile(std::span<const Rational> sorted, double q);

struct IntervalEstimate {
  Metric metric = Metric::sigma_iia;
  std::string rule;
  /// Metric on the original profile.
  Rational point;
  /// Mean and median of the bootstrap distribution.
  Rational mean;
  Rational median;
  Rational lo;
  Rational hi;
  std::size_t resamples = 0;
  double confidence = 0;
};

/// Percentile bootstrap with bounds at (1 -/+ confidence) / 2. Resample b uses
/// stream (seed, b), so the result is identical for any `jobs`.
IntervalEstimate bootstrap_metric(const Profile& p, const VotingRule& rule, Metric metric,
                                  const BootstrapConfig& cfg, unsigned jobs = 1);

inline constexpr const char* kBootstrapCsvHeader = "election_id,rule,metric,mean,lo,hi,B,confidence";
std::string bootstrap_csv_row(const std::string& election_id, const IntervalEstimate& e);

/// One (election, rule) result, the unit aggregated across a corpus.
struct CorpusRecord {
  std::string election_id;
  std::string rule;
  std::size_t candidates = 0;
  std::optional<int> seats;
  Rational sigma_iia;
  Rational sigma_u;
};

enum class GroupField { rule, candidates, seats };

/// Parses a comma list such as "rule,candidates"; throws ConfigError on
/// unknown fields.
std::vector<GroupField> parse_group_fields(std::string_view list);

struct SummaryStats {
  std::size_t count = 0;
  double mean = 0;
  double median = 0;
  /// Quartiles by linear interpolation between order statistics.
  double q1 = 0;
  double q3 = 0;
  double min = 0;
  double max = 0;
};

SummaryStats summarize(std::vector<double> values);

struct GroupKey {
  std::string rule;
  std::size_t candidates = 0;
  /// -1 when the seat count is unknown or not grouped on.
  int seats = -1;
  auto operator<=>(const GroupKey&) const = default;
};

struct SummaryRow {
  GroupKey key;
  Metric metric = Metric::sigma_iia;
  SummaryStats stats;
};

/// Per-group statistics for both metrics, ordered by group key then metric.
/// Fields not grouped on are left at their defaults in the key.
std::vector<SummaryRow> aggregate_corpus(std::span<const CorpusRecord> records, std::span<const GroupField> fields);
void write_summary_csv(std::ostream& out, std::span<const GroupField> fields, std::span<const SummaryRow> rows);

struct IntervalRecord {
  std::string election_id;
  std::size_t candidates = 0;
  std::optional<int> seats;
  IntervalEstimate estimate;
};

struct PooledInterval {
  GroupKey key;
  Metric metric = Metric::sigma_iia;
  std::size_t count = 0;
  double mean = 0;
  double lo = 0;
  double hi = 0;
};

/// Pools per-election intervals by averaging mean, lo and hi within each group
/// (bootstrap first, then pool).
std::vector<PooledInterval> pool_intervals(std::span<const IntervalRecord> records, std::span<const GroupField> fields);
void write_pooled_csv(std::ostream& out, std::span<const GroupField> fields, std::span<const PooledInterval> rows);

}  // namespace sigmavote
