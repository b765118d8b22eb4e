#include "sigmavote/stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

#include "sigmavote/errors.hpp"
#include "sigmavote/metrics.hpp"
#include "sigmavote/synth.hpp"

namespace sigmavote {

std::string_view metric_name(Metric metric) { return metric == Metric::sigma_iia ? "sigma_iia" : "sigma_u"; }

Metric parse_metric(std::string_view name) {
  if (name == "sigma_iia") return Metric::sigma_iia;
  if (name == "sigma_u") return Metric::sigma_u;
  throw ConfigError("unknown metric '" + std::string(name) + "'");
}

Rational metric_value(Metric metric, const VotingRule& rule, const Profile& p) {
  if (metric == Metric::sigma_iia) return sigma_iia(rule, p).value;
  if (p.m() < 2) return Rational(1);
  return sigma_u(rule, p).value;
}

void BootstrapConfig::validate() const {
  if (resamples < 1) throw ConfigError("bootstrap needs at least one resample");
  if (!(confidence > 0 && confidence < 1)) throw ConfigError("confidence must lie strictly between 0 and 1");
}

Profile resample_voters(const Profile& p, std::mt19937_64& rng) {
  const auto ballots = p.ballots();
  std::vector<std::uint64_t> cumulative;
  cumulative.reserve(ballots.size());
  std::uint64_t total = 0;
  for (const Ballot& b : ballots) {
    if (!is_integer(b.weight)) throw ValueError("voter resampling needs integer ballot weights");
    total += static_cast<std::uint64_t>(numerator(b.weight).convert_to<unsigned long long>());
    cumulative.push_back(total);
  }
  std::vector<std::uint64_t> counts(ballots.size(), 0);
  std::uniform_int_distribution<std::uint64_t> voter(0, total - 1);
  for (std::uint64_t i = 0; i < total; ++i) {
    const std::uint64_t v = voter(rng);
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), v);
    ++counts[static_cast<std::size_t>(it - cumulative.begin())];
  }
  std::vector<Ballot> drawn;
  for (std::size_t i = 0; i < ballots.size(); ++i) {
    if (counts[i] > 0) drawn.push_back({ballots[i].ranking, Rational(static_cast<unsigned long long>(counts[i]))});
  }
  return Profile(p.roster(), std::move(drawn));
}

Rational nearest_rank_percentile(std::span<const Rational> sorted, double q) {
  if (sorted.empty()) throw ArgumentError("percentile of an empty sample");
  const double n = static_cast<double>(sorted.size());
  auto rank = static_cast<std::size_t>(std::ceil(q * n - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

IntervalEstimate bootstrap_metric(const Profile& p, const VotingRule& rule, Metric metric,
                                  const BootstrapConfig& cfg, unsigned jobs) {
  cfg.validate();
  IntervalEstimate est;
  est.metric = metric;
  est.rule = rule.name();
  est.point = metric_value(metric, rule, p);
  est.resamples = cfg.resamples;
  est.confidence = cfg.confidence;

  std::vector<Rational> values(cfg.resamples);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t b = next++; b < cfg.resamples; b = next++) {
      try {
        auto rng = make_stream(cfg.seed, b);
        values[b] = metric_value(metric, rule, resample_voters(p, rng));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cfg.resamples)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  Rational sum = 0;
  for (const Rational& v : values) sum += v;
  est.mean = sum / static_cast<long>(values.size());
  std::sort(values.begin(), values.end());
  est.median = nearest_rank_percentile(values, 0.5);
  est.lo = nearest_rank_percentile(values, (1 - cfg.confidence) / 2);
  est.hi = nearest_rank_percentile(values, (1 + cfg.confidence) / 2);
  return est;
}

std::string bootstrap_csv_row(const std::string& election_id, const IntervalEstimate& e) {
  char confidence[32];
  std::snprintf(confidence, sizeof confidence, "%.12g", e.confidence);
  std::string row = election_id;
  row += ',' + e.rule;
  row += ',' + std::string(metric_name(e.metric));
  row += ',' + to_decimal(e.mean);
  row += ',' + to_decimal(e.lo);
  row += ',' + to_decimal(e.hi);
  row += ',' + std::to_string(e.resamples);
  row += ',' + std::string(confidence);
  return row;
}

std::vector<GroupField> parse_group_fields(std::string_view list) {
  std::vector<GroupField> fields;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const std::string_view item = list.substr(0, comma);
    if (item == "rule") {
      fields.push_back(GroupField::rule);
    } else if (item == "candidates") {
      fields.push_back(GroupField::candidates);
    } else if (item == "seats") {
      fields.push_back(GroupField::seats);
    } else if (!item.empty()) {
      throw ConfigError("unknown group field '" + std::string(item) + "'");
    }
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return fields;
}

namespace {

double type7_quantile(const std::vector<double>& sorted, double q) {
  const double h = (static_cast<double>(sorted.size()) - 1) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

bool has(std::span<const GroupField> fields, GroupField f) {
  return std::find(fields.begin(), fields.end(), f) != fields.end();
}

GroupKey key_for(std::span<const GroupField> fields, const std::string& rule, std::size_t candidates,
                 std::optional<int> seats) {
  GroupKey key;
  if (has(fields, GroupField::rule)) key.rule = rule;
  if (has(fields, GroupField::candidates)) key.candidates = candidates;
  if (has(fields, GroupField::seats)) key.seats = seats.value_or(-1);
  return key;
}

void write_key(std::ostream& out, std::span<const GroupField> fields, const GroupKey& key) {
  for (GroupField f : fields) {
    switch (f) {
      case GroupField::rule:
        out << key.rule;
        break;
      case GroupField::candidates:
        out << key.candidates;
        break;
      case GroupField::seats:
        if (key.seats >= 0) out << key.seats;
        break;
    }
    out << ',';
  }
}

void write_key_header(std::ostream& out, std::span<const GroupField> fields) {
  for (GroupField f : fields) {
    out << (f == GroupField::rule ? "rule" : f == GroupField::candidates ? "candidates" : "seats") << ',';
  }
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

SummaryStats summarize(std::vector<double> values) {
  SummaryStats s;
  s.count = values.size();
  if (values.empty()) return s;
  std::sort(values.begin(), values.end());
  double total = 0;
  for (double v : values) total += v;
  s.mean = total / static_cast<double>(values.size());
  s.median = type7_quantile(values, 0.5);
  s.q1 = type7_quantile(values, 0.25);
  s.q3 = type7_quantile(values, 0.75);
  s.min = values.front();
  s.max = values.back();
  return s;
}

std::vector<SummaryRow> aggregate_corpus(std::span<const CorpusRecord> records, std::span<const GroupField> fields) {
  std::map<GroupKey, std::pair<std::vector<double>, std::vector<double>>> groups;
  for (const CorpusRecord& r : records) {
    auto& [iia, u] = groups[key_for(fields, r.rule, r.candidates, r.seats)];
    iia.push_back(to_double(r.sigma_iia));
    u.push_back(to_double(r.sigma_u));
  }
  std::vector<SummaryRow> rows;
  for (auto& [key, values] : groups) {
    rows.push_back({key, Metric::sigma_iia, summarize(std::move(values.first))});
    rows.push_back({key, Metric::sigma_u, summarize(std::move(values.second))});
  }
  return rows;
}

void write_summary_csv(std::ostream& out, std::span<const GroupField> fields, std::span<const SummaryRow> rows) {
  write_key_header(out, fields);
  out << "metric,count,mean,median,q1,q3,min,max\n";
  for (const SummaryRow& row : rows) {
    write_key(out, fields, row.key);
    const SummaryStats& s = row.stats;
    out << metric_name(row.metric) << ',' << s.count << ',' << format_double(s.mean) << ','
        << format_double(s.median) << ',' << format_double(s.q1) << ',' << format_double(s.q3) << ','
        << format_double(s.min) << ',' << format_double(s.max) << '\n';
  }
}

std::vector<PooledInterval> pool_intervals(std::span<const IntervalRecord> records,
                                           std::span<const GroupField> fields) {
  std::map<std::pair<GroupKey, Metric>, PooledInterval> groups;
  for (const IntervalRecord& r : records) {
    const GroupKey key = key_for(fields, r.estimate.rule, r.candidates, r.seats);
    PooledInterval& pooled = groups[{key, r.estimate.metric}];
    pooled.key = key;
    pooled.metric = r.estimate.metric;
    ++pooled.count;
    pooled.mean += to_double(r.estimate.mean);
    pooled.lo += to_double(r.estimate.lo);
    pooled.hi += to_double(r.estimate.hi);
  }
  std::vector<PooledInterval> rows;
  for (auto& [key, pooled] : groups) {
    const auto c = static_cast<double>(pooled.count);
    pooled.mean /= c;
    pooled.lo /= c;
    pooled.hi /= c;
    rows.push_back(pooled);
  }
  return rows;
}

void write_pooled_csv(std::ostream& out, std::span<const GroupField> fields, std::span<const PooledInterval> rows) {
  write_key_header(out, fields);
  out << "metric,count,mean,lo,hi,pooling\n";
  for (const PooledInterval& row : rows) {
    write_key(out, fields, row.key);
    out << metric_name(row.metric) << ',' << row.count << ',' << format_double(row.mean) << ','
        << format_double(row.lo) << ',' << format_double(row.hi) << ",endpoint_mean\n";
  }
}

}  // namespace sigmavote
