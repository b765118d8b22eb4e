#include "sigmavote/metrics.hpp"

#include <algorithm>

#include "sigmavote/errors.hpp"

namespace sigmavote {

std::uint64_t swap_distance(const Ranking& r1, const Ranking& r2) {
  if (r1.size() != r2.size()) throw ArgumentError("rankings have different lengths");
  const auto o1 = r1.order();
  std::uint32_t bound = 0;
  for (Candidate c : o1) bound = std::max(bound, c.id + 1);
  for (Candidate c : r2.order()) bound = std::max(bound, c.id + 1);
  std::vector<std::int64_t> pos2(bound, -1);
  for (std::size_t i = 0; i < r2.size(); ++i) pos2[r2[i].id] = static_cast<std::int64_t>(i);
  std::vector<std::int64_t> mapped;
  mapped.reserve(o1.size());
  for (Candidate c : o1) {
    if (pos2[c.id] < 0) throw ArgumentError("rankings are over different candidate sets");
    mapped.push_back(pos2[c.id]);
  }
  std::uint64_t inversions = 0;
  for (std::size_t i = 0; i < mapped.size(); ++i) {
    for (std::size_t j = i + 1; j < mapped.size(); ++j) {
      if (mapped[i] > mapped[j]) ++inversions;
    }
  }
  return inversions;
}

IiaResult sigma_iia(const VotingRule& rule, const Profile& p) { return sigma_iia(rule, p, rule(p)); }

IiaResult sigma_iia(const VotingRule& rule, const Profile& p, const Ranking& full) {
  IiaResult result{Rational(1), {}};
  const std::size_t m = p.m();
  if (m < 2) return result;
  std::uint64_t total = 0;
  for (Candidate c : p.roster().candidates()) {
    const Ranking condensed_outcome = rule(p.condense(c));
    const std::uint64_t d = swap_distance(condensed_outcome, condense_ranking(full, c));
    result.per_candidate_swaps.emplace_back(c, d);
    total += d;
  }
  if (m <= 2) return result;
  const std::uint64_t pairs_left = (m - 1) * (m - 2) / 2;
  result.value = Rational(1) - Rational(static_cast<long>(total), static_cast<long>(m * pairs_left));
  return result;
}

Rational sigma_u_from_misalignment(const Rational& m_value) {
  if (m_value >= Rational(1, 2)) return Rational(1);
  return m_value / (Rational(1) - m_value);
}

UResult sigma_u_of_ranking(const PairwiseTally& tally, const Ranking& out) {
  Rational m_value = misalignment(tally, out);
  return {sigma_u_from_misalignment(m_value), m_value};
}

UResult sigma_u(const VotingRule& rule, const Profile& p) {
  return sigma_u_of_ranking(PairwiseTally(p), rule(p));
}

MetricReport evaluate(const VotingRule& rule, const Profile& p, const PairwiseTally& tally) {
  MetricReport report;
  report.rule_name = rule.name();
  report.ranking = rule(p);
  auto iia = sigma_iia(rule, p, report.ranking);
  report.sigma_iia = iia.value;
  report.per_candidate_swaps = std::move(iia.per_candidate_swaps);
  if (p.m() >= 2) {
    auto u = sigma_u_of_ranking(tally, report.ranking);
    report.sigma_u = u.value;
    report.m_value = u.misalignment;
  } else {
    report.sigma_u = 1;
    report.m_value = 1;
  }
  return report;
}

std::vector<MetricReport> evaluate_all(std::span<const VotingRule> rules, const Profile& p) {
  std::vector<MetricReport> reports;
  if (rules.empty()) return reports;
  const PairwiseTally tally(p);
  reports.reserve(rules.size());
  for (const VotingRule& rule : rules) {
    try {
      reports.push_back(evaluate(rule, p, tally));
    } catch (const RuleError&) {
      throw;
    } catch (const std::exception& e) {
      throw RuleError(rule.name(), e.what());
    }
  }
  std::stable_sort(reports.begin(), reports.end(),
                   [](const MetricReport& a, const MetricReport& b) { return a.rule_name < b.rule_name; });
  return reports;
}

}  // namespace sigmavote
