#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sigmavote/ballots.hpp"
#include "sigmavote/pairwise.hpp"
#include "sigmavote/rational.hpp"
#include "sigmavote/rules.hpp"

namespace sigmavote {

/// Kendall tau distance: the number of pairs the two rankings order
/// differently. Throws ArgumentError if they rank different candidate sets.
std::uint64_t swap_distance(const Ranking& r1, const Ranking& r2);

struct IiaResult {
  Rational value;
  /// d_swap(f(P^C), f(P)^C) for every C, in canonical order.
  std::vector<std::pair<Candidate, std::uint64_t>> per_candidate_swaps;
};

/// Stability under single-candidate removal:
///   1 - sum_C d_swap(f(P^C), f(P)^C) / (m * C(m-1, 2)).
/// Profiles with m <= 2 score 1 (the normalizer vanishes and every condensed
/// ranking has at most one candidate).
IiaResult sigma_iia(const VotingRule& rule, const Profile& p);
/// Same, reusing an already computed f(P).
IiaResult sigma_iia(const VotingRule& rule, const Profile& p, const Ranking& full);

/// 1 when M >= 1/2, otherwise M / (1 - M).
Rational sigma_u_from_misalignment(const Rational& m_value);

struct UResult {
  Rational value;
  Rational misalignment;
};

/// Majoritarian alignment of a given outcome; needs only P and f(P).
UResult sigma_u_of_ranking(const PairwiseTally& tally, const Ranking& out);
UResult sigma_u(const VotingRule& rule, const Profile& p);

struct MetricReport {
  std::string rule_name;
  Ranking ranking;
  Rational sigma_iia;
  Rational sigma_u;
  Rational m_value;
  std::vector<std::pair<Candidate, std::uint64_t>> per_candidate_swaps;
};

MetricReport evaluate(const VotingRule& rule, const Profile& p, const PairwiseTally& tally);

/// One report per rule, sorted by rule name. Rule failures are rethrown as
/// RuleError naming the rule.
std::vector<MetricReport> evaluate_all(std::span<const VotingRule> rules, const Profile& p);

}  // namespace sigmavote
