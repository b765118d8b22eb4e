#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sigmavote/ballots.hpp"
#include "sigmavote/pairwise.hpp"
#include "sigmavote/rational.hpp"
#include "sigmavote/rules.hpp"

namespace sigmavote {

/// Pairs whose majority edge points against a ranking.
struct DisagreementSet {
  /// Oriented (winner, loser) as the graph has them; the ranking puts loser first.
  std::vector<std::pair<Candidate, Candidate>> pairs;
  std::optional<Rational> max_margin;

  bool empty() const noexcept { return pairs.empty(); }
};

DisagreementSet disagreement_set(const PairwiseGraph& g, const Ranking& r);

/// h(x) = 1/2 - x/(2n) maps a disagreeing margin to the alignment of that
/// pair; g(x) = x/(1-x) is the sigma_U transform.
struct MarginTransform {
  Rational n;

  Rational h(const Rational& x) const { return Rational(1, 2) - x / (2 * n); }
  static Rational g(const Rational& x) { return x / (Rational(1) - x); }
  Rational sigma(const Rational& margin) const { return g(h(margin)); }
};

/// sigma_U from the graph alone: 1 without disagreements, otherwise
/// g(h(max disagreeing margin)). Agrees with the definition for partial
/// ballots as well, since ||X_{B,A}||_1 = (n - delta_{A,B}) / 2 always holds.
Rational sigma_u_via_margins(const PairwiseGraph& g, const Ranking& r);

struct OptimalUTrace {
  Ranking ranking;
  /// Edge weight removed in each round, in order.
  std::vector<Rational> removed_weights;
  std::size_t edges_removed = 0;
};

/// Repeatedly deletes every minimum-weight edge of the majority graph until it
/// admits a topological sort, then returns the canonical sort.
Ranking optimal_u_rule(const Profile& p);
OptimalUTrace optimal_u_trace(const Profile& p);

struct BruteForceResult {
  Ranking ranking;
  Rational value;
};

inline constexpr std::size_t kBruteForceMaxCandidates = 8;

/// Exhaustive search over all m! rankings in lexicographic canonical order;
/// the first ranking reaching the maximum sigma_U wins. Throws ConfigError
/// above kBruteForceMaxCandidates.
BruteForceResult brute_force_optimal(const Profile& p);

/// Registered as "optimal-u".
VotingRule make_optimal_u_rule();

}  // namespace sigmavote
