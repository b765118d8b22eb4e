#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sigmavote/ballots.hpp"
#include "sigmavote/rational.hpp"

namespace sigmavote {

/// A named, deterministic map from profiles to complete rankings.
class VotingRule {
 public:
  using Function = std::function<Ranking(const Profile&)>;

  VotingRule(std::string name, Function evaluate, std::string tiebreak = "canonical_order");

  const std::string& name() const noexcept { return name_; }
  const std::string& tiebreak() const noexcept { return tiebreak_; }
  Ranking operator()(const Profile& p) const { return evaluate_(p); }

 private:
  std::string name_;
  Function evaluate_;
  std::string tiebreak_;
};

/// Positional points (s_1, s_2, ...). Positions past the end score 0, so
/// approval vectors stay short and are padded implicitly to the roster size.
struct ScoreVector {
  std::vector<Rational> points;

  const Rational& at(std::size_t position) const;

  static ScoreVector borda(std::size_t m);
  static ScoreVector approval(std::size_t k);
  static ScoreVector plurality() { return approval(1); }
};

/// Per-candidate totals, indexed by canonical position. Unranked candidates
/// receive nothing from a ballot.
std::vector<Rational> candidate_scores(const ScoreVector& sv, const Profile& p);

/// Orders the roster by descending score, ties by canonical order.
Ranking rank_by_score(const CandidateRoster& roster, const std::vector<Rational>& scores);

Ranking scoring_rule(const ScoreVector& sv, const Profile& p);
/// Borda with (m, m-1, ..., 1) where m is the roster size of `p`.
Ranking borda(const Profile& p);
Ranking three_approval(const Profile& p);
Ranking two_approval(const Profile& p);
Ranking plurality(const Profile& p);

struct StvConfig {
  int seats = 1;
  /// Overrides the Droop quota n / (seats + 1) when set.
  std::optional<Rational> quota;
};

struct StvEvent {
  enum class Kind { elected, eliminated };
  Kind kind;
  Candidate candidate;
  /// First-place support at the moment of the event.
  Rational support;
  /// Weight multiplier applied to transferred ballots (1 for eliminations).
  Rational transfer_value;
};

struct StvResult {
  Ranking ranking;
  Rational quota;
  std::vector<StvEvent> events;
  std::vector<Candidate> elected;
};

/// Single transferable vote reported as a ranking.
///
/// Each round elects the single candidate with the most support strictly above
/// the quota (ties to the earliest in canonical order), multiplying the weight
/// of their ballots by (support - quota) / support before passing them on. If
/// nobody clears the quota the least-supported candidate is eliminated (ties
/// eliminate the latest in canonical order) and ballots move at full weight.
/// Once the continuing candidates fit in the open seats they are all elected by
/// support. Ballots with no continuing choice are exhausted.
///
/// Ranking: elected in order of election, then unelected continuing candidates
/// by final support, then eliminated candidates, the first eliminated last.
///
/// Throws ConfigError when seats < 1 or seats exceeds the roster size.
StvResult run_stv(const StvConfig& cfg, const Profile& p);
Ranking stv(const StvConfig& cfg, const Profile& p);

/// The ballot of voter `voter` (0-based over the expanded multiset), with any
/// unlisted candidates appended in canonical order.
Ranking dictatorship(std::size_t voter, const Profile& p);

VotingRule make_scoring_rule(std::string name, std::function<ScoreVector(std::size_t m)> vector_for_m);
VotingRule make_borda_rule();
VotingRule make_three_approval_rule();
VotingRule make_two_approval_rule();
VotingRule make_plurality_rule();
VotingRule make_stv_rule(int seats, std::string name = {});
VotingRule make_dictatorship_rule(std::size_t voter);
/// Evaluates `rule` and reverses its output.
VotingRule reversal_of(const VotingRule& rule);

}  // namespace sigmavote
