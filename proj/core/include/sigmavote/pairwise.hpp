#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "sigmavote/ballots.hpp"
#include "sigmavote/rational.hpp"

namespace sigmavote {

/// How one ballot orders an (a, b) pair. The numeric value in half-units is
/// the entry of the relative ranking vector: 2 -> 1, 1 -> 1/2, 0 -> 0.
enum class PairRelation : std::uint8_t { below = 0, unranked = 1, above = 2 };

/// Per-ballot entries of X_{a,b}. Weighted profiles store one entry per
/// ballot group instead of one per voter.
struct RelativeRankingVector {
  struct Entry {
    PairRelation relation;
    Rational weight;
  };

  Candidate a;
  Candidate b;
  std::vector<Entry> entries;

  static Rational value(PairRelation r);
  /// Weighted sum of entries, i.e. the l1 norm of the per-voter vector.
  Rational l1_norm() const;
};

PairRelation pair_relation(const Ballot& ballot, Candidate a, Candidate b);

/// Throws ArgumentError when a == b or either is outside the roster.
RelativeRankingVector relative_vector(const Profile& p, Candidate a, Candidate b);

/// ||X_{a,b}||_1 for every ordered pair, computed in one pass over the ballots.
class PairwiseTally {
 public:
  explicit PairwiseTally(const Profile& p);

  const CandidateRoster& roster() const noexcept { return roster_; }
  const Rational& n() const noexcept { return n_; }
  /// Weighted count of voters placing a above b, plus half of those ranking neither.
  const Rational& support(Candidate a, Candidate b) const;
  /// support(a, b) - support(b, a).
  Rational margin(Candidate a, Candidate b) const;

 private:
  CandidateRoster roster_;
  Rational n_;
  std::vector<Rational> support_;  // m x m by canonical position
};

/// Share of voters ordering (a, b) the way `out` does; ties count half.
Rational alignment(const PairwiseTally& tally, const Ranking& out, Candidate a, Candidate b);
Rational alignment(const Profile& p, const Ranking& out, Candidate a, Candidate b);

/// Worst alignment over all unordered pairs (raw M, no 1/2 cap). Requires m >= 2.
Rational misalignment(const PairwiseTally& tally, const Ranking& out);
Rational misalignment(const Profile& p, const Ranking& out);

struct Edge {
  Candidate from;
  Candidate to;
  Rational weight;
};

/// Majority-margin graph. An edge points from the pairwise winner to the loser
/// with weight |margin|; pairs with margin 0 have no edge. Edges can be deleted
/// (the optimizer does), but margins always report the profile's values.
class PairwiseGraph {
 public:
  explicit PairwiseGraph(const PairwiseTally& tally);

  const CandidateRoster& roster() const noexcept { return roster_; }
  const Rational& n() const noexcept { return n_; }

  /// Signed margin delta_{a,b}; antisymmetric.
  Rational margin(Candidate a, Candidate b) const;
  bool has_edge(Candidate from, Candidate to) const;
  std::size_t edge_count() const noexcept { return edge_count_; }
  /// Present edges, ordered by (from, to) canonical position.
  std::vector<Edge> edges() const;
  std::optional<Rational> min_edge_weight() const;
  /// Deletes every present edge whose weight equals `w`; returns how many.
  std::size_t remove_edges_with_weight(const Rational& w);

 private:
  std::size_t index(Candidate a, Candidate b) const;

  CandidateRoster roster_;
  Rational n_;
  std::vector<Rational> margin_;  // m x m by canonical position
  std::vector<char> present_;
  std::size_t edge_count_ = 0;
};

PairwiseGraph build_pwcg(const Profile& p);

/// Kahn's algorithm; among available candidates the one earliest in canonical
/// order goes next. Returns nullopt iff the present edges contain a cycle.
std::optional<Ranking> topological_sort(const PairwiseGraph& g);

/// `from,to,weight` CSV with candidate names and exact weights.
void write_edge_list(std::ostream& out, const PairwiseGraph& g);

}  // namespace sigmavote
