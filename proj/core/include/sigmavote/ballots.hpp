#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sigmavote/rational.hpp"

namespace sigmavote {

/// Stable candidate identifier. Ids are assigned in file/header order when a
/// roster is created and survive condensation, so rankings computed on a
/// condensed profile can be compared directly with rankings on the original.
struct Candidate {
  std::uint32_t id = 0;
  auto operator<=>(const Candidate&) const = default;
};

/// Ordered list of distinct candidates. The list order is the canonical order
/// used for every deterministic tie-break in the library.
///
/// Names may not contain ',', '>' or line breaks, because the canonical CSV
/// format uses those as separators.
class CandidateRoster {
 public:
  CandidateRoster() = default;
  explicit CandidateRoster(std::vector<std::string> names);

  std::size_t size() const noexcept { return order_.size(); }
  bool empty() const noexcept { return order_.empty(); }

  /// Candidates in canonical order.
  std::span<const Candidate> candidates() const noexcept { return order_; }
  Candidate at(std::size_t position) const { return order_.at(position); }

  bool contains(Candidate c) const noexcept;
  /// Index of `c` in canonical order. Throws RosterError for non-members.
  std::size_t position(Candidate c) const;

  const std::string& name(Candidate c) const;
  std::optional<Candidate> find(std::string_view name) const;
  std::vector<std::string> names() const;

  /// Upper bound on candidate ids; handy for id-indexed scratch arrays.
  std::size_t id_bound() const noexcept { return universe_ ? universe_->size() : 0; }

  /// Roster with `c` removed, canonical order of the rest preserved.
  CandidateRoster without(Candidate c) const;

  /// Rosters are equal when they list the same names in the same order.
  friend bool operator==(const CandidateRoster& a, const CandidateRoster& b);

 private:
  std::shared_ptr<const std::vector<std::string>> universe_;
  std::vector<Candidate> order_;
  std::vector<std::int32_t> position_;  // by id, -1 when absent
};

/// Complete, tie-free ordering; the output type of every voting rule.
class Ranking {
 public:
  Ranking() = default;
  /// Throws ArgumentError if a candidate repeats.
  explicit Ranking(std::vector<Candidate> order);

  /// Checks that `order` is a permutation of `roster`.
  static Ranking over(const CandidateRoster& roster, std::vector<Candidate> order);

  std::span<const Candidate> order() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }
  Candidate operator[](std::size_t i) const { return order_[i]; }

  bool contains(Candidate c) const noexcept;
  std::size_t index_of(Candidate c) const;
  /// True when `a` is placed above `b`.
  bool prefers(Candidate a, Candidate b) const;

  Ranking reversed() const;
  Ranking without(Candidate c) const;

  bool operator==(const Ranking&) const = default;

 private:
  std::vector<Candidate> order_;
};

/// `r` with `c` removed; relative order of the others preserved.
Ranking condense_ranking(const Ranking& r, Candidate c);

/// Candidate names of `r`, top first.
std::vector<std::string> ranking_names(const Ranking& r, const CandidateRoster& roster);

/// Partial ranking with a multiplicity. Unlisted candidates are mutually
/// unranked and below every listed candidate.
struct Ballot {
  std::vector<Candidate> ranking;
  Rational weight{1};

  bool operator==(const Ballot&) const = default;
};

/// Multiset of ballots over a fixed roster. Immutable once built.
///
/// Ballot order is kept exactly as given (no merging, no sorting) so that voter
/// indices stay meaningful across condensation. Use `compressed()` to merge
/// identical rankings when order does not matter.
class Profile {
 public:
  /// Validates every ballot against the roster. Throws RosterError for unknown
  /// candidates, BallotError for repeats, ValueError for negative weights or a
  /// total weight of zero.
  Profile(CandidateRoster roster, std::vector<Ballot> ballots);

  const CandidateRoster& roster() const noexcept { return roster_; }
  std::span<const Ballot> ballots() const noexcept { return ballots_; }
  /// Total voter count (sum of weights).
  const Rational& n() const noexcept { return n_; }
  std::size_t m() const noexcept { return roster_.size(); }

  /// The profile with `c` disqualified. Empty ballots are kept with their weight.
  Profile condense(Candidate c) const;

  /// Identical rankings merged, in order of first occurrence; zero weights dropped.
  Profile compressed() const;

  /// Index of the ballot that voter `voter` (0-based over the expanded
  /// multiset, in ballot order) cast. Throws ArgumentError when out of range.
  std::size_t ballot_of_voter(const Rational& voter) const;

 private:
  Profile(CandidateRoster roster, std::vector<Ballot> ballots, Rational n);

  CandidateRoster roster_;
  std::vector<Ballot> ballots_;
  Rational n_;
};

Profile condense_profile(const Profile& p, Candidate c);

/// Multiset equality on (ranking, weight) after merging identical rankings,
/// with rosters compared by name.
bool same_ballot_multiset(const Profile& a, const Profile& b);

}  // namespace sigmavote
