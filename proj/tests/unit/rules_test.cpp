#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "generators.hpp"
#include "sigmavote/errors.hpp"
#include "sigmavote/rules.hpp"

using namespace sigmavote;
using sigmavote::testing::profile_of;
using sigmavote::testing::ranking_of;

namespace {

std::vector<VotingRule> anonymous_rules() {
  return {make_borda_rule(), make_three_approval_rule(), make_two_approval_rule(), make_plurality_rule(),
          make_stv_rule(1), make_stv_rule(2)};
}

// Instant runoff on individual voters, written independently of the pile-based
// count: per-voter weights, one pass per round.
Ranking reference_irv(const Profile& p) {
  const auto& roster = p.roster();
  struct Voter {
    std::vector<Candidate> prefs;
    Rational weight;
  };
  std::vector<Voter> voters;
  for (const Ballot& b : p.ballots()) voters.push_back({b.ranking, b.weight});
  std::vector<Candidate> alive(roster.candidates().begin(), roster.candidates().end());
  std::vector<Candidate> out_order;
  const Rational quota = p.n() / 2;

  auto top = [&](const Voter& v) -> std::optional<Candidate> {
    for (Candidate c : v.prefs) {
      if (std::find(alive.begin(), alive.end(), c) != alive.end()) return c;
    }
    return std::nullopt;
  };
  auto tally = [&] {
    std::vector<Rational> s(alive.size(), Rational(0));
    for (const Voter& v : voters) {
      if (auto c = top(v)) s[std::find(alive.begin(), alive.end(), *c) - alive.begin()] += v.weight;
    }
    return s;
  };
  auto ordered_alive = [&](const std::vector<Rational>& s) {
    std::vector<std::size_t> idx(alive.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) {
      if (s[a] != s[b]) return s[a] > s[b];
      return roster.position(alive[a]) < roster.position(alive[b]);
    });
    std::vector<Candidate> res;
    for (auto i : idx) res.push_back(alive[i]);
    return res;
  };

  std::vector<Candidate> eliminated;
  for (;;) {
    auto s = tally();
    if (alive.size() == 1) {
      out_order.push_back(alive.front());
      alive.clear();
      break;
    }
    auto best = std::max_element(s.begin(), s.end()) - s.begin();
    // earliest canonical among equal maxima
    for (std::size_t i = 0; i < alive.size(); ++i) {
      if (s[i] == s[best] && roster.position(alive[i]) < roster.position(alive[best])) best = i;
    }
    if (s[best] > quota) {
      const Candidate w = alive[best];
      const Rational factor = (s[best] - quota) / s[best];
      for (Voter& v : voters) {
        if (top(v) == w) v.weight *= factor;
      }
      alive.erase(alive.begin() + best);
      out_order.push_back(w);
      break;
    }
    std::size_t worst = 0;
    for (std::size_t i = 0; i < alive.size(); ++i) {
      if (s[i] < s[worst] || (s[i] == s[worst] && roster.position(alive[i]) > roster.position(alive[worst]))) {
        worst = i;
      }
    }
    eliminated.push_back(alive[worst]);
    alive.erase(alive.begin() + worst);
  }
  if (!alive.empty()) {
    for (Candidate c : ordered_alive(tally())) out_order.push_back(c);
  }
  out_order.insert(out_order.end(), eliminated.rbegin(), eliminated.rend());
  return Ranking(out_order);
}

}  // namespace

TEST(ScoringRules, Borda) {
  Profile p = profile_of(3, {{5, "ABC"}});
  EXPECT_EQ(borda(p), ranking_of(p.roster(), "ABC"));
}

TEST(ScoringRules, PluralityTieUsesCanonicalOrder) {
  Profile p = profile_of(3, {{3, "ABC"}, {2, "BCA"}, {2, "CBA"}});
  EXPECT_EQ(plurality(p), ranking_of(p.roster(), "ABC"));
  auto scores = candidate_scores(ScoreVector::plurality(), p);
  EXPECT_EQ(scores, (std::vector<Rational>{3, 2, 2}));
}

TEST(ScoringRules, UnrankedGetNothing) {
  Profile p = profile_of(4, {{1, "D"}, {1, "CB"}});
  auto scores = candidate_scores(ScoreVector::borda(4), p);
  EXPECT_EQ(scores, (std::vector<Rational>{0, 3, 4, 4}));
  EXPECT_EQ(borda(p), ranking_of(p.roster(), "CDBA"));
}

TEST(ScoringRules, ApprovalCountsTopK) {
  Profile p = profile_of(4, {{1, "ABCD"}, {1, "DCBA"}, {1, "B"}});
  EXPECT_EQ(candidate_scores(ScoreVector::approval(2), p), (std::vector<Rational>{1, 2, 1, 1}));
  EXPECT_EQ(candidate_scores(ScoreVector::approval(3), p), (std::vector<Rational>{1, 3, 2, 1}));
}

TEST(ScoringRules, PluralityIsFirstPositionVector) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    Profile p = sigmavote::testing::random_profile(rng, {5, 9, true, false});
    ScoreVector one{{Rational(1), Rational(0), Rational(0), Rational(0), Rational(0)}};
    EXPECT_EQ(plurality(p), scoring_rule(one, p));
    EXPECT_EQ(plurality(p), scoring_rule(ScoreVector::approval(1), p));
  }
}

TEST(RuleProperty, Anonymity) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    Profile p = sigmavote::testing::random_profile(rng, {5, 12, true, true});
    std::vector<Ballot> shuffled(p.ballots().begin(), p.ballots().end());
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    Profile q(p.roster(), shuffled);
    for (const auto& rule : anonymous_rules()) EXPECT_EQ(rule(p), rule(q)) << rule.name();
  }
}

TEST(RuleProperty, NeutralUnderRenaming) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    Profile p = sigmavote::testing::random_profile(rng, {4, 10, true, false});
    std::vector<std::string> renamed = {"w", "x", "y", "z"};
    std::shuffle(renamed.begin(), renamed.end(), rng);
    CandidateRoster r2(renamed);
    std::vector<Ballot> ballots;
    for (const Ballot& b : p.ballots()) {
      Ballot nb{{}, b.weight};
      for (Candidate c : b.ranking) nb.ranking.push_back(r2.at(p.roster().position(c)));
      ballots.push_back(nb);
    }
    Profile q(r2, ballots);
    for (const auto& rule : anonymous_rules()) {
      const Ranking a = rule(p);
      const Ranking b = rule(q);
      for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(p.roster().position(a[i]), r2.position(b[i])) << rule.name();
      }
    }
  }
}

TEST(Stv, MajorityWinner) {
  Profile p = profile_of(3, {{6, "A"}, {3, "B"}, {1, "C"}});
  StvResult r = run_stv({1, std::nullopt}, p);
  EXPECT_EQ(r.quota, 5);
  EXPECT_EQ(r.ranking, ranking_of(p.roster(), "ABC"));
  ASSERT_EQ(r.events.size(), 1u);
  EXPECT_EQ(r.events[0].transfer_value, Rational(1, 6));
}

TEST(Stv, GoldenTwoSeatTrace) {
  Profile p = profile_of(3, {{4, "AB"}, {3, "C"}, {2, "B"}});
  StvResult r = run_stv({2, std::nullopt}, p);
  EXPECT_EQ(r.quota, 3);
  EXPECT_EQ(r.ranking, ranking_of(p.roster(), "ABC"));
  ASSERT_EQ(r.events.size(), 3u);
  EXPECT_EQ(r.events[0].kind, StvEvent::Kind::elected);
  EXPECT_EQ(r.events[0].transfer_value, Rational(1, 4));
  // B holds 2 + 4 * 1/4 = 3, level with C and not above quota; C goes on the tie
  EXPECT_EQ(r.events[1].kind, StvEvent::Kind::eliminated);
  EXPECT_EQ(r.events[1].candidate, p.roster().at(2));
  EXPECT_EQ(r.events[1].support, 3);
  EXPECT_EQ(r.events[2].kind, StvEvent::Kind::elected);
  EXPECT_EQ(r.events[2].candidate, p.roster().at(1));
}

TEST(Stv, ExhaustedBallotsAndEliminationOrder) {
  Profile p = profile_of(4, {{5, "A"}, {4, "B"}, {2, "C"}, {1, "DC"}});
  // quota 6: nobody clears it; D (1) goes, its vote moves to C (3); C goes; B and A remain for one seat
  StvResult r = run_stv({1, std::nullopt}, p);
  EXPECT_EQ(r.ranking, ranking_of(p.roster(), "ABCD"));
}

TEST(Stv, SeatRange) {
  Profile p = profile_of(3, {{1, "ABC"}});
  EXPECT_THROW(run_stv({0, std::nullopt}, p), ConfigError);
  EXPECT_THROW(run_stv({4, std::nullopt}, p), ConfigError);
  EXPECT_NO_THROW(run_stv({3, std::nullopt}, p));
}

TEST(Stv, SingleSeatMatchesReferenceRunoff) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 300; ++trial) {
    Profile p = sigmavote::testing::random_profile(rng, {static_cast<std::size_t>(3 + trial % 4),
                                                         static_cast<std::size_t>(5 + trial % 13), false, true});
    EXPECT_EQ(stv({1, std::nullopt}, p), reference_irv(p)) << "trial " << trial;
  }
}

TEST(Stv, EmptyBallotsRaiseQuotaOnly) {
  Profile p = profile_of(2, {{3, "A"}, {2, "B"}, {5, ""}});
  StvResult r = run_stv({1, std::nullopt}, p);
  EXPECT_EQ(r.quota, 5);
  EXPECT_EQ(r.ranking, ranking_of(p.roster(), "AB"));
}

TEST(Dictatorship, ReturnsBallotAndCompletes) {
  Profile p = profile_of(3, {{1, "CAB"}, {1, "C"}});
  EXPECT_EQ(dictatorship(0, p), ranking_of(p.roster(), "CAB"));
  EXPECT_EQ(dictatorship(1, p), ranking_of(p.roster(), "CAB"));
  EXPECT_EQ(make_dictatorship_rule(1).name(), "dictator:i=1");
}

TEST(Reversal, ReversesOutput) {
  Profile p = profile_of(3, {{1, "ABC"}});
  VotingRule rev = reversal_of(make_borda_rule());
  EXPECT_EQ(rev(p), ranking_of(p.roster(), "CBA"));
  EXPECT_EQ(rev.name(), "reverse(borda)");
}
