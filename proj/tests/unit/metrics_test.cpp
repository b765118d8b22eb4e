#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "generators.hpp"
#include "sigmavote/errors.hpp"
#include "sigmavote/metrics.hpp"
#include "sigmavote/pairwise.hpp"
#include "sigmavote/profile_io.hpp"
#include "sigmavote/registry.hpp"

using namespace sigmavote;
using sigmavote::testing::profile_of;
using sigmavote::testing::ranking_of;

namespace {

const std::filesystem::path kFixtures = SIGMAVOTE_FIXTURE_DIR;

// Borda on the full roster, reversed Borda on any condensed roster. With a
// unanimous profile, f(P^C) is the total reversal of f(P)^C for every C.
VotingRule crafted_reversal(std::size_t full_m) {
  VotingRule rev = reversal_of(make_borda_rule());
  return VotingRule("crafted", [full_m, rev](const Profile& p) { return p.m() == full_m ? borda(p) : rev(p); });
}

}  // namespace

TEST(SwapDistance, Examples) {
  auto r = sigmavote::testing::letters(4);
  EXPECT_EQ(swap_distance(ranking_of(r, "ABCD"), ranking_of(r, "ABCD")), 0u);
  EXPECT_EQ(swap_distance(ranking_of(r, "ABCD"), ranking_of(r, "DCBA")), 6u);
  EXPECT_EQ(swap_distance(ranking_of(r, "ABC"), ranking_of(r, "BAC")), 1u);
  EXPECT_THROW(swap_distance(ranking_of(r, "ABC"), ranking_of(r, "ABD")), ArgumentError);
  EXPECT_THROW(swap_distance(ranking_of(r, "ABC"), ranking_of(r, "AB")), ArgumentError);
}

TEST(SwapDistance, MetricAxioms) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    auto roster = sigmavote::testing::letters(1 + trial % 8);
    Ranking a = sigmavote::testing::random_ranking(rng, roster);
    Ranking b = sigmavote::testing::random_ranking(rng, roster);
    Ranking c = sigmavote::testing::random_ranking(rng, roster);
    EXPECT_EQ(swap_distance(a, a), 0u);
    EXPECT_EQ(swap_distance(a, b) == 0, a == b);
    EXPECT_EQ(swap_distance(a, b), swap_distance(b, a));
    EXPECT_LE(swap_distance(a, c), swap_distance(a, b) + swap_distance(b, c));
  }
}

TEST(SigmaIia, PluralityHandTrace) {
  Profile p = profile_of(3, {{3, "ABC"}, {2, "BCA"}, {2, "CBA"}});
  IiaResult r = sigma_iia(make_plurality_rule(), p);
  EXPECT_EQ(r.value, Rational(1, 3));
  ASSERT_EQ(r.per_candidate_swaps.size(), 3u);
  EXPECT_EQ(r.per_candidate_swaps[0].second, 0u);
  EXPECT_EQ(r.per_candidate_swaps[1].second, 1u);
  EXPECT_EQ(r.per_candidate_swaps[2].second, 1u);
}

TEST(SigmaIia, TwoCandidatesScoreOne) {
  Profile p = profile_of(2, {{1, "AB"}, {2, "BA"}});
  EXPECT_EQ(sigma_iia(make_borda_rule(), p).value, 1);
}

TEST(SigmaIia, DictatorshipIsAlwaysOne) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    Profile p = sigmavote::testing::random_profile(rng, {static_cast<std::size_t>(3 + trial % 4), 9, true, true});
    EXPECT_EQ(sigma_iia(make_dictatorship_rule(trial % 9), p).value, 1);
  }
}

TEST(SigmaIia, CraftedReversalIsZero) {
  for (std::size_t m = 3; m <= 6; ++m) {
    std::string order;
    for (std::size_t i = 0; i < m; ++i) order += static_cast<char>('A' + i);
    Profile p = profile_of(m, {{5, order}});
    EXPECT_EQ(sigma_iia(crafted_reversal(m), p).value, 0) << m;
  }
}

TEST(SigmaIia, StandardRuleWitnessesBelowOne) {
  const std::vector<std::pair<std::string, Rational>> expected = {
      {"borda", Rational(11, 12)},   {"3-approval", Rational(2, 3)}, {"2-approval", Rational(3, 4)},
      {"plurality", Rational(11, 12)}, {"stv", Rational(11, 12)},
  };
  for (const auto& [name, value] : expected) {
    Election e = read_election(kFixtures / ("witness_" + name + ".csv"));
    VotingRule rule = make_rule(name, e.seats);
    EXPECT_EQ(sigma_iia(rule, e.profile).value, value) << name;
  }
}

TEST(SigmaU, CondorcetCycleIsHalfForAnyOutput) {
  Profile p = profile_of(3, {{1, "ABC"}, {1, "BCA"}, {1, "CAB"}});
  PairwiseTally tally(p);
  std::string order = "ABC";
  do {
    UResult u = sigma_u_of_ranking(tally, ranking_of(p.roster(), order));
    EXPECT_EQ(u.value, Rational(1, 2)) << order;
    EXPECT_EQ(u.misalignment, Rational(1, 3));
  } while (std::next_permutation(order.begin(), order.end()));
  for (const auto& name : standard_rule_names()) EXPECT_EQ(sigma_u(make_rule(name, 1), p).value, Rational(1, 2));
}

TEST(SigmaU, ReversedUnanimityIsZero) {
  Profile p = profile_of(3, {{4, "ABC"}});
  EXPECT_EQ(sigma_u(reversal_of(make_borda_rule()), p).value, 0);
  EXPECT_EQ(sigma_u(make_borda_rule(), p).value, 1);
}

TEST(SigmaU, PartialAbstentionIsNotUnanimous) {
  // nobody ranks B over A, but one voter ranks neither
  Profile p = profile_of(3, {{3, "AB"}, {1, "C"}});
  VotingRule b_first("b-first", [](const Profile& q) { return ranking_of(q.roster(), "BAC"); });
  EXPECT_GT(sigma_u(b_first, p).value, 0);
}

TEST(SigmaU, OneIffTopologicalSort) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    Profile p = sigmavote::testing::random_profile(rng, {4, 7, true, false});
    PairwiseGraph g = build_pwcg(p);
    PairwiseTally tally(p);
    Ranking r = sigmavote::testing::random_ranking(rng, p.roster());
    bool consistent = true;
    for (const Edge& e : g.edges()) consistent = consistent && r.prefers(e.from, e.to);
    EXPECT_EQ(sigma_u_of_ranking(tally, r).value == 1, consistent);
  }
}

TEST(SigmaU, BelowOneMeansSomePairAtAlpha) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    Profile p = sigmavote::testing::random_profile(rng, {4, 7, true, false});
    PairwiseTally tally(p);
    Ranking r = sigmavote::testing::random_ranking(rng, p.roster());
    UResult u = sigma_u_of_ranking(tally, r);
    if (u.value == 1) continue;
    const Rational alpha = u.value / (1 + u.value);
    bool found = false;
    for (Candidate a : p.roster().candidates()) {
      for (Candidate b : p.roster().candidates()) {
        if (a != b && alignment(tally, r, a, b) == alpha) found = true;
      }
    }
    EXPECT_TRUE(found);
    EXPECT_LT(alpha, Rational(1, 2));
  }
}

TEST(EvaluateAll, EmptyAndOrdering) {
  Profile p = profile_of(3, {{2, "ABC"}, {1, "CBA"}});
  EXPECT_TRUE(evaluate_all({}, p).empty());
  auto rules = make_rules("plurality,borda,stv:k=1,2-approval");
  auto reports = evaluate_all(rules, p);
  ASSERT_EQ(reports.size(), 4u);
  EXPECT_EQ(reports[0].rule_name, "2-approval");
  EXPECT_EQ(reports[1].rule_name, "borda");
  EXPECT_EQ(reports[2].rule_name, "plurality");
  EXPECT_EQ(reports[3].rule_name, "stv:k=1");
}

TEST(EvaluateAll, AttributesRuleErrors) {
  Profile p = profile_of(3, {{1, "ABC"}});
  std::vector<VotingRule> rules = {make_stv_rule(5)};
  try {
    evaluate_all(rules, p);
    FAIL() << "expected RuleError";
  } catch (const RuleError& e) {
    EXPECT_EQ(e.rule(), "stv:k=5");
  }
}

TEST(EvaluateAll, ValuesInUnitInterval) {
  std::mt19937_64 rng(35);
  auto rules = make_rules("borda,3-approval,2-approval,plurality,stv:k=2,optimal-u");
  for (int trial = 0; trial < 200; ++trial) {
    Profile p = sigmavote::testing::random_profile(rng, {static_cast<std::size_t>(3 + trial % 4), 10, true, false});
    for (const auto& r : evaluate_all(rules, p)) {
      EXPECT_GE(r.sigma_iia, 0);
      EXPECT_LE(r.sigma_iia, 1);
      EXPECT_GE(r.sigma_u, 0);
      EXPECT_LE(r.sigma_u, 1);
      EXPECT_EQ(r.sigma_u, sigma_u_from_misalignment(r.m_value));
      std::uint64_t total = 0;
      for (const auto& [c, d] : r.per_candidate_swaps) total += d;
      const std::size_t m = p.m();
      EXPECT_EQ(r.sigma_iia, 1 - Rational(static_cast<long>(total), static_cast<long>(m * (m - 1) * (m - 2) / 2)));
    }
  }
}
