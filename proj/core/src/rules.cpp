#include "sigmavote/rules.hpp"

#include <algorithm>
#include <numeric>

#include "sigmavote/errors.hpp"

namespace sigmavote {

VotingRule::VotingRule(std::string name, Function evaluate, std::string tiebreak)
    : name_(std::move(name)), evaluate_(std::move(evaluate)), tiebreak_(std::move(tiebreak)) {}

const Rational& ScoreVector::at(std::size_t position) const {
  static const Rational zero(0);
  return position < points.size() ? points[position] : zero;
}

ScoreVector ScoreVector::borda(std::size_t m) {
  ScoreVector sv;
  for (std::size_t i = 0; i < m; ++i) sv.points.emplace_back(static_cast<long>(m - i));
  return sv;
}

ScoreVector ScoreVector::approval(std::size_t k) {
  ScoreVector sv;
  sv.points.assign(k, Rational(1));
  return sv;
}

std::vector<Rational> candidate_scores(const ScoreVector& sv, const Profile& p) {
  const auto& roster = p.roster();
  std::vector<Rational> scores(roster.size(), Rational(0));
  for (const Ballot& b : p.ballots()) {
    const std::size_t counted = std::min(b.ranking.size(), sv.points.size());
    for (std::size_t i = 0; i < counted; ++i) scores[roster.position(b.ranking[i])] += b.weight * sv.points[i];
  }
  return scores;
}

Ranking rank_by_score(const CandidateRoster& roster, const std::vector<Rational>& scores) {
  std::vector<std::size_t> idx(roster.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  std::vector<Candidate> order;
  order.reserve(idx.size());
  for (std::size_t i : idx) order.push_back(roster.at(i));
  return Ranking(std::move(order));
}

Ranking scoring_rule(const ScoreVector& sv, const Profile& p) {
  return rank_by_score(p.roster(), candidate_scores(sv, p));
}

Ranking borda(const Profile& p) { return scoring_rule(ScoreVector::borda(p.m()), p); }
Ranking three_approval(const Profile& p) { return scoring_rule(ScoreVector::approval(3), p); }
Ranking two_approval(const Profile& p) { return scoring_rule(ScoreVector::approval(2), p); }
Ranking plurality(const Profile& p) { return scoring_rule(ScoreVector::plurality(), p); }

namespace {

struct Pile {
  const std::vector<Candidate>* ranking;
  std::size_t cursor;
  Rational weight;
};

class StvCount {
 public:
  StvCount(const Profile& p) : roster_(p.roster()), m_(p.m()), continuing_(p.m(), 1) {
    for (const Ballot& b : p.ballots()) {
      if (b.weight == 0 || b.ranking.empty()) continue;
      piles_.push_back({&b.ranking, 0, b.weight});
    }
    advance_all();
  }

  std::vector<Rational> support() const {
    std::vector<Rational> s(m_, Rational(0));
    for (const Pile& pile : piles_) {
      if (pile.cursor < pile.ranking->size()) s[top_position(pile)] += pile.weight;
    }
    return s;
  }

  void elect(std::size_t pos, const Rational& factor) {
    for (Pile& pile : piles_) {
      if (pile.cursor < pile.ranking->size() && top_position(pile) == pos) pile.weight *= factor;
    }
    remove(pos);
  }

  void remove(std::size_t pos) {
    continuing_[pos] = 0;
    advance_all();
  }

  bool is_continuing(std::size_t pos) const { return continuing_[pos] != 0; }

 private:
  std::size_t top_position(const Pile& pile) const { return roster_.position((*pile.ranking)[pile.cursor]); }

  void advance_all() {
    for (Pile& pile : piles_) {
      while (pile.cursor < pile.ranking->size() && !continuing_[top_position(pile)]) ++pile.cursor;
    }
  }

  const CandidateRoster& roster_;
  std::size_t m_;
  std::vector<char> continuing_;
  std::vector<Pile> piles_;
};

}  // namespace

StvResult run_stv(const StvConfig& cfg, const Profile& p) {
  const std::size_t m = p.m();
  if (cfg.seats < 1 || static_cast<std::size_t>(cfg.seats) > m) {
    throw ConfigError("STV needs 1 <= seats <= candidates, got seats=" + std::to_string(cfg.seats) +
                      " with " + std::to_string(m) + " candidates");
  }
  const auto seats = static_cast<std::size_t>(cfg.seats);
  const auto& roster = p.roster();

  StvResult result;
  result.quota = cfg.quota.value_or(p.n() / (cfg.seats + 1));
  const Profile compact = p.compressed();
  StvCount count(compact);
  std::vector<Candidate> eliminated;
  std::size_t continuing = m;

  auto by_support_desc = [&](const std::vector<Rational>& s) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m; ++i) {
      if (count.is_continuing(i)) idx.push_back(i);
    }
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return s[a] > s[b]; });
    return idx;
  };

  while (result.elected.size() < seats && continuing > 0) {
    const auto s = count.support();
    const auto ordered = by_support_desc(s);

    if (continuing <= seats - result.elected.size()) {
      for (std::size_t pos : ordered) {
        result.elected.push_back(roster.at(pos));
        result.events.push_back({StvEvent::Kind::elected, roster.at(pos), s[pos], Rational(1)});
        count.remove(pos);
      }
      continuing = 0;
      break;
    }

    const std::size_t leader = ordered.front();
    if (s[leader] > result.quota) {
      const Rational factor = (s[leader] - result.quota) / s[leader];
      result.elected.push_back(roster.at(leader));
      result.events.push_back({StvEvent::Kind::elected, roster.at(leader), s[leader], factor});
      count.elect(leader, factor);
    } else {
      // stable sort keeps canonical order among equals, so the last equal-minimum loses
      const std::size_t loser = ordered.back();
      eliminated.push_back(roster.at(loser));
      result.events.push_back({StvEvent::Kind::eliminated, roster.at(loser), s[loser], Rational(1)});
      count.remove(loser);
    }
    --continuing;
  }

  std::vector<Candidate> order = result.elected;
  if (continuing > 0) {
    const auto s = count.support();
    for (std::size_t pos : by_support_desc(s)) order.push_back(roster.at(pos));
  }
  order.insert(order.end(), eliminated.rbegin(), eliminated.rend());
  result.ranking = Ranking(std::move(order));
  return result;
}

Ranking stv(const StvConfig& cfg, const Profile& p) { return run_stv(cfg, p).ranking; }

Ranking dictatorship(std::size_t voter, const Profile& p) {
  const Ballot& b = p.ballots()[p.ballot_of_voter(Rational(static_cast<long>(voter)))];
  std::vector<Candidate> order = b.ranking;
  for (Candidate c : p.roster().candidates()) {
    if (std::find(b.ranking.begin(), b.ranking.end(), c) == b.ranking.end()) order.push_back(c);
  }
  return Ranking(std::move(order));
}

VotingRule make_scoring_rule(std::string name, std::function<ScoreVector(std::size_t m)> vector_for_m) {
  return VotingRule(std::move(name), [vector_for_m = std::move(vector_for_m)](const Profile& p) {
    return scoring_rule(vector_for_m(p.m()), p);
  });
}

VotingRule make_borda_rule() {
  return make_scoring_rule("borda", [](std::size_t m) { return ScoreVector::borda(m); });
}
VotingRule make_three_approval_rule() {
  return make_scoring_rule("3-approval", [](std::size_t) { return ScoreVector::approval(3); });
}
VotingRule make_two_approval_rule() {
  return make_scoring_rule("2-approval", [](std::size_t) { return ScoreVector::approval(2); });
}
VotingRule make_plurality_rule() {
  return make_scoring_rule("plurality", [](std::size_t) { return ScoreVector::plurality(); });
}

VotingRule make_stv_rule(int seats, std::string name) {
  if (seats < 1) throw ConfigError("STV seats must be at least 1, got " + std::to_string(seats));
  if (name.empty()) name = "stv:k=" + std::to_string(seats);
  return VotingRule(std::move(name), [seats](const Profile& p) { return stv(StvConfig{seats, std::nullopt}, p); });
}

VotingRule make_dictatorship_rule(std::size_t voter) {
  return VotingRule("dictator:i=" + std::to_string(voter), [voter](const Profile& p) { return dictatorship(voter, p); });
}

VotingRule reversal_of(const VotingRule& rule) {
  return VotingRule("reverse(" + rule.name() + ")", [rule](const Profile& p) { return rule(p).reversed(); });
}

}  // namespace sigmavote
