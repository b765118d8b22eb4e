#include "sigmavote/pairwise.hpp"

#include <ostream>

#include "sigmavote/errors.hpp"

namespace sigmavote {

Rational RelativeRankingVector::value(PairRelation r) {
  switch (r) {
    case PairRelation::above:
      return Rational(1);
    case PairRelation::unranked:
      return Rational(1, 2);
    case PairRelation::below:
      break;
  }
  return Rational(0);
}

Rational RelativeRankingVector::l1_norm() const {
  Rational sum = 0;
  for (const Entry& e : entries) sum += value(e.relation) * e.weight;
  return sum;
}

PairRelation pair_relation(const Ballot& ballot, Candidate a, Candidate b) {
  for (Candidate c : ballot.ranking) {
    if (c == a) return PairRelation::above;
    if (c == b) return PairRelation::below;
  }
  return PairRelation::unranked;
}

namespace {

void check_pair(const CandidateRoster& roster, Candidate a, Candidate b) {
  if (a == b) throw ArgumentError("pair must consist of two distinct candidates");
  if (!roster.contains(a) || !roster.contains(b)) throw ArgumentError("pair candidate is not in the roster");
}

}  // namespace

RelativeRankingVector relative_vector(const Profile& p, Candidate a, Candidate b) {
  check_pair(p.roster(), a, b);
  RelativeRankingVector x{a, b, {}};
  x.entries.reserve(p.ballots().size());
  for (const Ballot& ballot : p.ballots()) x.entries.push_back({pair_relation(ballot, a, b), ballot.weight});
  return x;
}

PairwiseTally::PairwiseTally(const Profile& p) : roster_(p.roster()), n_(p.n()) {
  const std::size_t m = roster_.size();
  support_.assign(m * m, Rational(0));
  std::vector<char> ranked(m, 0);
  std::vector<std::size_t> pos;
  for (const Ballot& ballot : p.ballots()) {
    if (ballot.weight == 0) continue;
    const Rational& w = ballot.weight;
    pos.clear();
    for (Candidate c : ballot.ranking) pos.push_back(roster_.position(c));
    for (std::size_t i = 0; i < pos.size(); ++i) {
      ranked[pos[i]] = 1;
      for (std::size_t j = i + 1; j < pos.size(); ++j) support_[pos[i] * m + pos[j]] += w;
    }
    for (std::size_t i : pos) {
      for (std::size_t u = 0; u < m; ++u) {
        if (!ranked[u]) support_[i * m + u] += w;
      }
    }
    if (pos.size() + 1 < m) {
      const Rational half = w / 2;
      for (std::size_t u = 0; u < m; ++u) {
        if (ranked[u]) continue;
        for (std::size_t v = 0; v < m; ++v) {
          if (v != u && !ranked[v]) support_[u * m + v] += half;
        }
      }
    }
    for (std::size_t i : pos) ranked[i] = 0;
  }
}

const Rational& PairwiseTally::support(Candidate a, Candidate b) const {
  check_pair(roster_, a, b);
  return support_[roster_.position(a) * roster_.size() + roster_.position(b)];
}

Rational PairwiseTally::margin(Candidate a, Candidate b) const { return support(a, b) - support(b, a); }

Rational alignment(const PairwiseTally& tally, const Ranking& out, Candidate a, Candidate b) {
  const bool a_first = out.prefers(a, b);
  return (a_first ? tally.support(a, b) : tally.support(b, a)) / tally.n();
}

Rational alignment(const Profile& p, const Ranking& out, Candidate a, Candidate b) {
  check_pair(p.roster(), a, b);
  const bool a_first = out.prefers(a, b);
  auto x = a_first ? relative_vector(p, a, b) : relative_vector(p, b, a);
  return x.l1_norm() / p.n();
}

Rational misalignment(const PairwiseTally& tally, const Ranking& out) {
  const auto& order = out.order();
  if (order.size() < 2) throw ArgumentError("misalignment needs at least two candidates");
  if (order.size() != tally.roster().size()) throw ArgumentError("ranking does not match the profile's roster");
  std::optional<Rational> worst;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const Rational& s = tally.support(order[i], order[j]);
      if (!worst || s < *worst) worst = s;
    }
  }
  return *worst / tally.n();
}

Rational misalignment(const Profile& p, const Ranking& out) { return misalignment(PairwiseTally(p), out); }

PairwiseGraph::PairwiseGraph(const PairwiseTally& tally) : roster_(tally.roster()), n_(tally.n()) {
  const std::size_t m = roster_.size();
  margin_.assign(m * m, Rational(0));
  present_.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      Candidate a = roster_.at(i);
      Candidate b = roster_.at(j);
      margin_[i * m + j] = tally.support(a, b) - tally.support(b, a);
      if (margin_[i * m + j] > 0) {
        present_[i * m + j] = 1;
        ++edge_count_;
      }
    }
  }
}

std::size_t PairwiseGraph::index(Candidate a, Candidate b) const {
  return roster_.position(a) * roster_.size() + roster_.position(b);
}

Rational PairwiseGraph::margin(Candidate a, Candidate b) const {
  check_pair(roster_, a, b);
  return margin_[index(a, b)];
}

bool PairwiseGraph::has_edge(Candidate from, Candidate to) const {
  if (from == to) return false;
  return present_[index(from, to)] != 0;
}

std::vector<Edge> PairwiseGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  const std::size_t m = roster_.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (present_[i * m + j]) out.push_back({roster_.at(i), roster_.at(j), margin_[i * m + j]});
    }
  }
  return out;
}

std::optional<Rational> PairwiseGraph::min_edge_weight() const {
  std::optional<Rational> best;
  for (std::size_t k = 0; k < present_.size(); ++k) {
    if (present_[k] && (!best || margin_[k] < *best)) best = margin_[k];
  }
  return best;
}

std::size_t PairwiseGraph::remove_edges_with_weight(const Rational& w) {
  std::size_t removed = 0;
  for (std::size_t k = 0; k < present_.size(); ++k) {
    if (present_[k] && margin_[k] == w) {
      present_[k] = 0;
      ++removed;
    }
  }
  edge_count_ -= removed;
  return removed;
}

PairwiseGraph build_pwcg(const Profile& p) { return PairwiseGraph(PairwiseTally(p)); }

std::optional<Ranking> topological_sort(const PairwiseGraph& g) {
  const auto& roster = g.roster();
  const std::size_t m = roster.size();
  std::vector<std::size_t> indegree(m, 0);
  for (const Edge& e : g.edges()) ++indegree[roster.position(e.to)];
  std::vector<char> placed(m, 0);
  std::vector<Candidate> order;
  order.reserve(m);
  for (std::size_t step = 0; step < m; ++step) {
    std::size_t next = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (!placed[i] && indegree[i] == 0) {
        next = i;
        break;
      }
    }
    if (next == m) return std::nullopt;
    placed[next] = 1;
    Candidate c = roster.at(next);
    order.push_back(c);
    for (std::size_t j = 0; j < m; ++j) {
      if (!placed[j] && g.has_edge(c, roster.at(j))) --indegree[j];
    }
  }
  return Ranking(std::move(order));
}

void write_edge_list(std::ostream& out, const PairwiseGraph& g) {
  out << "from,to,weight\n";
  for (const Edge& e : g.edges()) {
    out << g.roster().name(e.from) << ',' << g.roster().name(e.to) << ',' << to_string(e.weight) << '\n';
  }
}

}  // namespace sigmavote
