#include "sigmavote/ballots.hpp"

#include <algorithm>
#include <map>

#include "sigmavote/errors.hpp"

namespace sigmavote {

CandidateRoster::CandidateRoster(std::vector<std::string> names) {
  if (names.empty()) throw RosterError("candidate roster is empty");
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto& name = names[i];
    if (name.empty()) throw RosterError("candidate name is empty");
    if (name.find_first_of(",>\r\n") != std::string::npos) {
      throw RosterError("candidate name contains a reserved character: '" + name + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (names[j] == name) throw RosterError("duplicate candidate name: '" + name + "'");
    }
  }
  order_.reserve(names.size());
  position_.resize(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    order_.push_back(Candidate{static_cast<std::uint32_t>(i)});
    position_[i] = static_cast<std::int32_t>(i);
  }
  universe_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool CandidateRoster::contains(Candidate c) const noexcept {
  return c.id < position_.size() && position_[c.id] >= 0;
}

std::size_t CandidateRoster::position(Candidate c) const {
  if (!contains(c)) throw RosterError("candidate id " + std::to_string(c.id) + " is not in the roster");
  return static_cast<std::size_t>(position_[c.id]);
}

const std::string& CandidateRoster::name(Candidate c) const {
  if (!universe_ || c.id >= universe_->size()) {
    throw RosterError("candidate id " + std::to_string(c.id) + " is unknown");
  }
  return (*universe_)[c.id];
}

std::optional<Candidate> CandidateRoster::find(std::string_view name) const {
  for (Candidate c : order_) {
    if ((*universe_)[c.id] == name) return c;
  }
  return std::nullopt;
}

std::vector<std::string> CandidateRoster::names() const {
  std::vector<std::string> out;
  out.reserve(order_.size());
  for (Candidate c : order_) out.push_back((*universe_)[c.id]);
  return out;
}

CandidateRoster CandidateRoster::without(Candidate c) const {
  std::size_t removed_at = position(c);
  CandidateRoster out;
  out.universe_ = universe_;
  out.order_ = order_;
  out.order_.erase(out.order_.begin() + static_cast<std::ptrdiff_t>(removed_at));
  out.position_.assign(position_.size(), -1);
  for (std::size_t i = 0; i < out.order_.size(); ++i) {
    out.position_[out.order_[i].id] = static_cast<std::int32_t>(i);
  }
  return out;
}

bool operator==(const CandidateRoster& a, const CandidateRoster& b) {
  return a.names() == b.names();
}

Ranking::Ranking(std::vector<Candidate> order) : order_(std::move(order)) {
  auto sorted = order_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ArgumentError("ranking lists a candidate twice");
  }
}

Ranking Ranking::over(const CandidateRoster& roster, std::vector<Candidate> order) {
  Ranking r(std::move(order));
  if (r.size() != roster.size()) throw ArgumentError("ranking does not cover the roster");
  for (Candidate c : r.order_) {
    if (!roster.contains(c)) throw ArgumentError("ranking contains a non-roster candidate");
  }
  return r;
}

bool Ranking::contains(Candidate c) const noexcept {
  return std::find(order_.begin(), order_.end(), c) != order_.end();
}

std::size_t Ranking::index_of(Candidate c) const {
  auto it = std::find(order_.begin(), order_.end(), c);
  if (it == order_.end()) throw ArgumentError("candidate not in ranking");
  return static_cast<std::size_t>(it - order_.begin());
}

bool Ranking::prefers(Candidate a, Candidate b) const { return index_of(a) < index_of(b); }

Ranking Ranking::reversed() const {
  Ranking out;
  out.order_.assign(order_.rbegin(), order_.rend());
  return out;
}

Ranking Ranking::without(Candidate c) const {
  Ranking out;
  out.order_.reserve(order_.size());
  bool found = false;
  for (Candidate x : order_) {
    if (x == c) {
      found = true;
    } else {
      out.order_.push_back(x);
    }
  }
  if (!found) throw ArgumentError("candidate not in ranking");
  return out;
}

Ranking condense_ranking(const Ranking& r, Candidate c) { return r.without(c); }

std::vector<std::string> ranking_names(const Ranking& r, const CandidateRoster& roster) {
  std::vector<std::string> out;
  out.reserve(r.size());
  for (Candidate c : r.order()) out.push_back(roster.name(c));
  return out;
}

Profile::Profile(CandidateRoster roster, std::vector<Ballot> ballots)
    : roster_(std::move(roster)), ballots_(std::move(ballots)) {
  std::vector<char> seen(roster_.id_bound(), 0);
  for (std::size_t i = 0; i < ballots_.size(); ++i) {
    const Ballot& b = ballots_[i];
    if (b.weight < 0) {
      throw ValueError("ballot " + std::to_string(i + 1) + " has negative weight " + to_string(b.weight));
    }
    for (Candidate c : b.ranking) {
      if (!roster_.contains(c)) {
        throw RosterError("ballot " + std::to_string(i + 1) + " ranks a candidate outside the roster");
      }
      if (seen[c.id]) {
        throw BallotError("ballot " + std::to_string(i + 1) + " ranks '" + roster_.name(c) + "' twice");
      }
      seen[c.id] = 1;
    }
    for (Candidate c : b.ranking) seen[c.id] = 0;
    n_ += b.weight;
  }
  if (n_ <= 0) throw ValueError("profile has no voters (total weight is zero)");
}

Profile::Profile(CandidateRoster roster, std::vector<Ballot> ballots, Rational n)
    : roster_(std::move(roster)), ballots_(std::move(ballots)), n_(std::move(n)) {}

Profile Profile::condense(Candidate c) const {
  if (!roster_.contains(c)) throw RosterError("cannot remove a candidate outside the roster");
  if (roster_.size() < 2) throw ArgumentError("cannot condense a single-candidate profile");
  std::vector<Ballot> out;
  out.reserve(ballots_.size());
  for (const Ballot& b : ballots_) {
    Ballot nb;
    nb.weight = b.weight;
    nb.ranking.reserve(b.ranking.size());
    for (Candidate x : b.ranking) {
      if (x != c) nb.ranking.push_back(x);
    }
    out.push_back(std::move(nb));
  }
  return Profile(roster_.without(c), std::move(out), n_);
}

Profile Profile::compressed() const {
  std::map<std::vector<Candidate>, std::size_t> index;
  std::vector<Ballot> out;
  for (const Ballot& b : ballots_) {
    if (b.weight == 0) continue;
    auto [it, inserted] = index.try_emplace(b.ranking, out.size());
    if (inserted) {
      out.push_back(b);
    } else {
      out[it->second].weight += b.weight;
    }
  }
  return Profile(roster_, std::move(out), n_);
}

std::size_t Profile::ballot_of_voter(const Rational& voter) const {
  if (voter < 0 || voter >= n_) throw ArgumentError("voter index " + to_string(voter) + " out of range");
  Rational cumulative = 0;
  for (std::size_t i = 0; i < ballots_.size(); ++i) {
    cumulative += ballots_[i].weight;
    if (voter < cumulative) return i;
  }
  throw ArgumentError("voter index " + to_string(voter) + " out of range");
}

Profile condense_profile(const Profile& p, Candidate c) { return p.condense(c); }

namespace {

std::map<std::vector<std::string>, Rational> named_multiset(const Profile& p) {
  std::map<std::vector<std::string>, Rational> out;
  for (const Ballot& b : p.ballots()) {
    if (b.weight == 0) continue;
    std::vector<std::string> names;
    names.reserve(b.ranking.size());
    for (Candidate c : b.ranking) names.push_back(p.roster().name(c));
    out[std::move(names)] += b.weight;
  }
  return out;
}

}  // namespace

bool same_ballot_multiset(const Profile& a, const Profile& b) {
  return a.roster() == b.roster() && named_multiset(a) == named_multiset(b);
}

}  // namespace sigmavote
