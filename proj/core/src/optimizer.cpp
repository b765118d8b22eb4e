#include "sigmavote/optimizer.hpp"

#include <algorithm>
#include <numeric>

#include "sigmavote/errors.hpp"
#include "sigmavote/metrics.hpp"

namespace sigmavote {

DisagreementSet disagreement_set(const PairwiseGraph& g, const Ranking& r) {
  if (r.size() != g.roster().size()) throw ArgumentError("ranking does not match the graph's roster");
  DisagreementSet d;
  for (const Edge& e : g.edges()) {
    if (r.prefers(e.to, e.from)) {
      d.pairs.emplace_back(e.from, e.to);
      if (!d.max_margin || e.weight > *d.max_margin) d.max_margin = e.weight;
    }
  }
  return d;
}

Rational sigma_u_via_margins(const PairwiseGraph& g, const Ranking& r) {
  const DisagreementSet d = disagreement_set(g, r);
  if (d.empty()) return Rational(1);
  return MarginTransform{g.n()}.sigma(*d.max_margin);
}

OptimalUTrace optimal_u_trace(const Profile& p) {
  PairwiseGraph g = build_pwcg(p);
  OptimalUTrace trace;
  for (;;) {
    if (auto sorted = topological_sort(g)) {
      trace.ranking = std::move(*sorted);
      return trace;
    }
    // a cycle implies at least one edge, so the minimum exists
    const Rational w = *g.min_edge_weight();
    trace.edges_removed += g.remove_edges_with_weight(w);
    trace.removed_weights.push_back(w);
  }
}

Ranking optimal_u_rule(const Profile& p) { return optimal_u_trace(p).ranking; }

BruteForceResult brute_force_optimal(const Profile& p) {
  const std::size_t m = p.m();
  if (m > kBruteForceMaxCandidates) {
    throw ConfigError("brute-force search supports at most " + std::to_string(kBruteForceMaxCandidates) +
                      " candidates, got " + std::to_string(m));
  }
  const PairwiseTally tally(p);
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<BruteForceResult> best;
  do {
    std::vector<Candidate> order;
    order.reserve(m);
    for (std::size_t i : perm) order.push_back(p.roster().at(i));
    Ranking r(std::move(order));
    Rational value = m >= 2 ? sigma_u_of_ranking(tally, r).value : Rational(1);
    if (!best || value > best->value) best = BruteForceResult{std::move(r), std::move(value)};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

VotingRule make_optimal_u_rule() { return VotingRule("optimal-u", optimal_u_rule); }

}  // namespace sigmavote
