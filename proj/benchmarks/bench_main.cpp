#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <vector>

#include "sigmavote/metrics.hpp"
#include "sigmavote/optimizer.hpp"
#include "sigmavote/pairwise.hpp"
#include "sigmavote/rules.hpp"
#include "sigmavote/synth.hpp"

using namespace sigmavote;

namespace {

// n uncompressed ballots, so the work grows with n. Every third ballot is
// truncated to exercise the partial-ballot paths.
Profile voters(std::size_t m, std::size_t n, std::uint64_t seed = 1) {
  CandidateRoster roster = synthetic_roster(m);
  std::mt19937_64 rng(seed);
  std::vector<Candidate> order(roster.candidates().begin(), roster.candidates().end());
  std::vector<Ballot> ballots;
  ballots.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Candidate> r = order;
    if (i % 3 == 0) r.resize(1 + i % m);
    ballots.push_back({std::move(r), Rational(1)});
  }
  return Profile(std::move(roster), std::move(ballots));
}

void BM_Stv(benchmark::State& state) {
  const Profile p = voters(state.range(0), state.range(1));
  const StvConfig cfg{3, std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(stv(cfg, p));
}
BENCHMARK(BM_Stv)->Args({6, 1000})->Args({10, 1000})->Args({10, 5000})->Unit(benchmark::kMillisecond);

void BM_SigmaIia(benchmark::State& state) {
  const Profile p = voters(state.range(0), 1000);
  const VotingRule rule = state.range(1) ? make_stv_rule(3) : make_borda_rule();
  state.SetLabel(rule.name());
  for (auto _ : state) benchmark::DoNotOptimize(sigma_iia(rule, p));
}
BENCHMARK(BM_SigmaIia)->Args({6, 0})->Args({6, 1})->Args({10, 0})->Args({10, 1})->Unit(benchmark::kMillisecond);

void BM_SigmaU(benchmark::State& state) {
  const Profile p = voters(state.range(0), 1000);
  const Ranking r = borda(p);
  for (auto _ : state) benchmark::DoNotOptimize(sigma_u_of_ranking(PairwiseTally(p), r));
}
BENCHMARK(BM_SigmaU)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

// Doubling n at fixed m should roughly double the time (tally is O(m^2 n),
// the greedy loop O(m^3)).
void BM_OptimalU(benchmark::State& state) {
  const Profile p = voters(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(optimal_u_rule(p));
  state.SetComplexityN(state.range(1));
}
BENCHMARK(BM_OptimalU)
    ->ArgsProduct({{6}, {250, 500, 1000, 2000, 4000, 8000}})
    ->Complexity(benchmark::oN)
    ->Unit(benchmark::kMillisecond);

void BM_SampleProfile(benchmark::State& state) {
  BtConfig cfg;
  cfg.m = state.range(0);
  cfg.voters = 1000;
  auto rng = make_stream(1, 0);
  const StrengthVector s = sample_strengths(cfg, rng);
  for (auto _ : state) benchmark::DoNotOptimize(sample_profile(cfg, s, rng));
}
BENCHMARK(BM_SampleProfile)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
