#include "sigmavote/synth.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <mutex>
#include <cmath>
#include <numeric>
#include <ostream>
#include <thread>

#include "sigmavote/errors.hpp"
#include "sigmavote/metrics.hpp"

namespace sigmavote {

void BtConfig::validate() const {
  if (m < 2) throw ConfigError("synthetic profiles need at least 2 candidates");
  if (voters < 1) throw ConfigError("synthetic profiles need at least 1 voter");
  if (!(alpha > 0) || !std::isfinite(alpha)) throw ConfigError("Dirichlet alpha must be positive and finite");
  if (sampler == SamplerKind::exact && m > kExactSamplerMaxCandidates) {
    throw ConfigError("exact sampling supports at most " + std::to_string(kExactSamplerMaxCandidates) +
                      " candidates");
  }
  if (thin && *thin == 0) throw ConfigError("MCMC thinning must be at least 1");
}

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

CandidateRoster synthetic_roster(std::size_t m) {
  std::vector<std::string> names;
  names.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) names.push_back("C" + std::to_string(i));
  return CandidateRoster(std::move(names));
}

StrengthVector sample_strengths(const BtConfig& cfg, std::mt19937_64& rng) {
  std::gamma_distribution<double> gamma(cfg.alpha, 1.0);
  StrengthVector s(cfg.m);
  for (;;) {
    double total = 0;
    for (double& x : s) {
      x = gamma(rng);
      total += x;
    }
    // tiny alpha can underflow to exact zeros; BT needs strictly positive strengths
    const bool usable = total > 0 && std::all_of(s.begin(), s.end(), [](double x) { return x > 0; });
    if (!usable) continue;
    for (double& x : s) x /= total;
    return s;
  }
}

double bt_ranking_probability(const StrengthVector& s, const Ranking& r, const CandidateRoster& roster) {
  double p = 1;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double si = s.at(roster.position(r[i]));
    for (std::size_t j = i + 1; j < r.size(); ++j) p *= si / (si + s.at(roster.position(r[j])));
  }
  return p;
}

namespace {

double weight_of(const StrengthVector& s, const std::vector<std::size_t>& perm) {
  double p = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) p *= s[perm[i]] / (s[perm[i]] + s[perm[j]]);
  }
  return p;
}

std::vector<std::vector<std::size_t>> draw_exact(const BtConfig& cfg, const StrengthVector& s, std::mt19937_64& rng) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<double> weights;
  std::vector<std::size_t> perm(cfg.m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
    weights.push_back(weight_of(s, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  std::vector<std::vector<std::size_t>> out;
  out.reserve(cfg.voters);
  for (std::size_t v = 0; v < cfg.voters; ++v) out.push_back(perms[pick(rng)]);
  return out;
}

std::vector<std::vector<std::size_t>> draw_mcmc(const BtConfig& cfg, const StrengthVector& s, std::mt19937_64& rng) {
  std::vector<std::size_t> state(cfg.m);
  std::iota(state.begin(), state.end(), 0);
  std::shuffle(state.begin(), state.end(), rng);
  std::uniform_int_distribution<std::size_t> slot(0, cfg.m - 2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto step = [&] {
    const std::size_t j = slot(rng);
    // swapping adjacent a > b changes exactly one pairwise factor: ratio s_b / s_a
    const double ratio = s[state[j + 1]] / s[state[j]];
    if (ratio >= 1 || unit(rng) < ratio) std::swap(state[j], state[j + 1]);
  };
  for (std::size_t i = 0; i < cfg.effective_burn_in(); ++i) step();
  std::vector<std::vector<std::size_t>> out;
  out.reserve(cfg.voters);
  for (std::size_t v = 0; v < cfg.voters; ++v) {
    for (std::size_t i = 0; i < cfg.effective_thin(); ++i) step();
    out.push_back(state);
  }
  return out;
}

}  // namespace

Profile sample_profile(const BtConfig& cfg, const StrengthVector& s, std::mt19937_64& rng) {
  cfg.validate();
  if (s.size() != cfg.m) throw ArgumentError("strength vector length does not match m");
  const bool exact = cfg.sampler == SamplerKind::exact ||
                     (cfg.sampler == SamplerKind::automatic && cfg.m <= kExactSamplerMaxCandidates);
  const auto draws = exact ? draw_exact(cfg, s, rng) : draw_mcmc(cfg, s, rng);
  const CandidateRoster roster = synthetic_roster(cfg.m);
  std::vector<Ballot> ballots;
  ballots.reserve(draws.size());
  for (const auto& perm : draws) {
    Ballot b;
    b.ranking.reserve(perm.size());
    for (std::size_t pos : perm) b.ranking.push_back(roster.at(pos));
    ballots.push_back(std::move(b));
  }
  return Profile(roster, std::move(ballots)).compressed();
}

std::vector<ExperimentRow> run_bt_experiment(const BtConfig& cfg, std::span<const VotingRule> rules, unsigned jobs,
                                             const ProfileSink& sink) {
  cfg.validate();
  const std::size_t replicates = cfg.profiles;
  std::optional<StrengthVector> shared;
  if (cfg.strengths == StrengthMode::shared) {
    auto rng = make_stream(cfg.seed, ~std::uint64_t{0});
    shared = sample_strengths(cfg, rng);
  }

  struct Slot {
    StrengthVector strengths;
    std::optional<Profile> profile;
    std::vector<ExperimentRow> rows;
  };
  std::vector<Slot> slots(replicates);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t r = next++; r < replicates; r = next++) {
      try {
        auto rng = make_stream(cfg.seed, r);
        Slot& slot = slots[r];
        slot.strengths = shared ? *shared : sample_strengths(cfg, rng);
        Profile p = sample_profile(cfg, slot.strengths, rng);
        for (const MetricReport& rep : evaluate_all(rules, p)) {
          slot.rows.push_back({r, rep.rule_name, rep.sigma_iia, rep.sigma_u, cfg.alpha, cfg.m});
        }
        if (sink) slot.profile = std::move(p);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, replicates))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<ExperimentRow> rows;
  rows.reserve(replicates * rules.size());
  for (std::size_t r = 0; r < replicates; ++r) {
    if (sink) sink(r, slots[r].strengths, *slots[r].profile);
    for (auto& row : slots[r].rows) rows.push_back(std::move(row));
  }
  return rows;
}

void write_experiment_csv(std::ostream& out, std::span<const ExperimentRow> rows) {
  out << kExperimentCsvHeader << '\n';
  char alpha[32];
  for (const ExperimentRow& row : rows) {
    std::snprintf(alpha, sizeof alpha, "%.12g", row.alpha);
    out << row.replicate << ',' << row.rule << ',' << to_decimal(row.sigma_iia) << ',' << to_decimal(row.sigma_u)
        << ',' << alpha << ',' << row.m << '\n';
  }
}

}  // namespace sigmavote
