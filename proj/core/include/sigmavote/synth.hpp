#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "sigmavote/ballots.hpp"
#include "sigmavote/rules.hpp"

namespace sigmavote {

enum class StrengthMode { fresh_per_replicate, shared };
enum class SamplerKind { automatic, exact, mcmc };

struct BtConfig {
  std::size_t m = 6;
  std::size_t voters = 1000;
  double alpha = 2.0;
  std::uint64_t seed = 0;
  std::size_t profiles = 100;
  /// Metropolis burn-in steps; default 10 m^2.
  std::optional<std::size_t> burn_in;
  /// Metropolis steps between retained samples; default m^2.
  std::optional<std::size_t> thin;
  StrengthMode strengths = StrengthMode::fresh_per_replicate;
  /// automatic enumerates exactly up to kExactSamplerMaxCandidates.
  SamplerKind sampler = SamplerKind::automatic;

  /// Throws ConfigError for m < 2, voters < 1, alpha <= 0 or non-finite, or an
  /// exact sampler requested above kExactSamplerMaxCandidates.
  void validate() const;
  std::size_t effective_burn_in() const { return burn_in.value_or(10 * m * m); }
  std::size_t effective_thin() const { return thin.value_or(m * m); }
};

inline constexpr std::size_t kExactSamplerMaxCandidates = 7;

/// Positive candidate strengths summing to 1, indexed by canonical position.
using StrengthVector = std::vector<double>;

/// Independent generator for (seed, stream); replicates and bootstrap
/// resamples each take their own stream so results do not depend on
/// scheduling.
std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream);

/// Candidates named C1..Cm.
CandidateRoster synthetic_roster(std::size_t m);

/// One symmetric Dirichlet(alpha) draw via normalized Gamma(alpha, 1) variates.
StrengthVector sample_strengths(const BtConfig& cfg, std::mt19937_64& rng);

/// Unnormalized weight: product over pairs (i above j) of s_i / (s_i + s_j).
double bt_ranking_probability(const StrengthVector& s, const Ranking& r, const CandidateRoster& roster);

/// `cfg.voters` complete ballots drawn i.i.d. from the ranking distribution,
/// identical rankings merged in order of first draw.
Profile sample_profile(const BtConfig& cfg, const StrengthVector& s, std::mt19937_64& rng);

struct ExperimentRow {
  std::size_t replicate = 0;
  std::string rule;
  Rational sigma_iia;
  Rational sigma_u;
  double alpha = 0;
  std::size_t m = 0;
};

/// Called once per replicate, in replicate order, after all work is done.
using ProfileSink = std::function<void(std::size_t replicate, const StrengthVector&, const Profile&)>;

/// Draws `cfg.profiles` replicates and evaluates every rule on each. Rows are
/// ordered by replicate, then rule name. `jobs` worker threads share the
/// replicates; output does not depend on `jobs`.
std::vector<ExperimentRow> run_bt_experiment(const BtConfig& cfg, std::span<const VotingRule> rules,
                                             unsigned jobs = 1, const ProfileSink& sink = {});

inline constexpr const char* kExperimentCsvHeader = "replicate,rule,sigma_iia,sigma_u,alpha,m";
void write_experiment_csv(std::ostream& out, std::span<const ExperimentRow> rows);

}  // namespace sigmavote
