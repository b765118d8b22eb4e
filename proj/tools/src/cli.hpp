#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sigmavote/ballots.hpp"
#include "sigmavote/profile_io.hpp"
#include "sigmavote/rules.hpp"

namespace sigmavote::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kConfigError = 3,
  kEmptyCorpus = 4,
};

enum class OutputFormat { csv, json };

struct GlobalOptions {
  std::string rules = "borda,3-approval,2-approval,plurality,stv";
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::csv;
  unsigned jobs = 1;
};

/// Entry point shared by the executable and the tests.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Builds the rule list for one election and checks STV seat counts against
/// the roster (1 <= k < m). Throws ConfigError.
std::vector<VotingRule> rules_for(const std::string& list, std::optional<int> seats, std::size_t m);

std::optional<ProfileFormat> parse_input_format(const std::string& name);

/// Opens `path` for writing, creating parent directories. Throws ConfigError
/// when the file cannot be created.
std::ofstream open_output(const std::filesystem::path& path);

}  // namespace sigmavote::cli
