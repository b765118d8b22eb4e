#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "sigmavote/ballots.hpp"

namespace sigmavote {

enum class ProfileFormat {
  /// `# candidates: A,B,C` then header `weight,ranking` and rows `W,A>B>C`.
  canonical_csv,
  /// Scottish election layout: `num_candidates,seats`, then `count,i1,i2,...`
  /// rows with 1-based candidate indices, then `Candidate,<name>,<party>` rows
  /// and a final ward-name row.
  position_columns_csv,
};

/// A parsed profile plus the metadata that travels with it.
struct Election {
  std::string election_id;
  Profile profile;
  std::optional<int> seats;
  /// Free-form `key: value` pairs (canonical comments, ward name, parties).
  std::map<std::string, std::string> metadata;
};

Election parse_election(std::istream& in, ProfileFormat format, std::string_view source = "<input>");
Election parse_election(std::string_view text, ProfileFormat format, std::string_view source = "<input>");

inline Profile parse_profile(std::istream& in, ProfileFormat format, std::string_view source = "<input>") {
  return parse_election(in, format, source).profile;
}
inline Profile parse_profile(std::string_view text, ProfileFormat format,
                             std::string_view source = "<input>") {
  return parse_election(text, format, source).profile;
}

/// Canonical files start with a `#` comment or the `weight,ranking` header.
ProfileFormat detect_format(std::string_view text);

/// Reads and parses a file, detecting the format unless given. The election id
/// defaults to the file stem. Throws ParseError if the file cannot be read.
Election read_election(const std::filesystem::path& path, std::optional<ProfileFormat> format = std::nullopt);

/// canonical_csv rendering. Weights are written exactly ("3" or "3/2").
void write_profile(std::ostream& out, const Profile& p, std::optional<int> seats = std::nullopt);
std::string write_profile(const Profile& p, std::optional<int> seats = std::nullopt);

}  // namespace sigmavote
