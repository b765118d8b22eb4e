#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace sigmavote {

/// Where in an input an error was detected. `line` is 1-based.
struct Location {
  std::string source;
  std::size_t line = 0;
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what, std::optional<Location> where = std::nullopt);

  const std::optional<Location>& where() const noexcept { return where_; }

 private:
  std::optional<Location> where_;
};

/// Unknown candidate, duplicate or empty candidate names.
class RosterError : public Error {
 public:
  using Error::Error;
};

/// A ballot lists a candidate twice.
class BallotError : public Error {
 public:
  using Error::Error;
};

/// Numeric value out of its domain (non-positive weight, n = 0, ...).
class ValueError : public Error {
 public:
  using Error::Error;
};

/// Caller passed arguments that violate a precondition (a == b, mismatched rosters).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Invalid rule or run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text that fits none of the more specific categories.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A voting rule failed while being evaluated; carries the rule name.
class RuleError : public Error {
 public:
  RuleError(std::string rule, const std::string& what);
  const std::string& rule() const noexcept { return rule_; }

 private:
  std::string rule_;
};

}  // namespace sigmavote
