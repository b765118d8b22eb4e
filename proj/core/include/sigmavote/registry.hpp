#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sigmavote/rules.hpp"

namespace sigmavote {

/// Builds a rule from its textual name:
///   borda, 3-approval, 2-approval, plurality, optimal-u,
///   stv            (seats from `default_seats`, i.e. the election file),
///   stv:k=N        (fixed seat count),
///   dictator:i=N   (voter N, 0-based).
/// Throws ConfigError for unknown names, malformed parameters, or a bare `stv`
/// without a seat count.
VotingRule make_rule(std::string_view spec, std::optional<int> default_seats = std::nullopt);

/// Splits a comma-separated list and builds each rule. Whitespace around
/// names is ignored; an empty list is a ConfigError.
std::vector<VotingRule> make_rules(std::string_view list, std::optional<int> default_seats = std::nullopt);

/// borda, 3-approval, 2-approval, plurality, stv: the default rule set.
std::vector<std::string> standard_rule_names();

/// Short column label used in text tables ("Borda", "3-App", ...); falls back to
/// the rule name.
std::string display_label(std::string_view rule_name);

}  // namespace sigmavote
