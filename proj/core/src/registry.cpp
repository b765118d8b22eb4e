#include "sigmavote/registry.hpp"

#include <charconv>

#include "sigmavote/errors.hpp"
#include "sigmavote/optimizer.hpp"

namespace sigmavote {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

long parse_parameter(std::string_view spec, std::string_view prefix) {
  const std::string_view digits = spec.substr(prefix.size());
  long value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || value < 0) {
    throw ConfigError("malformed rule parameter in '" + std::string(spec) + "'");
  }
  return value;
}

}  // namespace

VotingRule make_rule(std::string_view spec, std::optional<int> default_seats) {
  spec = trim(spec);
  if (spec == "borda") return make_borda_rule();
  if (spec == "3-approval") return make_three_approval_rule();
  if (spec == "2-approval") return make_two_approval_rule();
  if (spec == "plurality") return make_plurality_rule();
  if (spec == "optimal-u") return make_optimal_u_rule();
  if (spec == "stv") {
    if (!default_seats) throw ConfigError("rule 'stv' needs a seat count; use stv:k=N or a file with '# seats:'");
    return make_stv_rule(*default_seats, "stv");
  }
  if (spec.starts_with("stv:k=")) {
    const long k = parse_parameter(spec, "stv:k=");
    if (k < 1 || k > 1000000) throw ConfigError("STV seats out of range in '" + std::string(spec) + "'");
    return make_stv_rule(static_cast<int>(k));
  }
  if (spec.starts_with("dictator:i=")) {
    return make_dictatorship_rule(static_cast<std::size_t>(parse_parameter(spec, "dictator:i=")));
  }
  throw ConfigError("unknown rule '" + std::string(spec) + "'");
}

std::vector<VotingRule> make_rules(std::string_view list, std::optional<int> default_seats) {
  std::vector<VotingRule> rules;
  while (true) {
    const auto comma = list.find(',');
    const std::string_view item = trim(list.substr(0, comma));
    if (!item.empty()) rules.push_back(make_rule(item, default_seats));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  if (rules.empty()) throw ConfigError("rule list is empty");
  return rules;
}

std::vector<std::string> standard_rule_names() { return {"borda", "3-approval", "2-approval", "plurality", "stv"}; }

std::string display_label(std::string_view rule_name) {
  if (rule_name == "borda") return "Borda";
  if (rule_name == "3-approval") return "3-App";
  if (rule_name == "2-approval") return "2-App";
  if (rule_name == "plurality") return "Plurality";
  if (rule_name == "stv" || rule_name.starts_with("stv:")) return "STV";
  if (rule_name == "optimal-u") return "Optimal-U";
  return std::string(rule_name);
}

}  // namespace sigmavote
