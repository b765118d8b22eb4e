#include "sigmavote/errors.hpp"

namespace sigmavote {

namespace {

std::string decorate(const std::string& what, const std::optional<Location>& where) {
  if (!where) return what;
  return where->source + ":" + std::to_string(where->line) + ": " + what;
}

}  // namespace

Error::Error(const std::string& what, std::optional<Location> where)
    : std::runtime_error(decorate(what, where)), where_(std::move(where)) {}

RuleError::RuleError(std::string rule, const std::string& what)
    : Error("rule '" + rule + "': " + what), rule_(std::move(rule)) {}

}  // namespace sigmavote
