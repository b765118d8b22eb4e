#include "manifest.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace sigmavote::cli {

namespace {

void mix(std::uint64_t& h, std::string_view s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  // field separator so ("ab","c") and ("a","bc") differ
  h ^= 0xff;
  h *= 0x100000001b3ULL;
}

std::string utc_timestamp() {
  std::time_t t = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string RunManifest::config_hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  mix(h, command);
  for (const auto& in : inputs) mix(h, in);
  mix(h, rules);
  mix(h, std::to_string(seed));
  for (const auto& [k, v] : config) {
    mix(h, k);
    mix(h, v);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["outputs"] = outputs;
  j["rules"] = rules;
  j["seed"] = seed;
  j["config"] = config;
  j["config_hash"] = config_hash();
  j["tool_version"] = kVersion;
  j["timestamp"] = utc_timestamp();
  return j.dump(2);
}

std::filesystem::path manifest_path_for(const std::filesystem::path& output) {
  auto p = output;
  p += ".manifest.json";
  return p;
}

void write_manifest(const std::filesystem::path& output, const RunManifest& manifest) {
  auto out = open_output(manifest_path_for(output));
  out << manifest.to_json() << '\n';
}

}  // namespace sigmavote::cli
