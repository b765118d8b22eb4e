#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace sigmavote::cli {

/// Provenance record written next to every output file as
/// `<output>.manifest.json`. The CSV files themselves stay schema-plain.
struct RunManifest {
  std::string command;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::string rules;
  std::uint64_t seed = 0;
  /// Command-specific settings, echoed verbatim.
  std::map<std::string, std::string> config;

  /// FNV-1a over command, inputs, rules, seed and config; stable across runs.
  std::string config_hash() const;
  std::string to_json() const;
};

std::filesystem::path manifest_path_for(const std::filesystem::path& output);
/// Writes the manifest for `output`. The timestamp honours SOURCE_DATE_EPOCH.
void write_manifest(const std::filesystem::path& output, const RunManifest& manifest);

}  // namespace sigmavote::cli
