#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "umlmeter/ck.hpp"
#include "umlmeter/rules.hpp"
#include "umlmeter/structural.hpp"
#include "umlmeter/ucp.hpp"

namespace umlmeter {

struct OutputOptions {
  std::string format = "both";  // csv | json | both
  int bins = 0;                 // histogram bin count; 0 disables histograms
};

// The single tool configuration document (JSON). Absent sections keep
// defaults; every effective value is echoed into the outputs.
struct ToolConfig {
  WeightConfig weights = WeightConfig::defaults();
  UcpConfig ucp = UcpConfig::defaults();
  RulesConfig rules = RulesConfig::defaults();
  HierarchyOptions hierarchy;
  std::filesystem::path definitions_path;  // optional DSL definitions file
  std::filesystem::path dialects_dir;      // optional extra dialect tables
  OutputOptions output;

  static ToolConfig defaults() { return ToolConfig{}; }
};

// Throws ConfigError on malformed or inconsistent content. Relative paths
// inside the file resolve against the file's directory. Unknown keys are
// collected into `warnings` when given.
ToolConfig load_config(const std::filesystem::path& path,
                       std::vector<std::string>* warnings = nullptr);
ToolConfig parse_config(const nlohmann::json& doc,
                        const std::filesystem::path& base_dir = {},
                        std::vector<std::string>* warnings = nullptr);

// Complexity annotations: {"use_cases": {name-or-id: level}, "actors": ...}.
Annotations load_annotations(const std::filesystem::path& path);

// The full effective configuration, embedded into every report.
nlohmann::json config_echo(const ToolConfig& config);

}  // namespace umlmeter
