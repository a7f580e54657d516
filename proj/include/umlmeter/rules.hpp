#pragma once

#include <map>
#include <string>
#include <vector>

#include "umlmeter/model.hpp"

namespace umlmeter {

enum class Severity { Info, Warning, Error };

std::string_view severity_name(Severity severity);

struct RuleFinding {
  std::string rule_id;
  ElementId element;
  Severity severity = Severity::Warning;
  std::string message;
};

struct RuleDescriptor {
  std::string id;
  std::string description;
  Severity default_severity = Severity::Warning;
};

// The built-in catalog:
//   UNNAMED-ELEMENT    classes, attributes, operations, packages, use cases
//                      and stable states without a name (error)
//   ISOLATED-STATE     state with neither incoming nor outgoing transitions
//   NAMING-CONVENTION  configurable anchored patterns per element kind
//   EMPTY-CLASS        no attributes and no operations (info)
//   GOD-CLASS          operation count above a configurable threshold
const std::vector<RuleDescriptor>& builtin_rules();

struct RulesConfig {
  std::vector<std::string> enabled;  // must be non-empty and known
  int god_class_threshold = 20;
  // Element kind name -> anchored wildcard pattern for names.
  std::map<std::string, std::string> naming;
  std::map<std::string, Severity> severity_overrides;

  static RulesConfig defaults();
};

// Deterministic findings ordered by (rule id, element id). Throws
// InvalidRuleset on unknown rule ids, bad kinds or malformed patterns.
std::vector<RuleFinding> run_rules(const UmlModel& model,
                                   const RulesConfig& config);

}  // namespace umlmeter
