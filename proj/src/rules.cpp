#include "umlmeter/rules.hpp"

#include <algorithm>

#include "umlmeter/errors.hpp"
#include "umlmeter/pattern.hpp"

namespace umlmeter {

namespace {

constexpr ElementKind kUnnamedKinds[] = {
    ElementKind::Class,   ElementKind::Attribute, ElementKind::Operation,
    ElementKind::Package, ElementKind::UseCase,   ElementKind::State,
};

bool is_stable_state(const ModelElement& e) {
  auto subkind = e.tags.find("subkind");
  return subkind == e.tags.end() || subkind->second == "normal";
}

std::string display_name(const ModelElement& e) {
  return e.name.empty() ? "(id " + e.id + ")" : "'" + e.name + "'";
}

Severity severity_for(const RulesConfig& config, const RuleDescriptor& rule) {
  auto it = config.severity_overrides.find(rule.id);
  return it == config.severity_overrides.end() ? rule.default_severity
                                               : it->second;
}

}  // namespace

std::string_view severity_name(Severity severity) {
  switch (severity) {
    case Severity::Info:
      return "info";
    case Severity::Warning:
      return "warning";
    case Severity::Error:
      return "error";
  }
  return "warning";
}

const std::vector<RuleDescriptor>& builtin_rules() {
  static const std::vector<RuleDescriptor> rules = {
      {"UNNAMED-ELEMENT",
       "classes, attributes, operations, packages, use cases and states "
       "must carry a name",
       Severity::Error},
      {"ISOLATED-STATE",
       "a state should have at least one incoming or outgoing transition",
       Severity::Warning},
      {"NAMING-CONVENTION",
       "element names must match the configured pattern for their kind",
       Severity::Warning},
      {"EMPTY-CLASS", "a class with no attributes and no operations",
       Severity::Info},
      {"GOD-CLASS",
       "a class with more operations than the configured threshold",
       Severity::Warning},
  };
  return rules;
}

RulesConfig RulesConfig::defaults() {
  RulesConfig c;
  for (const RuleDescriptor& rule : builtin_rules()) c.enabled.push_back(rule.id);
  c.naming = {
      {"Class", "[A-Z]*"},
      {"UseCase", "[A-Z]*"},
      {"Attribute", "[a-z]*"},
      {"Operation", "[a-z]*"},
  };
  return c;
}

std::vector<RuleFinding> run_rules(const UmlModel& model,
                                   const RulesConfig& config) {
  if (config.enabled.empty()) {
    throw InvalidRuleset("the ruleset is empty");
  }
  const std::vector<RuleDescriptor>& catalog = builtin_rules();
  auto descriptor = [&](const std::string& id) -> const RuleDescriptor& {
    auto it = std::find_if(catalog.begin(), catalog.end(),
                           [&](const RuleDescriptor& r) { return r.id == id; });
    if (it == catalog.end()) {
      throw InvalidRuleset("unknown rule id '" + id + "'");
    }
    return *it;
  };
  for (const auto& [kind, pattern] : config.naming) {
    if (!kind_from_name(kind)) {
      throw InvalidRuleset("naming convention for unknown element kind '" +
                           kind + "'");
    }
    try {
      validate_glob(pattern);
    } catch (const ConfigError& e) {
      throw InvalidRuleset(e.what());
    }
  }

  std::vector<RuleFinding> findings;
  auto emit = [&](const RuleDescriptor& rule, const ElementId& element,
                  std::string message) {
    findings.push_back({rule.id, element, severity_for(config, rule),
                        std::move(message)});
  };

  for (const std::string& id : config.enabled) {
    const RuleDescriptor& rule = descriptor(id);
    if (rule.id == "UNNAMED-ELEMENT") {
      for (ElementKind kind : kUnnamedKinds) {
        for (const ElementId& element : model.of_kind(kind)) {
          const ModelElement& e = model.at(element);
          if (kind == ElementKind::State && !is_stable_state(e)) continue;
          if (e.name.empty()) {
            emit(rule, element,
                 "unnamed " + std::string(kind_name(kind)) + " (id " +
                     element + ")");
          }
        }
      }
    } else if (rule.id == "ISOLATED-STATE") {
      for (const ElementId& element : model.of_kind(ElementKind::State)) {
        const ModelElement& e = model.at(element);
        if (!is_stable_state(e)) continue;
        if (model.transitions_from(element).empty() &&
            model.transitions_to(element).empty()) {
          emit(rule, element,
               "state " + display_name(e) +
                   " has no incoming or outgoing transitions");
        }
      }
    } else if (rule.id == "NAMING-CONVENTION") {
      for (const auto& [kind_text, pattern] : config.naming) {
        ElementKind kind = *kind_from_name(kind_text);
        for (const ElementId& element : model.of_kind(kind)) {
          const ModelElement& e = model.at(element);
          if (e.name.empty()) continue;  // UNNAMED-ELEMENT's concern
          if (!glob_match(pattern, e.name)) {
            emit(rule, element,
                 kind_text + " name '" + e.name + "' does not match pattern '" +
                     pattern + "'");
          }
        }
      }
    } else if (rule.id == "EMPTY-CLASS") {
      for (const ElementId& element : model.of_kind(ElementKind::Class)) {
        if (model.owned_of_kind(element, ElementKind::Attribute).empty() &&
            model.owned_of_kind(element, ElementKind::Operation).empty()) {
          emit(rule, element,
               "class " + display_name(model.at(element)) +
                   " has no attributes and no operations");
        }
      }
    } else if (rule.id == "GOD-CLASS") {
      for (const ElementId& element : model.of_kind(ElementKind::Class)) {
        int ops = static_cast<int>(
            model.owned_of_kind(element, ElementKind::Operation).size());
        if (ops > config.god_class_threshold) {
          emit(rule, element,
               "class " + display_name(model.at(element)) + " has " +
                   std::to_string(ops) + " operations (threshold " +
                   std::to_string(config.god_class_threshold) + ")");
        }
      }
    }
  }

  std::sort(findings.begin(), findings.end(),
            [](const RuleFinding& a, const RuleFinding& b) {
              return std::tie(a.rule_id, a.element) <
                     std::tie(b.rule_id, b.element);
            });
  return findings;
}

}  // namespace umlmeter
