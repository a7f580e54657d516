#include "umlmeter/ucp.hpp"

#include <algorithm>
#include <regex>

#include "umlmeter/errors.hpp"

namespace umlmeter {

namespace {

const std::vector<std::string>& usecase_levels() {
  static const std::vector<std::string> levels = {"low", "medium", "high"};
  return levels;
}

const std::vector<std::string>& actor_levels() {
  static const std::vector<std::string> levels = {"simple", "average",
                                                  "complex"};
  return levels;
}

// Looks up an annotation by element id first, then by name.
const std::string* find_annotation(
    const std::map<std::string, std::string>& table, const ModelElement& e) {
  auto it = table.find(e.id);
  if (it != table.end()) return &it->second;
  if (!e.name.empty()) {
    it = table.find(e.name);
    if (it != table.end()) return &it->second;
  }
  return nullptr;
}

std::string classify(const UmlModel& model, const ElementId& id,
                     ElementKind kind,
                     const std::map<std::string, std::string>& table,
                     const std::vector<std::string>& levels,
                     const std::string& fallback,
                     std::vector<std::string>* warnings) {
  const ModelElement& e = model.at(id);
  if (e.kind != kind) {
    throw WrongElementKind("'" + id + "' is not a " +
                           std::string(kind_name(kind)) + " (kind " +
                           std::string(kind_name(e.kind)) + ")");
  }
  if (const std::string* annotated = find_annotation(table, e)) {
    if (std::find(levels.begin(), levels.end(), *annotated) == levels.end()) {
      throw InvalidAnnotation("complexity '" + *annotated + "' for '" +
                              (e.name.empty() ? e.id : e.name) +
                              "' is not one of low/medium/high or "
                              "simple/average/complex");
    }
    return *annotated;
  }
  if (warnings) {
    warnings->push_back("no complexity annotation for " +
                        std::string(kind_name(kind)) + " '" +
                        (e.name.empty() ? e.id : e.name) + "'; defaulting to " +
                        fallback);
  }
  return fallback;
}

double weighted_rating_sum(const std::vector<UcpFactor>& factors) {
  double sum = 0;
  for (const UcpFactor& f : factors) sum += f.weight * f.rating;
  return sum;
}

}  // namespace

UcpConfig UcpConfig::defaults() {
  UcpConfig c;
  c.actor_weights = {{"simple", 1.0}, {"average", 2.0}, {"complex", 3.0}};
  c.usecase_weights = {{"low", 5.0}, {"medium", 10.0}, {"high", 15.0}};
  // Standard technical/environment factor tables; ratings default to the
  // scale midpoint and are meant to be adjusted per project.
  c.technical_factors = {
      {"Distributed system", 2.0, 3},
      {"Response or throughput performance objectives", 1.0, 3},
      {"End-user efficiency", 1.0, 3},
      {"Complex internal processing", 1.0, 3},
      {"Reusable code", 1.0, 3},
      {"Easy to install", 0.5, 3},
      {"Easy to use", 0.5, 3},
      {"Portable", 2.0, 3},
      {"Easy to change", 1.0, 3},
      {"Concurrent", 1.0, 3},
      {"Special security features", 1.0, 3},
      {"Direct access for third parties", 1.0, 3},
      {"Special user training facilities", 1.0, 3},
  };
  c.environment_factors = {
      {"Familiar with the development process", 1.5, 3},
      {"Application experience", 0.5, 3},
      {"Object-oriented experience", 1.0, 3},
      {"Lead analyst capability", 0.5, 3},
      {"Motivation", 1.0, 3},
      {"Stable requirements", 2.0, 3},
      {"Part-time staff", -1.0, 3},
      {"Difficult programming language", -1.0, 3},
  };
  return c;
}

void UcpConfig::validate() const {
  for (const std::string& level : actor_levels()) {
    auto it = actor_weights.find(level);
    if (it == actor_weights.end()) {
      throw InvalidConfig("actor weight table is missing level '" + level +
                          "'");
    }
    if (it->second < 0) {
      throw InvalidConfig("actor weight for '" + level + "' must be >= 0");
    }
  }
  for (const std::string& level : usecase_levels()) {
    auto it = usecase_weights.find(level);
    if (it == usecase_weights.end()) {
      throw InvalidConfig("use-case weight table is missing level '" + level +
                          "'");
    }
    if (it->second < 0) {
      throw InvalidConfig("use-case weight for '" + level + "' must be >= 0");
    }
  }
  for (const auto* factors : {&technical_factors, &environment_factors}) {
    for (const UcpFactor& f : *factors) {
      if (f.rating < 0 || f.rating > 5) {
        throw InvalidConfig("factor rating for '" + f.name +
                            "' must be within [0, 5]");
      }
    }
  }
  if (hours_per_ucp <= 0) {
    throw InvalidConfig("hours_per_ucp must be positive");
  }
}

std::string classify_usecase(const UmlModel& model, const ElementId& usecase,
                             const Annotations& annotations,
                             std::vector<std::string>* warnings) {
  return classify(model, usecase, ElementKind::UseCase, annotations.usecases,
                  usecase_levels(), "medium", warnings);
}

std::string classify_actor(const UmlModel& model, const ElementId& actor,
                           const Annotations& annotations,
                           std::vector<std::string>* warnings) {
  return classify(model, actor, ElementKind::Actor, annotations.actors,
                  actor_levels(), "average", warnings);
}

double tcf(const UcpConfig& config) {
  config.validate();
  return 0.6 + 0.01 * weighted_rating_sum(config.technical_factors);
}

double ecf(const UcpConfig& config) {
  config.validate();
  return 1.4 - 0.03 * weighted_rating_sum(config.environment_factors);
}

UcpResult estimate(const UmlModel& model, const UcpConfig& config,
                   const Annotations& annotations, const UcpFilter& filter) {
  config.validate();

  std::optional<std::regex> pattern;
  if (!filter.name_pattern.empty()) {
    try {
      pattern.emplace(filter.name_pattern);
    } catch (const std::regex_error& e) {
      throw InvalidFilter("invalid use-case filter pattern '" +
                          filter.name_pattern + "': " + e.what());
    }
  }

  std::vector<ElementId> selected;
  for (const ElementId& usecase : model.of_kind(ElementKind::UseCase)) {
    if (!filter.ids.empty() &&
        std::find(filter.ids.begin(), filter.ids.end(), usecase) ==
            filter.ids.end()) {
      continue;
    }
    if (pattern && !std::regex_search(model.at(usecase).name, *pattern)) {
      continue;
    }
    selected.push_back(usecase);
  }
  if (selected.empty()) {
    throw NothingToEstimate("no use case left after filtering (model has " +
                            std::to_string(
                                model.kind_count(ElementKind::UseCase)) +
                            ")");
  }

  UcpResult r;
  r.currency = config.currency;
  for (const ElementId& actor : model.of_kind(ElementKind::Actor)) {
    UcpResult::Contribution c;
    c.id = actor;
    c.name = model.at(actor).name;
    c.annotated = find_annotation(annotations.actors, model.at(actor)) != nullptr;
    c.complexity = classify_actor(model, actor, annotations, &r.warnings);
    c.weight = config.actor_weights.at(c.complexity);
    r.uaw += c.weight;
    r.actors.push_back(std::move(c));
  }
  for (const ElementId& usecase : selected) {
    UcpResult::Contribution c;
    c.id = usecase;
    c.name = model.at(usecase).name;
    c.annotated =
        find_annotation(annotations.usecases, model.at(usecase)) != nullptr;
    c.complexity = classify_usecase(model, usecase, annotations, &r.warnings);
    c.weight = config.usecase_weights.at(c.complexity);
    r.uucw += c.weight;
    r.usecases.push_back(std::move(c));
  }

  r.uucp = r.uaw + r.uucw;
  r.tcf = tcf(config);
  r.ecf = ecf(config);
  r.ucp = r.uucp * r.tcf * r.ecf;
  r.hours = r.ucp * config.hours_per_ucp;
  r.cost = r.hours * config.hourly_rate;
  return r;
}

}  // namespace umlmeter
