#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "umlmeter/metric_value.hpp"
#include "umlmeter/model.hpp"
#include "umlmeter/registry.hpp"

namespace umlmeter {

// A user-defined metric over model elements: a closed expression algebra
// (counts, aggregations over related elements, arithmetic, references to
// built-in or previously defined metrics). No general-purpose scripting, so
// evaluation is total and analyzable. File format: docs/formats.md.
struct DslPredicate {
  std::string attribute;     // tag key, or "kind"/"name"
  std::string equals;        // attribute-equality test
  std::string name_matches;  // anchored wildcard test on the name
};

struct DslExpr {
  enum class Op {
    Literal,
    Count,      // count(relation, predicates...)
    Sum,        // sum(metric over relation); empty set -> 0
    Min,        // min/max/avg over relation; empty set -> n/a
    Max,
    Avg,
    MetricRef,  // value of another metric on the same element
    Add,
    Sub,
    Mul,
    Div,        // division by zero -> n/a
  };
  Op op = Op::Literal;
  double literal = 0;
  std::string relation;
  std::string metric;
  std::vector<DslPredicate> predicates;
  std::vector<std::unique_ptr<DslExpr>> children;
};

struct MetricDefinition {
  std::string name;
  ElementKind target = ElementKind::Class;
  std::string description;
  std::shared_ptr<const DslExpr> expression;
};

// Relations: ownedAttribute, ownedOperation, ownedClass, ownedPackage,
// ownedUseCase, ownedElement, children, parents, ancestors, descendants,
// referencedClasses, states, transitions, and the global allClasses,
// allPackages, allActors, allUseCases, allStateMachines, allActivities.
bool is_dsl_relation(const std::string& name);

// Parses and validates a definitions document. Definition order is
// irrelevant: references resolve in a second pass against earlier or later
// definitions and built-ins. Throws DslParseError / UnresolvedMetric /
// CyclicDefinition.
std::vector<MetricDefinition> parse_definitions(std::string_view bytes);
std::vector<MetricDefinition> parse_definitions_file(
    const std::filesystem::path& path);

// One value per element of the definition's target kind. Throws
// EvaluationError when a relation does not apply to an element.
std::map<ElementId, MetricValue> evaluate_definition(
    const AnalysisContext& ctx, const MetricDefinition& def,
    const std::vector<MetricDefinition>& all_definitions);

}  // namespace umlmeter
