#pragma once

#include <functional>
#include <string>
#include <vector>

#include "umlmeter/behavior.hpp"
#include "umlmeter/ck.hpp"
#include "umlmeter/metric_value.hpp"
#include "umlmeter/structural.hpp"

namespace umlmeter {

// Everything metric evaluation needs besides the element: the immutable
// model plus configuration and evidence derived once per analysis.
struct AnalysisContext {
  const UmlModel& model;
  WeightConfig weights;
  HierarchyOptions hierarchy;
  UsageMap usage;

  static AnalysisContext create(const UmlModel& model,
                                WeightConfig weights = WeightConfig::defaults(),
                                HierarchyOptions hierarchy = {});
};

struct MetricInfo {
  std::string name;
  ElementKind scope;
  std::string description;
  std::string formula;
  std::string reference;  // literature tag for the catalog
  std::function<MetricValue(const AnalysisContext&, const ElementId&)> compute;
};

const std::vector<MetricInfo>& builtin_metrics();
std::vector<const MetricInfo*> metrics_for_scope(ElementKind scope);
const MetricInfo* find_metric(const std::string& name, ElementKind scope);

// Model-level totals (NC, NP, NA, UC1..UC4, cross-package links).
struct ModelSummaryEntry {
  std::string name;
  std::string description;
  std::string reference;
  MetricValue value;
};
std::vector<ModelSummaryEntry> model_summary(const AnalysisContext& ctx);

// The element kinds that get a metric table.
const std::vector<ElementKind>& table_scopes();

}  // namespace umlmeter
