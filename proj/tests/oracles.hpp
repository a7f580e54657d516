// Test-only oracles: brute-force re-derivations of every built-in metric
// from the raw element list (no model indices), plus fixture loading, a raw
// text census of XMI files, and random model generators. Everything here
// deliberately avoids the traversal/index code paths it is used to check.
#pragma once

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "umlmeter/ck.hpp"
#include "umlmeter/metric_value.hpp"
#include "umlmeter/model.hpp"
#include "umlmeter/structural.hpp"

namespace umlmeter::testing {

std::string fixture_path(const std::string& name);
std::string read_file(const std::string& path);
UmlModel load_fixture(const std::string& name);

// Per-kind element counts from a plain text scan of a canonical-dialect
// XMI file (no XML parsing, no ingest code).
std::map<std::string, int> raw_xml_census(const std::string& xml_text);

// Reachability over raw Generalization elements by fixed-point iteration.
std::set<ElementId> oracle_ancestor_set(const UmlModel& model,
                                        const ElementId& cls);
std::set<ElementId> oracle_descendant_set(const UmlModel& model,
                                          const ElementId& cls);

// Usage evidence re-derived independently (dependencies + self-messages).
UsageMap oracle_usage_map(const UmlModel& model);

// Brute-force value of a built-in per-element metric (registry names:
// WMC1, WMC_CC, DIT, ..., CL5, PK1..PK3, ExtPts, ..., States, ...,
// ExceptionHandlers). Throws std::out_of_range for unknown names.
MetricValue oracle_metric(const UmlModel& model, const WeightConfig& weights,
                          const HierarchyOptions& options,
                          const std::string& name, const ElementId& id);

// Model totals re-derived by raw scans: NC, NP, NA, UC1..UC4,
// CrossPackageLinks.
std::map<std::string, MetricValue> oracle_model_summary(
    const UmlModel& model, const WeightConfig& weights);

// Random generalization DAG over n classes (ModelBuilder-built, no XMI).
UmlModel random_hierarchy(std::mt19937& rng, int n_classes);

// Random actor/use-case model; annotations left empty (defaults apply).
UmlModel random_ucp_model(std::mt19937& rng);

}  // namespace umlmeter::testing
