#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "umlmeter/dsl.hpp"
#include "umlmeter/metric_value.hpp"
#include "umlmeter/registry.hpp"
#include "umlmeter/rules.hpp"

namespace umlmeter {

// The per-scope table: one row per model element, one column per metric.
// Rows are ordered by qualified name (then id) so output is deterministic.
struct MetricTable {
  struct Row {
    ElementId id;
    std::string name;
    std::string qualified_name;
  };

  ElementKind scope = ElementKind::Class;
  std::vector<std::string> columns;
  std::vector<Row> rows;
  std::vector<std::vector<MetricValue>> values;  // [row][column]

  int column_index(const std::string& name) const;  // -1 when absent
  // Appends a column; the map must cover every row id. Throws ScopeError.
  void add_column(const std::string& name,
                  const std::map<ElementId, MetricValue>& by_element);
};

// Builds the table for a scope. An empty metric list means every built-in
// registered for the scope; an unknown name throws ScopeError.
MetricTable build_table(const AnalysisContext& ctx, ElementKind scope,
                        const std::vector<std::string>& metrics = {});

struct Histogram {
  struct Bin {
    double lower = 0;
    double upper = 0;
    int count = 0;
  };
  std::string metric;
  std::vector<Bin> bins;  // contiguous, non-overlapping, equal width
  int unavailable_count = 0;
};

// Equal-width bins spanning [min, max] of the available values; a
// single-valued column yields one bin. Throws NoData when every value is
// unavailable, ScopeError when the column does not exist.
Histogram histogram(const MetricTable& table, const std::string& metric,
                    int bin_count);

// Cross-revision comparison, matched by qualified name (ids are regenerated
// across tool exports). Name collisions are reported, never guessed.
struct ComparisonReport {
  struct MatchedRow {
    std::string qualified_name;
    std::vector<MetricValue> old_values;
    std::vector<MetricValue> new_values;
    std::vector<MetricValue> deltas;  // new - old
  };
  struct Entry {
    std::string qualified_name;
    ElementId id;
  };
  struct ColumnSummary {
    std::string metric;
    int changed = 0;  // rows with a non-zero available delta
    MetricValue min_delta;
    MetricValue max_delta;
    MetricValue mean_delta;
  };

  ElementKind scope = ElementKind::Class;
  std::vector<std::string> columns;
  std::vector<MatchedRow> matched;
  std::vector<Entry> added;
  std::vector<Entry> removed;
  std::vector<std::string> collisions;
  std::vector<ColumnSummary> summaries;
};

// Requires identical scope and column sets; throws ScopeError otherwise.
ComparisonReport compare(const MetricTable& old_table,
                         const MetricTable& new_table);

// --- catalog ----------------------------------------------------------------

struct CatalogEntry {
  std::string name;
  std::string category;  // "metric", "model metric", "rule", "custom metric"
  std::string scope;
  std::string description;
  std::string formula;
  std::string reference;
};

std::vector<CatalogEntry> catalog(
    const RulesConfig& rules,
    const std::vector<MetricDefinition>& custom_definitions = {});

// --- serialization ----------------------------------------------------------
// Two formats, both with stable field order: delimited text for
// spreadsheets and JSON for programmatic consumption. `config_echo` is
// embedded so any report reproduces its configuration.

std::string table_to_csv(const MetricTable& table,
                         const nlohmann::json& config_echo);
MetricTable table_from_csv(std::string_view text);

nlohmann::json table_to_json(const MetricTable& table,
                             const nlohmann::json& config_echo);
MetricTable table_from_json(const nlohmann::json& doc);

std::string histogram_to_csv(const Histogram& histogram);
nlohmann::json histogram_to_json(const Histogram& histogram);

std::string comparison_to_csv(const ComparisonReport& report);
nlohmann::json comparison_to_json(const ComparisonReport& report);

std::string catalog_to_text(const std::vector<CatalogEntry>& entries,
                            const nlohmann::json& config_echo);
nlohmann::json catalog_to_json(const std::vector<CatalogEntry>& entries,
                               const nlohmann::json& config_echo);

std::string summary_to_csv(const std::vector<ModelSummaryEntry>& summary,
                           const nlohmann::json& config_echo);
nlohmann::json summary_to_json(const std::vector<ModelSummaryEntry>& summary,
                               const nlohmann::json& config_echo);

}  // namespace umlmeter
