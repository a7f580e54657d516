#include "umlmeter/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "umlmeter/errors.hpp"

namespace umlmeter {

namespace {

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

void sort_rows(MetricTable& table) {
  std::vector<std::size_t> order(table.rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(table.rows[a].qualified_name, table.rows[a].id) <
           std::tie(table.rows[b].qualified_name, table.rows[b].id);
  });
  std::vector<MetricTable::Row> rows;
  std::vector<std::vector<MetricValue>> values;
  rows.reserve(order.size());
  values.reserve(order.size());
  for (std::size_t i : order) {
    rows.push_back(std::move(table.rows[i]));
    values.push_back(std::move(table.values[i]));
  }
  table.rows = std::move(rows);
  table.values = std::move(values);
}

nlohmann::json value_to_json(const MetricValue& v) {
  if (!v.available()) return "n/a";
  double d = v.get();
  if (d == std::floor(d) && std::fabs(d) < 9.0e15) {
    return static_cast<std::int64_t>(d);
  }
  return d;
}

MetricValue value_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "n/a") return MetricValue::unavailable();
    throw ConfigError("malformed metric value '" + j.get<std::string>() + "'");
  }
  return MetricValue(j.get<double>());
}

}  // namespace

int MetricTable::column_index(const std::string& name) const {
  auto it = std::find(columns.begin(), columns.end(), name);
  return it == columns.end() ? -1
                             : static_cast<int>(it - columns.begin());
}

void MetricTable::add_column(const std::string& name,
                             const std::map<ElementId, MetricValue>& by_element) {
  if (column_index(name) >= 0) {
    throw ScopeError("table already has a column '" + name + "'");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto it = by_element.find(rows[i].id);
    if (it == by_element.end()) {
      throw ScopeError("column '" + name + "' has no value for element '" +
                       rows[i].id + "'");
    }
    values[i].push_back(it->second);
  }
  columns.push_back(name);
}

MetricTable build_table(const AnalysisContext& ctx, ElementKind scope,
                        const std::vector<std::string>& metrics) {
  MetricTable table;
  table.scope = scope;

  std::vector<const MetricInfo*> selected;
  if (metrics.empty()) {
    selected = metrics_for_scope(scope);
  } else {
    for (const std::string& name : metrics) {
      const MetricInfo* info = find_metric(name, scope);
      if (!info) {
        throw ScopeError("metric '" + name + "' is not defined for scope " +
                         std::string(kind_name(scope)));
      }
      selected.push_back(info);
    }
  }
  for (const MetricInfo* info : selected) table.columns.push_back(info->name);

  for (const ElementId& id : ctx.model.of_kind(scope)) {
    MetricTable::Row row;
    row.id = id;
    row.name = ctx.model.at(id).name;
    row.qualified_name = ctx.model.qualified_name(id);
    table.rows.push_back(std::move(row));
    std::vector<MetricValue> values;
    values.reserve(selected.size());
    for (const MetricInfo* info : selected) {
      values.push_back(info->compute(ctx, id));
    }
    table.values.push_back(std::move(values));
  }
  sort_rows(table);
  return table;
}

Histogram histogram(const MetricTable& table, const std::string& metric,
                    int bin_count) {
  int col = table.column_index(metric);
  if (col < 0) {
    throw ScopeError("table has no column '" + metric + "'");
  }
  if (bin_count < 1) {
    throw ScopeError("bin count must be >= 1");
  }

  Histogram h;
  h.metric = metric;
  std::vector<double> available;
  for (const std::vector<MetricValue>& row : table.values) {
    const MetricValue& v = row[col];
    if (v.available()) {
      available.push_back(v.get());
    } else {
      ++h.unavailable_count;
    }
  }
  if (available.empty()) {
    throw NoData("column '" + metric + "' has no available values");
  }

  auto [min_it, max_it] = std::minmax_element(available.begin(),
                                              available.end());
  double lo = *min_it, hi = *max_it;
  if (lo == hi) {
    h.bins.push_back({lo, hi, static_cast<int>(available.size())});
    return h;
  }
  double width = (hi - lo) / bin_count;
  for (int i = 0; i < bin_count; ++i) {
    h.bins.push_back({lo + i * width, lo + (i + 1) * width, 0});
  }
  h.bins.back().upper = hi;
  for (double v : available) {
    int index = static_cast<int>((v - lo) / width);
    index = std::clamp(index, 0, bin_count - 1);
    ++h.bins[index].count;
  }
  return h;
}

ComparisonReport compare(const MetricTable& old_table,
                         const MetricTable& new_table) {
  if (old_table.scope != new_table.scope) {
    throw ScopeError("cannot compare tables of different scopes (" +
                     std::string(kind_name(old_table.scope)) + " vs " +
                     std::string(kind_name(new_table.scope)) + ")");
  }
  if (old_table.columns != new_table.columns) {
    throw ScopeError("cannot compare tables with different metric sets");
  }

  ComparisonReport report;
  report.scope = old_table.scope;
  report.columns = old_table.columns;

  auto index_by_qname = [&](const MetricTable& table,
                            std::vector<std::string>& collisions) {
    std::map<std::string, std::size_t> index;
    std::set<std::string> colliding;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      const std::string& qname = table.rows[i].qualified_name;
      if (!index.emplace(qname, i).second) colliding.insert(qname);
    }
    for (const std::string& qname : colliding) {
      index.erase(qname);
      collisions.push_back("ambiguous qualified name '" + qname + "'");
    }
    return index;
  };
  auto old_index = index_by_qname(old_table, report.collisions);
  auto new_index = index_by_qname(new_table, report.collisions);
  std::sort(report.collisions.begin(), report.collisions.end());
  report.collisions.erase(
      std::unique(report.collisions.begin(), report.collisions.end()),
      report.collisions.end());

  for (const auto& [qname, old_row] : old_index) {
    auto it = new_index.find(qname);
    if (it == new_index.end()) {
      report.removed.push_back({qname, old_table.rows[old_row].id});
      continue;
    }
    ComparisonReport::MatchedRow row;
    row.qualified_name = qname;
    row.old_values = old_table.values[old_row];
    row.new_values = new_table.values[it->second];
    for (std::size_t c = 0; c < row.old_values.size(); ++c) {
      row.deltas.push_back(row.new_values[c] - row.old_values[c]);
    }
    report.matched.push_back(std::move(row));
  }
  for (const auto& [qname, new_row] : new_index) {
    if (!old_index.count(qname)) {
      report.added.push_back({qname, new_table.rows[new_row].id});
    }
  }

  for (std::size_t c = 0; c < report.columns.size(); ++c) {
    ComparisonReport::ColumnSummary summary;
    summary.metric = report.columns[c];
    double min = 0, max = 0, sum = 0;
    int available = 0;
    for (const ComparisonReport::MatchedRow& row : report.matched) {
      const MetricValue& delta = row.deltas[c];
      if (!delta.available()) continue;
      double d = delta.get();
      if (available == 0) {
        min = max = d;
      } else {
        min = std::min(min, d);
        max = std::max(max, d);
      }
      sum += d;
      ++available;
      if (d != 0) ++summary.changed;
    }
    if (available > 0) {
      summary.min_delta = MetricValue(min);
      summary.max_delta = MetricValue(max);
      summary.mean_delta = MetricValue(sum / available);
    }
    report.summaries.push_back(std::move(summary));
  }
  return report;
}

std::vector<CatalogEntry> catalog(
    const RulesConfig& rules,
    const std::vector<MetricDefinition>& custom_definitions) {
  std::vector<CatalogEntry> entries;
  for (const MetricInfo& metric : builtin_metrics()) {
    entries.push_back({metric.name, "metric",
                       std::string(kind_name(metric.scope)),
                       metric.description, metric.formula, metric.reference});
  }
  entries.push_back({"NC", "model metric", "Model", "number of classes",
                     "count of Class elements", "Marchesi (1998)"});
  entries.push_back({"NP", "model metric", "Model", "number of packages",
                     "count of Package elements", "Marchesi (1998)"});
  entries.push_back({"NA", "model metric", "Model",
                     "number of actors of the system",
                     "count of Actor elements", "Marchesi (1998)"});
  entries.push_back({"UC1", "model metric", "Model",
                     "number of use cases in the system",
                     "count of UseCase elements", "Marchesi (1998)"});
  entries.push_back({"UC2", "model metric", "Model",
                     "communications among use cases and actors",
                     "actor/use-case association ends, duplicates included",
                     "Marchesi (1998)"});
  entries.push_back({"UC3", "model metric", "Model",
                     "communications without redundancies",
                     "distinct (actor, use case) pairs", "Marchesi (1998)"});
  entries.push_back({"UC4", "model metric", "Model",
                     "global complexity of the system",
                     "alpha*UC1 + beta*UC2 + gamma*UC3 (configured weights)",
                     "Marchesi (1998)"});
  for (const RuleDescriptor& rule : builtin_rules()) {
    std::string formula = rule.id == "GOD-CLASS"
                              ? "NumOps > " +
                                    std::to_string(rules.god_class_threshold)
                              : "";
    entries.push_back({rule.id, "rule", "-", rule.description, formula,
                       "SDMetrics-style design rules"});
  }
  for (const MetricDefinition& def : custom_definitions) {
    entries.push_back({def.name, "custom metric",
                       std::string(kind_name(def.target)), def.description,
                       "user-defined expression", "user definition"});
  }
  return entries;
}

// --- serialization ----------------------------------------------------------

std::string table_to_csv(const MetricTable& table,
                         const nlohmann::json& config_echo) {
  std::ostringstream out;
  out << "# scope: " << kind_name(table.scope) << "\n";
  out << "# config: " << config_echo.dump() << "\n";
  out << "id,name,qualified_name";
  for (const std::string& column : table.columns) {
    out << ',' << csv_quote(column);
  }
  out << '\n';
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const MetricTable::Row& row = table.rows[i];
    out << csv_quote(row.id) << ',' << csv_quote(row.name) << ','
        << csv_quote(row.qualified_name);
    for (const MetricValue& v : table.values[i]) out << ',' << v.str();
    out << '\n';
  }
  return out.str();
}

MetricTable table_from_csv(std::string_view text) {
  MetricTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto scope_pos = line.find("# scope: ");
      if (scope_pos == 0) {
        auto kind = kind_from_name(line.substr(9));
        if (kind) table.scope = *kind;
      }
      continue;
    }
    std::vector<std::string> fields = csv_split(line);
    if (!have_header) {
      if (fields.size() < 3 || fields[0] != "id") {
        throw ConfigError("malformed table header: " + line);
      }
      table.columns.assign(fields.begin() + 3, fields.end());
      have_header = true;
      continue;
    }
    if (fields.size() != table.columns.size() + 3) {
      throw ConfigError("malformed table row: " + line);
    }
    table.rows.push_back({fields[0], fields[1], fields[2]});
    std::vector<MetricValue> values;
    for (std::size_t i = 3; i < fields.size(); ++i) {
      values.push_back(MetricValue::parse(fields[i]));
    }
    table.values.push_back(std::move(values));
  }
  if (!have_header) throw ConfigError("table file has no header");
  return table;
}

nlohmann::json table_to_json(const MetricTable& table,
                             const nlohmann::json& config_echo) {
  nlohmann::json doc;
  doc["scope"] = std::string(kind_name(table.scope));
  doc["config"] = config_echo;
  doc["columns"] = table.columns;
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    nlohmann::json row;
    row["id"] = table.rows[i].id;
    row["name"] = table.rows[i].name;
    row["qualified_name"] = table.rows[i].qualified_name;
    nlohmann::json values = nlohmann::json::object();
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      values[table.columns[c]] = value_to_json(table.values[i][c]);
    }
    row["values"] = values;
    rows.push_back(row);
  }
  doc["rows"] = rows;
  return doc;
}

MetricTable table_from_json(const nlohmann::json& doc) {
  MetricTable table;
  auto kind = kind_from_name(doc.at("scope").get<std::string>());
  if (!kind) {
    throw ConfigError("unknown table scope '" +
                      doc.at("scope").get<std::string>() + "'");
  }
  table.scope = *kind;
  for (const auto& column : doc.at("columns")) {
    table.columns.push_back(column.get<std::string>());
  }
  for (const auto& row : doc.at("rows")) {
    table.rows.push_back({row.at("id").get<std::string>(),
                          row.at("name").get<std::string>(),
                          row.at("qualified_name").get<std::string>()});
    std::vector<MetricValue> values;
    for (const std::string& column : table.columns) {
      values.push_back(value_from_json(row.at("values").at(column)));
    }
    table.values.push_back(std::move(values));
  }
  return table;
}

std::string histogram_to_csv(const Histogram& histogram) {
  std::ostringstream out;
  out << "# metric: " << histogram.metric << "\n";
  out << "lower,upper,count\n";
  for (const Histogram::Bin& bin : histogram.bins) {
    out << MetricValue(bin.lower).str() << ',' << MetricValue(bin.upper).str()
        << ',' << bin.count << '\n';
  }
  out << "unavailable,," << histogram.unavailable_count << '\n';
  return out.str();
}

nlohmann::json histogram_to_json(const Histogram& histogram) {
  nlohmann::json doc;
  doc["metric"] = histogram.metric;
  nlohmann::json bins = nlohmann::json::array();
  for (const Histogram::Bin& bin : histogram.bins) {
    bins.push_back({{"lower", bin.lower},
                    {"upper", bin.upper},
                    {"count", bin.count}});
  }
  doc["bins"] = bins;
  doc["unavailable"] = histogram.unavailable_count;
  return doc;
}

std::string comparison_to_csv(const ComparisonReport& report) {
  std::ostringstream out;
  out << "# scope: " << kind_name(report.scope) << "\n";
  out << "kind,qualified_name,metric,old,new,delta\n";
  for (const ComparisonReport::MatchedRow& row : report.matched) {
    for (std::size_t c = 0; c < report.columns.size(); ++c) {
      out << "matched," << csv_quote(row.qualified_name) << ','
          << csv_quote(report.columns[c]) << ',' << row.old_values[c].str()
          << ',' << row.new_values[c].str() << ',' << row.deltas[c].str()
          << '\n';
    }
  }
  for (const ComparisonReport::Entry& entry : report.added) {
    out << "added," << csv_quote(entry.qualified_name) << ",,,,\n";
  }
  for (const ComparisonReport::Entry& entry : report.removed) {
    out << "removed," << csv_quote(entry.qualified_name) << ",,,,\n";
  }
  for (const std::string& collision : report.collisions) {
    out << "collision," << csv_quote(collision) << ",,,,\n";
  }
  for (const ComparisonReport::ColumnSummary& summary : report.summaries) {
    out << "summary,," << csv_quote(summary.metric) << ','
        << summary.min_delta.str() << ',' << summary.max_delta.str() << ','
        << summary.mean_delta.str() << '\n';
  }
  return out.str();
}

nlohmann::json comparison_to_json(const ComparisonReport& report) {
  nlohmann::json doc;
  doc["scope"] = std::string(kind_name(report.scope));
  doc["columns"] = report.columns;
  nlohmann::json matched = nlohmann::json::array();
  for (const ComparisonReport::MatchedRow& row : report.matched) {
    nlohmann::json entry;
    entry["qualified_name"] = row.qualified_name;
    nlohmann::json deltas = nlohmann::json::object();
    nlohmann::json old_values = nlohmann::json::object();
    nlohmann::json new_values = nlohmann::json::object();
    for (std::size_t c = 0; c < report.columns.size(); ++c) {
      deltas[report.columns[c]] = value_to_json(row.deltas[c]);
      old_values[report.columns[c]] = value_to_json(row.old_values[c]);
      new_values[report.columns[c]] = value_to_json(row.new_values[c]);
    }
    entry["old"] = old_values;
    entry["new"] = new_values;
    entry["delta"] = deltas;
    matched.push_back(entry);
  }
  doc["matched"] = matched;
  auto entries = [](const std::vector<ComparisonReport::Entry>& list) {
    nlohmann::json out = nlohmann::json::array();
    for (const ComparisonReport::Entry& entry : list) {
      out.push_back({{"qualified_name", entry.qualified_name},
                     {"id", entry.id}});
    }
    return out;
  };
  doc["added"] = entries(report.added);
  doc["removed"] = entries(report.removed);
  doc["collisions"] = report.collisions;
  nlohmann::json summaries = nlohmann::json::array();
  for (const ComparisonReport::ColumnSummary& summary : report.summaries) {
    summaries.push_back({{"metric", summary.metric},
                         {"changed", summary.changed},
                         {"min_delta", value_to_json(summary.min_delta)},
                         {"max_delta", value_to_json(summary.max_delta)},
                         {"mean_delta", value_to_json(summary.mean_delta)}});
  }
  doc["summaries"] = summaries;
  return doc;
}

std::string catalog_to_text(const std::vector<CatalogEntry>& entries,
                            const nlohmann::json& config_echo) {
  std::ostringstream out;
  out << "Metric and rule catalog\n=======================\n\n";
  for (const CatalogEntry& entry : entries) {
    out << entry.name << " (" << entry.category << ", scope " << entry.scope
        << ")\n";
    out << "  definition: " << entry.description << "\n";
    if (!entry.formula.empty()) out << "  formula:    " << entry.formula << "\n";
    out << "  reference:  " << entry.reference << "\n\n";
  }
  out << "configuration\n-------------\n" << config_echo.dump(2) << "\n";
  return out.str();
}

nlohmann::json catalog_to_json(const std::vector<CatalogEntry>& entries,
                               const nlohmann::json& config_echo) {
  nlohmann::json doc;
  nlohmann::json list = nlohmann::json::array();
  for (const CatalogEntry& entry : entries) {
    list.push_back({{"name", entry.name},
                    {"category", entry.category},
                    {"scope", entry.scope},
                    {"description", entry.description},
                    {"formula", entry.formula},
                    {"reference", entry.reference}});
  }
  doc["entries"] = list;
  doc["config"] = config_echo;
  return doc;
}

std::string summary_to_csv(const std::vector<ModelSummaryEntry>& summary,
                           const nlohmann::json& config_echo) {
  std::ostringstream out;
  out << "# config: " << config_echo.dump() << "\n";
  out << "metric,value\n";
  for (const ModelSummaryEntry& entry : summary) {
    out << csv_quote(entry.name) << ',' << entry.value.str() << '\n';
  }
  return out.str();
}

nlohmann::json summary_to_json(const std::vector<ModelSummaryEntry>& summary,
                               const nlohmann::json& config_echo) {
  nlohmann::json doc;
  doc["config"] = config_echo;
  nlohmann::json values = nlohmann::json::object();
  for (const ModelSummaryEntry& entry : summary) {
    values[entry.name] = value_to_json(entry.value);
  }
  doc["totals"] = values;
  return doc;
}

}  // namespace umlmeter
