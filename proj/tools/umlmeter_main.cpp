// umlmeter: design measurement for UML models serialized as XMI.
//
// Subcommands: analyze (metric tables, histograms), estimate (use case
// points), rules (design rule checker), compare (two revisions), catalog
// (metric/rule definitions).
//
// Exit codes: 0 ok, 1 usage, 2 parse error, 3 invalid model, 4 configuration
// error, 5 rule violations, 6 nothing to estimate.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "umlmeter/config.hpp"
#include "umlmeter/errors.hpp"
#include "umlmeter/report.hpp"
#include "umlmeter/ucp.hpp"
#include "umlmeter/xmi.hpp"

namespace {

using namespace umlmeter;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitModel = 3;
constexpr int kExitConfig = 4;
constexpr int kExitRuleViolations = 5;
constexpr int kExitNothingToEstimate = 6;

const std::map<std::string, ElementKind>& scope_names() {
  static const std::map<std::string, ElementKind> names = {
      {"class", ElementKind::Class},
      {"package", ElementKind::Package},
      {"usecase", ElementKind::UseCase},
      {"statemachine", ElementKind::StateMachine},
      {"activity", ElementKind::Activity},
  };
  return names;
}

std::string scope_file_stem(ElementKind kind) {
  switch (kind) {
    case ElementKind::Class:
      return "classes";
    case ElementKind::Package:
      return "packages";
    case ElementKind::UseCase:
      return "usecases";
    case ElementKind::StateMachine:
      return "statemachines";
    case ElementKind::Activity:
      return "activities";
    default:
      return "elements";
  }
}

struct CommonOptions {
  std::string model_path;
  std::string config_path;
  std::string out_dir;
};

ToolConfig resolve_config(const std::string& config_path,
                          std::vector<std::string>& warnings) {
  std::string path = config_path;
  if (path.empty()) {
    if (const char* env = std::getenv("UMLMETER_CONFIG")) path = env;
  }
  if (path.empty()) return ToolConfig::defaults();
  return load_config(path, &warnings);
}

UmlModel load_model(const std::string& path, const ToolConfig& config) {
  IngestOptions options;
  if (!config.dialects_dir.empty()) {
    options.dialects = load_dialect_dir(config.dialects_dir);
  }
  return parse_xmi_file(path, options);
}

void report_ingest_warnings(const UmlModel& model) {
  if (!model.unresolved_refs().empty()) {
    std::cerr << "warning: " << model.unresolved_refs().size()
              << " unresolved reference(s) quarantined";
    std::cerr << " (first: '" << model.unresolved_refs().front().target
              << "' referenced by '" << model.unresolved_refs().front().source
              << "')\n";
  }
  for (const auto& [tag, count] : model.unrecognized_tags()) {
    std::cerr << "warning: unrecognized element tag <" << tag << "> x" << count
              << "\n";
  }
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path.string());
  out << content;
}

std::vector<std::string> split_csv_list(const std::string& csv) {
  std::vector<std::string> out;
  std::istringstream in(csv);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (!token.empty()) out.push_back(token);
  }
  return out;
}

std::vector<ElementKind> parse_scopes(const std::string& csv) {
  if (csv.empty()) return table_scopes();
  std::vector<ElementKind> scopes;
  for (const std::string& token : split_csv_list(csv)) {
    auto it = scope_names().find(token);
    if (it == scope_names().end()) {
      throw ConfigError("unknown scope '" + token +
                        "' (expected class, package, usecase, statemachine "
                        "or activity)");
    }
    scopes.push_back(it->second);
  }
  return scopes;
}

// --- analyze ----------------------------------------------------------------

struct AnalyzeOptions : CommonOptions {
  std::string scopes;
  std::string metrics;
  std::string definitions;
  std::string format;
  int bins = -1;  // -1 = from config
};

int cmd_analyze(const AnalyzeOptions& opt) {
  std::vector<std::string> warnings;
  ToolConfig config = resolve_config(opt.config_path, warnings);
  if (opt.bins >= 0) config.output.bins = opt.bins;
  if (!opt.format.empty()) {
    if (opt.format != "csv" && opt.format != "json" && opt.format != "both") {
      throw ConfigError("--format must be csv, json or both");
    }
    config.output.format = opt.format;
  }

  std::vector<MetricDefinition> definitions;
  std::filesystem::path definitions_path =
      opt.definitions.empty() ? config.definitions_path
                              : std::filesystem::path(opt.definitions);
  if (!definitions_path.empty()) {
    definitions = parse_definitions_file(definitions_path);
  }

  UmlModel model = load_model(opt.model_path, config);
  report_ingest_warnings(model);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";

  AnalysisContext ctx =
      AnalysisContext::create(model, config.weights, config.hierarchy);
  nlohmann::json echo = config_echo(config);
  std::vector<ElementKind> scopes = parse_scopes(opt.scopes);
  std::vector<std::string> metric_filter = split_csv_list(opt.metrics);

  // Everything is computed before anything is written, so a failure never
  // leaves partial output behind.
  std::vector<std::pair<std::filesystem::path, std::string>> files;
  bool want_csv =
      config.output.format == "csv" || config.output.format == "both";
  bool want_json =
      config.output.format == "json" || config.output.format == "both";
  std::filesystem::path out_dir =
      opt.out_dir.empty() ? "umlmeter_out" : opt.out_dir;

  for (ElementKind scope : scopes) {
    MetricTable table = build_table(ctx, scope, metric_filter);
    for (const MetricDefinition& def : definitions) {
      if (def.target != scope) continue;
      table.add_column(def.name, evaluate_definition(ctx, def, definitions));
    }
    std::string stem = scope_file_stem(scope);
    if (want_csv) {
      files.emplace_back(out_dir / (stem + ".csv"), table_to_csv(table, echo));
    }
    if (want_json) {
      files.emplace_back(out_dir / (stem + ".json"),
                         table_to_json(table, echo).dump(2) + "\n");
    }
    if (config.output.bins > 0 && !table.rows.empty()) {
      std::string csv;
      nlohmann::json json_bins = nlohmann::json::array();
      for (const std::string& column : table.columns) {
        try {
          Histogram h = histogram(table, column, config.output.bins);
          csv += histogram_to_csv(h);
          json_bins.push_back(histogram_to_json(h));
        } catch (const NoData&) {
          // all-unavailable column: nothing to bin
        }
      }
      if (want_csv && !csv.empty()) {
        files.emplace_back(out_dir / ("histograms_" + stem + ".csv"), csv);
      }
      if (want_json && !json_bins.empty()) {
        files.emplace_back(out_dir / ("histograms_" + stem + ".json"),
                           json_bins.dump(2) + "\n");
      }
    }
  }

  std::vector<ModelSummaryEntry> summary = model_summary(ctx);
  if (want_csv) {
    files.emplace_back(out_dir / "model.csv", summary_to_csv(summary, echo));
  }
  if (want_json) {
    files.emplace_back(out_dir / "model.json",
                       summary_to_json(summary, echo).dump(2) + "\n");
  }

  for (const auto& [path, content] : files) write_file(path, content);
  std::cout << "wrote " << files.size() << " file(s) to " << out_dir.string()
            << "\n";
  return kExitOk;
}

// --- estimate ---------------------------------------------------------------

struct EstimateOptions : CommonOptions {
  std::string annotations_path;
  std::string filter;
  std::string ids;
  std::string out_file;
};

int cmd_estimate(const EstimateOptions& opt) {
  std::vector<std::string> warnings;
  ToolConfig config = resolve_config(opt.config_path, warnings);
  UmlModel model = load_model(opt.model_path, config);
  report_ingest_warnings(model);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";

  Annotations annotations;
  if (!opt.annotations_path.empty()) {
    annotations = load_annotations(opt.annotations_path);
  }
  UcpFilter filter;
  filter.name_pattern = opt.filter;
  filter.ids = split_csv_list(opt.ids);

  UcpResult r = estimate(model, config.ucp, annotations, filter);

  double technical_sum = 0;
  for (const UcpFactor& f : config.ucp.technical_factors) {
    technical_sum += f.weight * f.rating;
  }
  double environment_sum = 0;
  for (const UcpFactor& f : config.ucp.environment_factors) {
    environment_sum += f.weight * f.rating;
  }

  std::cout << "Use Case Points estimate\n";
  std::cout << "========================\n\n";
  std::cout << "actors (" << r.actors.size() << "):\n";
  for (const auto& a : r.actors) {
    std::cout << "  " << (a.name.empty() ? a.id : a.name) << ": "
              << a.complexity << ", weight " << MetricValue(a.weight).str()
              << (a.annotated ? "" : " [default]") << "\n";
  }
  std::cout << "use cases (" << r.usecases.size() << "):\n";
  for (const auto& u : r.usecases) {
    std::cout << "  " << (u.name.empty() ? u.id : u.name) << ": "
              << u.complexity << ", weight " << MetricValue(u.weight).str()
              << (u.annotated ? "" : " [default]") << "\n";
  }
  std::cout << "\n";
  std::cout << "UAW   = " << MetricValue(r.uaw).str() << "\n";
  std::cout << "UUCW  = " << MetricValue(r.uucw).str() << "\n";
  std::cout << "UUCP  = UAW + UUCW = " << MetricValue(r.uucp).str() << "\n";
  std::cout << "TCF   = 0.6 + 0.01*" << MetricValue(technical_sum).str()
            << " = " << MetricValue(r.tcf).str() << "\n";
  std::cout << "ECF   = 1.4 - 0.03*" << MetricValue(environment_sum).str()
            << " = " << MetricValue(r.ecf).str() << "\n";
  std::cout << "UCP   = UUCP * TCF * ECF = " << MetricValue(r.ucp).str()
            << "\n";
  std::cout << "hours = UCP * " << MetricValue(config.ucp.hours_per_ucp).str()
            << " = " << MetricValue(r.hours).str() << "\n";
  std::cout << "cost  = hours * " << MetricValue(config.ucp.hourly_rate).str()
            << " = " << MetricValue(r.cost).str() << " " << r.currency << "\n";
  for (const std::string& w : r.warnings) {
    std::cerr << "warning: " << w << "\n";
  }
  std::cout << "\nconfig echo:\n"
            << config_echo(config)["ucp"].dump(2) << "\n";

  if (!opt.out_file.empty()) {
    nlohmann::json doc;
    doc["uaw"] = r.uaw;
    doc["uucw"] = r.uucw;
    doc["uucp"] = r.uucp;
    doc["tcf"] = r.tcf;
    doc["ecf"] = r.ecf;
    doc["ucp"] = r.ucp;
    doc["hours"] = r.hours;
    doc["cost"] = r.cost;
    doc["currency"] = r.currency;
    auto contributions = [](const std::vector<UcpResult::Contribution>& list) {
      nlohmann::json out = nlohmann::json::array();
      for (const auto& c : list) {
        out.push_back({{"id", c.id},
                       {"name", c.name},
                       {"complexity", c.complexity},
                       {"weight", c.weight},
                       {"annotated", c.annotated}});
      }
      return out;
    };
    doc["actors"] = contributions(r.actors);
    doc["use_cases"] = contributions(r.usecases);
    doc["warnings"] = r.warnings;
    doc["config"] = config_echo(config);
    write_file(opt.out_file, doc.dump(2) + "\n");
  }
  return kExitOk;
}

// --- rules ------------------------------------------------------------------

int cmd_rules(const CommonOptions& opt) {
  std::vector<std::string> warnings;
  ToolConfig config = resolve_config(opt.config_path, warnings);
  UmlModel model = load_model(opt.model_path, config);
  report_ingest_warnings(model);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";

  std::vector<RuleFinding> findings = run_rules(model, config.rules);
  bool any_error = false;
  for (const RuleFinding& f : findings) {
    std::cout << severity_name(f.severity) << " " << f.rule_id << " "
              << model.qualified_name(f.element) << ": " << f.message << "\n";
    if (f.severity == Severity::Error) any_error = true;
  }
  std::cout << findings.size() << " finding(s)\n";

  if (!opt.out_dir.empty()) {
    nlohmann::json doc = nlohmann::json::array();
    for (const RuleFinding& f : findings) {
      doc.push_back({{"rule", f.rule_id},
                     {"element", f.element},
                     {"qualified_name", model.qualified_name(f.element)},
                     {"severity", std::string(severity_name(f.severity))},
                     {"message", f.message}});
    }
    nlohmann::json wrapper;
    wrapper["findings"] = doc;
    wrapper["config"] = config_echo(config);
    write_file(std::filesystem::path(opt.out_dir) / "findings.json",
               wrapper.dump(2) + "\n");
  }
  return any_error ? kExitRuleViolations : kExitOk;
}

// --- compare ----------------------------------------------------------------

struct CompareOptions {
  std::string old_path;
  std::string new_path;
  std::string config_path;
  std::string scopes;
  std::string out_dir;
};

int cmd_compare(const CompareOptions& opt) {
  std::vector<std::string> warnings;
  ToolConfig config = resolve_config(opt.config_path, warnings);
  UmlModel old_model = load_model(opt.old_path, config);
  UmlModel new_model = load_model(opt.new_path, config);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";

  AnalysisContext old_ctx =
      AnalysisContext::create(old_model, config.weights, config.hierarchy);
  AnalysisContext new_ctx =
      AnalysisContext::create(new_model, config.weights, config.hierarchy);

  std::vector<std::pair<std::filesystem::path, std::string>> files;
  nlohmann::json echo = config_echo(config);
  for (ElementKind scope : parse_scopes(opt.scopes)) {
    MetricTable old_table = build_table(old_ctx, scope);
    MetricTable new_table = build_table(new_ctx, scope);
    ComparisonReport report = compare(old_table, new_table);

    std::cout << kind_name(scope) << ": " << report.matched.size()
              << " matched, " << report.added.size() << " added, "
              << report.removed.size() << " removed";
    if (report.collisions.empty()) {
      std::cout << "\n";
    } else {
      std::cout << ", " << report.collisions.size() << " collision(s)\n";
    }
    for (const auto& entry : report.added) {
      std::cout << "  added   " << entry.qualified_name << "\n";
    }
    for (const auto& entry : report.removed) {
      std::cout << "  removed " << entry.qualified_name << "\n";
    }
    for (const auto& summary : report.summaries) {
      if (summary.changed > 0) {
        std::cout << "  " << summary.metric << ": " << summary.changed
                  << " changed, mean delta " << summary.mean_delta.str()
                  << "\n";
      }
    }

    if (!opt.out_dir.empty()) {
      std::string stem = "compare_" + scope_file_stem(scope);
      files.emplace_back(std::filesystem::path(opt.out_dir) / (stem + ".csv"),
                         comparison_to_csv(report));
      nlohmann::json doc = comparison_to_json(report);
      doc["config"] = echo;
      files.emplace_back(std::filesystem::path(opt.out_dir) / (stem + ".json"),
                         doc.dump(2) + "\n");
    }
  }
  for (const auto& [path, content] : files) write_file(path, content);
  return kExitOk;
}

// --- catalog ----------------------------------------------------------------

struct CatalogOptions {
  std::string config_path;
  std::string definitions;
  std::string out_dir;
};

int cmd_catalog(const CatalogOptions& opt) {
  std::vector<std::string> warnings;
  ToolConfig config = resolve_config(opt.config_path, warnings);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";

  std::vector<MetricDefinition> definitions;
  std::filesystem::path definitions_path =
      opt.definitions.empty() ? config.definitions_path
                              : std::filesystem::path(opt.definitions);
  if (!definitions_path.empty()) {
    definitions = parse_definitions_file(definitions_path);
  }

  std::vector<CatalogEntry> entries = catalog(config.rules, definitions);
  nlohmann::json echo = config_echo(config);
  std::cout << catalog_to_text(entries, echo);
  if (!opt.out_dir.empty()) {
    write_file(std::filesystem::path(opt.out_dir) / "catalog.json",
               catalog_to_json(entries, echo).dump(2) + "\n");
    write_file(std::filesystem::path(opt.out_dir) / "catalog.txt",
               catalog_to_text(entries, echo));
  }
  return kExitOk;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const NothingToEstimate*>(&e)) return kExitNothingToEstimate;
  if (dynamic_cast<const ParseError*>(&e)) return kExitParse;
  if (dynamic_cast<const NotXmi*>(&e)) return kExitParse;
  if (dynamic_cast<const InvalidModel*>(&e)) return kExitModel;
  if (dynamic_cast<const NotFound*>(&e)) return kExitModel;
  if (dynamic_cast<const WrongElementKind*>(&e)) return kExitModel;
  if (dynamic_cast<const ConfigError*>(&e)) return kExitConfig;
  if (dynamic_cast<const ScopeError*>(&e)) return kExitConfig;
  if (dynamic_cast<const NoData*>(&e)) return kExitConfig;
  if (dynamic_cast<const EvaluationError*>(&e)) return kExitConfig;
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"design measurement for UML models (XMI input)"};
  app.require_subcommand(1);

  AnalyzeOptions analyze_opt;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "compute metric tables (and optional histograms)");
  analyze->add_option("--model", analyze_opt.model_path, "XMI model file")
      ->required();
  analyze->add_option("--config", analyze_opt.config_path,
                      "configuration file (or $UMLMETER_CONFIG)");
  analyze->add_option("--out", analyze_opt.out_dir,
                      "output directory (default umlmeter_out)");
  analyze->add_option(
      "--scope", analyze_opt.scopes,
      "comma list: class,package,usecase,statemachine,activity");
  analyze->add_option("--metrics", analyze_opt.metrics,
                      "comma list of metric names (default: all for scope)");
  analyze->add_option("--definitions", analyze_opt.definitions,
                      "custom metric definitions (XML)");
  analyze->add_option("--bins", analyze_opt.bins,
                      "histogram bin count (0 disables)");
  analyze->add_option("--format", analyze_opt.format, "csv, json or both");

  EstimateOptions estimate_opt;
  CLI::App* estimate =
      app.add_subcommand("estimate", "use case points effort/cost estimation");
  estimate->add_option("--model", estimate_opt.model_path, "XMI model file")
      ->required();
  estimate->add_option("--config", estimate_opt.config_path,
                       "configuration file");
  estimate->add_option("--annotations", estimate_opt.annotations_path,
                       "complexity annotations (JSON)");
  estimate->add_option("--filter", estimate_opt.filter,
                       "regex over use-case names");
  estimate->add_option("--ids", estimate_opt.ids,
                       "comma list of use-case ids to include");
  estimate->add_option("--out", estimate_opt.out_file,
                       "write the estimate as JSON to this file");

  CommonOptions rules_opt;
  CLI::App* rules = app.add_subcommand("rules", "run the design rule checker");
  rules->add_option("--model", rules_opt.model_path, "XMI model file")
      ->required();
  rules->add_option("--config", rules_opt.config_path, "configuration file");
  rules->add_option("--out", rules_opt.out_dir,
                    "directory for findings.json (optional)");

  CompareOptions compare_opt;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "compare two model revisions");
  compare_cmd->add_option("--old", compare_opt.old_path, "older XMI model")
      ->required();
  compare_cmd->add_option("--new", compare_opt.new_path, "newer XMI model")
      ->required();
  compare_cmd->add_option("--config", compare_opt.config_path,
                          "configuration file");
  compare_cmd->add_option("--scope", compare_opt.scopes,
                          "comma list of scopes (default: all)");
  compare_cmd->add_option("--out", compare_opt.out_dir,
                          "directory for comparison reports (optional)");

  CatalogOptions catalog_opt;
  CLI::App* catalog_cmd = app.add_subcommand(
      "catalog", "print metric and rule definitions with references");
  catalog_cmd->add_option("--config", catalog_opt.config_path,
                          "configuration file");
  catalog_cmd->add_option("--definitions", catalog_opt.definitions,
                          "custom metric definitions (XML)");
  catalog_cmd->add_option("--out", catalog_opt.out_dir,
                          "directory for catalog files (optional)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_opt);
    if (*estimate) return cmd_estimate(estimate_opt);
    if (*rules) return cmd_rules(rules_opt);
    if (*compare_cmd) return cmd_compare(compare_opt);
    if (*catalog_cmd) return cmd_catalog(catalog_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kExitUsage;
}
