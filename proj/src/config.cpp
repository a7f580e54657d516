#include "umlmeter/config.hpp"

#include <fstream>

#include "umlmeter/errors.hpp"

namespace umlmeter {

namespace {

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open file: " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("malformed JSON in " + path.string() + ": " + e.what());
  }
  return doc;
}

void read_weight_map(const nlohmann::json& doc, const char* key,
                     std::map<std::string, double>& out) {
  if (!doc.contains(key)) return;
  out.clear();
  for (const auto& [name, value] : doc.at(key).items()) {
    if (!value.is_number()) {
      throw ConfigError(std::string("weight '") + key + "." + name +
                        "' must be a number");
    }
    out[name] = value.get<double>();
  }
}

void read_factors(const nlohmann::json& doc, const char* key,
                  std::vector<UcpFactor>& factors) {
  if (!doc.contains(key)) return;
  const nlohmann::json& list = doc.at(key);
  if (list.is_object()) {
    // Short form: adjust ratings of the default factors by name.
    for (const auto& [name, rating] : list.items()) {
      bool found = false;
      for (UcpFactor& f : factors) {
        if (f.name == name) {
          f.rating = rating.get<double>();
          found = true;
        }
      }
      if (!found) {
        throw ConfigError(std::string("unknown factor '") + name + "' in " +
                          key);
      }
    }
    return;
  }
  factors.clear();
  for (const auto& entry : list) {
    UcpFactor f;
    f.name = entry.at("name").get<std::string>();
    f.weight = entry.at("weight").get<double>();
    f.rating = entry.value("rating", 0.0);
    factors.push_back(std::move(f));
  }
}

Severity severity_from_name(const std::string& name) {
  if (name == "info") return Severity::Info;
  if (name == "warning") return Severity::Warning;
  if (name == "error") return Severity::Error;
  throw ConfigError("unknown severity '" + name +
                    "' (expected info/warning/error)");
}

std::map<std::string, std::string> read_string_map(const nlohmann::json& doc) {
  std::map<std::string, std::string> out;
  for (const auto& [key, value] : doc.items()) {
    out[key] = value.get<std::string>();
  }
  return out;
}

}  // namespace

ToolConfig parse_config(const nlohmann::json& doc,
                        const std::filesystem::path& base_dir,
                        std::vector<std::string>* warnings) {
  ToolConfig config;
  static const std::set<std::string> known_keys = {
      "weights", "ucp", "rules", "hierarchy", "definitions", "dialects",
      "output"};
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (!known_keys.count(key) && warnings) {
      warnings->push_back("unknown configuration key '" + key + "' ignored");
    }
  }

  try {
    if (doc.contains("weights")) {
      const nlohmann::json& w = doc.at("weights");
      read_weight_map(w, "responsibility", config.weights.responsibility_weights);
      read_weight_map(w, "dependency", config.weights.dependency_weights);
      if (w.contains("uc4")) {
        const nlohmann::json& uc4 = w.at("uc4");
        config.weights.uc4_alpha = uc4.value("alpha", config.weights.uc4_alpha);
        config.weights.uc4_beta = uc4.value("beta", config.weights.uc4_beta);
        config.weights.uc4_gamma = uc4.value("gamma", config.weights.uc4_gamma);
      }
      config.weights.validate();
    }
    if (doc.contains("ucp")) {
      const nlohmann::json& u = doc.at("ucp");
      read_weight_map(u, "actor_weights", config.ucp.actor_weights);
      read_weight_map(u, "usecase_weights", config.ucp.usecase_weights);
      read_factors(u, "technical_factors", config.ucp.technical_factors);
      read_factors(u, "environment_factors", config.ucp.environment_factors);
      config.ucp.hours_per_ucp = u.value("hours_per_ucp", config.ucp.hours_per_ucp);
      config.ucp.hourly_rate = u.value("hourly_rate", config.ucp.hourly_rate);
      config.ucp.currency = u.value("currency", config.ucp.currency);
      config.ucp.validate();
    }
    if (doc.contains("rules")) {
      const nlohmann::json& r = doc.at("rules");
      if (r.contains("enabled")) {
        config.rules.enabled.clear();
        for (const auto& id : r.at("enabled")) {
          config.rules.enabled.push_back(id.get<std::string>());
        }
      }
      config.rules.god_class_threshold =
          r.value("god_class_threshold", config.rules.god_class_threshold);
      if (r.contains("naming")) {
        config.rules.naming = read_string_map(r.at("naming"));
      }
      if (r.contains("severity")) {
        for (const auto& [rule, severity] : r.at("severity").items()) {
          config.rules.severity_overrides[rule] =
              severity_from_name(severity.get<std::string>());
        }
      }
    }
    if (doc.contains("hierarchy")) {
      config.hierarchy.interfaces_in_hierarchy =
          doc.at("hierarchy").value("interfaces_in_hierarchy", false);
    }
    if (doc.contains("definitions")) {
      std::filesystem::path p = doc.at("definitions").get<std::string>();
      config.definitions_path = p.is_absolute() ? p : base_dir / p;
    }
    if (doc.contains("dialects")) {
      std::filesystem::path p = doc.at("dialects").get<std::string>();
      config.dialects_dir = p.is_absolute() ? p : base_dir / p;
    }
    if (doc.contains("output")) {
      const nlohmann::json& o = doc.at("output");
      config.output.format = o.value("format", config.output.format);
      config.output.bins = o.value("bins", config.output.bins);
      if (config.output.format != "csv" && config.output.format != "json" &&
          config.output.format != "both") {
        throw ConfigError("output.format must be csv, json or both");
      }
      if (config.output.bins < 0) {
        throw ConfigError("output.bins must be >= 0");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed configuration: ") + e.what());
  }
  return config;
}

ToolConfig load_config(const std::filesystem::path& path,
                       std::vector<std::string>* warnings) {
  return parse_config(read_json(path), path.parent_path(), warnings);
}

Annotations load_annotations(const std::filesystem::path& path) {
  nlohmann::json doc = read_json(path);
  Annotations annotations;
  try {
    if (doc.contains("use_cases")) {
      annotations.usecases = read_string_map(doc.at("use_cases"));
    }
    if (doc.contains("actors")) {
      annotations.actors = read_string_map(doc.at("actors"));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidAnnotation(std::string("malformed annotations: ") + e.what());
  }
  return annotations;
}

nlohmann::json config_echo(const ToolConfig& config) {
  nlohmann::json doc;
  doc["weights"] = {
      {"responsibility", config.weights.responsibility_weights},
      {"dependency", config.weights.dependency_weights},
      {"uc4",
       {{"alpha", config.weights.uc4_alpha},
        {"beta", config.weights.uc4_beta},
        {"gamma", config.weights.uc4_gamma}}},
  };
  nlohmann::json technical = nlohmann::json::array();
  for (const UcpFactor& f : config.ucp.technical_factors) {
    technical.push_back(
        {{"name", f.name}, {"weight", f.weight}, {"rating", f.rating}});
  }
  nlohmann::json environment = nlohmann::json::array();
  for (const UcpFactor& f : config.ucp.environment_factors) {
    environment.push_back(
        {{"name", f.name}, {"weight", f.weight}, {"rating", f.rating}});
  }
  doc["ucp"] = {
      {"actor_weights", config.ucp.actor_weights},
      {"usecase_weights", config.ucp.usecase_weights},
      {"technical_factors", technical},
      {"environment_factors", environment},
      {"hours_per_ucp", config.ucp.hours_per_ucp},
      {"hourly_rate", config.ucp.hourly_rate},
      {"currency", config.ucp.currency},
  };
  nlohmann::json severities = nlohmann::json::object();
  for (const auto& [rule, severity] : config.rules.severity_overrides) {
    severities[rule] = std::string(severity_name(severity));
  }
  doc["rules"] = {
      {"enabled", config.rules.enabled},
      {"god_class_threshold", config.rules.god_class_threshold},
      {"naming", config.rules.naming},
      {"severity", severities},
  };
  doc["hierarchy"] = {
      {"interfaces_in_hierarchy", config.hierarchy.interfaces_in_hierarchy}};
  doc["output"] = {{"format", config.output.format},
                   {"bins", config.output.bins}};
  if (!config.definitions_path.empty()) {
    doc["definitions"] = config.definitions_path.string();
  }
  if (!config.dialects_dir.empty()) {
    doc["dialects"] = config.dialects_dir.string();
  }
  return doc;
}

}  // namespace umlmeter
