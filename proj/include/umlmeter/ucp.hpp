#pragma once

#include <map>
#include <string>
#include <vector>

#include "umlmeter/model.hpp"

namespace umlmeter {

struct UcpFactor {
  std::string name;
  double weight = 0;
  double rating = 0;  // 0..5
};

// Standard Use Case Points weight tables ship as defaults; every value is
// overridable from the tool configuration and echoed into the output.
struct UcpConfig {
  std::map<std::string, double> actor_weights;    // simple/average/complex
  std::map<std::string, double> usecase_weights;  // low/medium/high
  std::vector<UcpFactor> technical_factors;       // 13 entries
  std::vector<UcpFactor> environment_factors;     // 8 entries
  double hours_per_ucp = 20;
  double hourly_rate = 10;
  std::string currency = "EUR";

  static UcpConfig defaults();
  // Ratings in [0,5], hours_per_ucp > 0, the three complexity levels
  // present with non-negative weights. Throws InvalidConfig.
  void validate() const;
};

// Complexity classes come from annotations (file or model tag), never from
// structure inference. Unannotated elements default with a warning.
struct Annotations {
  std::map<std::string, std::string> usecases;  // id or name -> low/medium/high
  std::map<std::string, std::string> actors;  // id or name -> simple/average/complex
};

// Both mechanisms may be combined; an element must pass every one given.
struct UcpFilter {
  std::vector<ElementId> ids;  // explicit selection; empty = no id filter
  std::string name_pattern;    // ECMAScript regex over use-case names
};

struct UcpResult {
  struct Contribution {
    ElementId id;
    std::string name;
    std::string complexity;
    double weight = 0;
    bool annotated = false;
  };
  double uaw = 0;
  double uucw = 0;
  double uucp = 0;  // uaw + uucw
  double tcf = 0;
  double ecf = 0;
  double ucp = 0;    // uucp * tcf * ecf
  double hours = 0;  // ucp * hours_per_ucp
  double cost = 0;   // hours * hourly_rate
  std::string currency;
  std::vector<Contribution> actors;
  std::vector<Contribution> usecases;
  std::vector<std::string> warnings;
};

// Annotated class when present; otherwise "medium" with a warning recorded.
// Throws NotFound / InvalidAnnotation.
std::string classify_usecase(const UmlModel& model, const ElementId& usecase,
                             const Annotations& annotations,
                             std::vector<std::string>* warnings = nullptr);
// Same contract with the "average" default.
std::string classify_actor(const UmlModel& model, const ElementId& actor,
                           const Annotations& annotations,
                           std::vector<std::string>* warnings = nullptr);

// tcf = 0.6 + 0.01 * sum(weight_i * rating_i) over the technical factors.
double tcf(const UcpConfig& config);
// ecf = 1.4 - 0.03 * sum(weight_j * rating_j) over the environment factors.
double ecf(const UcpConfig& config);

// Throws NothingToEstimate when the filter selects no use case and
// InvalidFilter on a malformed pattern.
UcpResult estimate(const UmlModel& model, const UcpConfig& config,
                   const Annotations& annotations = {},
                   const UcpFilter& filter = {});

}  // namespace umlmeter
