#pragma once

#include <map>
#include <string>
#include <vector>

#include "umlmeter/ck.hpp"
#include "umlmeter/model.hpp"

namespace umlmeter {

// Weights for the metrics whose published definitions name a weighting but
// not the numbers (CL1, CL2, PK2, UC4). Defaults are documented placeholders,
// echoed into every report so results stay reproducible and substitutable.
struct WeightConfig {
  std::map<std::string, double> responsibility_weights;  // visibility -> w
  std::map<std::string, double> dependency_weights;      // relation -> w
  double uc4_alpha = 1.0;  // applied to UC1
  double uc4_beta = 0.0;   // applied to UC2
  double uc4_gamma = 1.0;  // applied to UC3

  static WeightConfig defaults();
  void validate() const;  // all weights >= 0, throws InvalidConfig
};

struct ClassMetricsRecord {
  ElementId class_id;
  int num_attr = 0;
  int num_ops = 0;
  int num_inherited_attr = 0;
  int num_ancestors = 0;
  int num_desc = 0;
  int num_interfaces_impl = 0;
  double cl1 = 0;  // weighted responsibilities (owned ops + attrs)
  double cl2 = 0;  // weighted outgoing relations
  int cl3 = 0;     // depth of inheritance tree
  int cl4 = 0;     // immediate subclasses
  int cl5 = 0;     // distinct referenced classes
};

struct PackageMetricsRecord {
  ElementId package_id;
  int pk1 = 0;     // directly owned classes
  double pk2 = 0;  // sum of cl1 over owned classes
  int pk3 = 0;     // cross-package relations whose source end lives here
};

struct ModelTotals {
  int nc = 0;  // classes in the whole model
  int np = 0;  // packages in the whole model
  // Symmetric census: each cross-package relation counted once.
  int cross_package_links = 0;
};

struct UseCaseMetricsRecord {
  struct PerUseCase {
    ElementId usecase_id;
    int ext_pts = 0;
    int includes = 0;
    int extends = 0;
  };
  int na = 0;   // actors
  int uc1 = 0;  // use cases
  int uc2 = 0;  // actor/use-case communications, duplicates included
  int uc3 = 0;  // distinct (actor, use case) pairs
  double uc4 = 0;  // alpha*UC1 + beta*UC2 + gamma*UC3
  std::vector<PerUseCase> per_usecase;
};

ClassMetricsRecord class_metrics(const UmlModel& model, const ElementId& cls,
                                 const WeightConfig& weights,
                                 const HierarchyOptions& options = {});
PackageMetricsRecord package_metrics(const UmlModel& model,
                                     const ElementId& package,
                                     const WeightConfig& weights);
ModelTotals model_totals(const UmlModel& model);
UseCaseMetricsRecord usecase_metrics(const UmlModel& model,
                                     const WeightConfig& weights);

}  // namespace umlmeter
