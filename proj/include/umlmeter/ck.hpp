#pragma once

#include <map>
#include <set>
#include <utility>

#include "umlmeter/metric_value.hpp"
#include "umlmeter/model.hpp"

namespace umlmeter {

// Interfaces participate in the generalization graph but are excluded from
// NOC/DIT unless configured otherwise; they always count as CBO targets.
struct HierarchyOptions {
  bool interfaces_in_hierarchy = false;
};

struct CkRecord {
  ElementId class_id;
  int wmc1 = 0;
  int wmc_cc = 0;  // >= wmc1 whenever behaviors are modeled
  int dit = 0;
  int noc = 0;
  int num_desc = 0;  // >= noc
  MetricValue rfc;   // unavailable when the model has no interactions
  int cbo = 0;
  MetricValue lcom;  // unavailable without usage evidence for the class
};

// Per operation: the attributes it is known to access. Evidence comes from
// explicit operation->attribute dependencies and from self-messages whose
// signature names an accessor; empty where no evidence exists.
using UsageMap = std::map<ElementId, std::set<ElementId>>;

// Owned operations, each counted as a unit.
int wmc1(const UmlModel& model, const ElementId& cls);

// Cyclomatic complexity of an Activity or StateMachine: 1 + sum over
// decision points of (outgoing edges - 1). Decision points are activity
// DecisionNodes and choice/junction pseudostates.
int cyclomatic_of_behavior(const UmlModel& model, const ElementId& behavior);

// Sum of per-operation cyclomatic complexities; operations without an
// attached behavior contribute 1, so wmc_cc == wmc1 when no behaviors are
// modeled.
int wmc_cc(const UmlModel& model, const ElementId& cls);

// Maximum generalization-path length to a root; 0 for roots.
int dit(const UmlModel& model, const ElementId& cls,
        const HierarchyOptions& options = {});

// (immediate specializations, all transitive descendants)
std::pair<int, int> noc(const UmlModel& model, const ElementId& cls,
                        const HierarchyOptions& options = {});

// |owned operations union operations invoked by the class's lifelines| —
// one call level, not a transitive closure.
MetricValue rfc(const UmlModel& model, const ElementId& cls);

// Distinct classifiers referenced structurally plus, when interactions
// exist, classes this class sends messages to. Self excluded.
int cbo(const UmlModel& model, const ElementId& cls);

UsageMap derive_usage_map(const UmlModel& model);

// CK LCOM1: method pairs with disjoint attribute-access sets minus pairs
// with intersecting sets, floored at zero.
MetricValue lcom(const UmlModel& model, const ElementId& cls,
                 const UsageMap& usage);

CkRecord ck_record(const UmlModel& model, const ElementId& cls,
                   const UsageMap& usage, const HierarchyOptions& options = {});

}  // namespace umlmeter
