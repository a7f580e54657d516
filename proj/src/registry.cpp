#include "umlmeter/registry.hpp"

namespace umlmeter {

namespace {

constexpr const char* kCk = "Chidamber & Kemerer (1994)";
constexpr const char* kMarchesi = "Marchesi (1998)";
constexpr const char* kMcCabe = "McCabe (1976)";
constexpr const char* kSize = "UML size metrics";
constexpr const char* kBehavior = "UML behavioral diagram metrics";

std::vector<MetricInfo> make_registry() {
  std::vector<MetricInfo> m;
  auto add = [&](std::string name, ElementKind scope, std::string description,
                 std::string formula, std::string reference, auto fn) {
    m.push_back({std::move(name), scope, std::move(description),
                 std::move(formula), std::move(reference), fn});
  };

  // --- class scope ---------------------------------------------------------
  add("WMC1", ElementKind::Class, "weighted methods per class, unit weights",
      "count of owned operations", kCk,
      [](const AnalysisContext& ctx, const ElementId& id) {
        return MetricValue(wmc1(ctx.model, id));
      });
  add("WMC_CC", ElementKind::Class,
      "weighted methods per class, cyclomatic-complexity weights",
      "sum over owned operations of CC(attached behavior), CC=1 without one",
      kMcCabe, [](const AnalysisContext& ctx, const ElementId& id) {
        return MetricValue(wmc_cc(ctx.model, id));
      });
  add("DIT", ElementKind::Class, "depth of inheritance tree",
      "maximum generalization-path length to a root", kCk,
      [](const AnalysisContext& ctx, const ElementId& id) {
        return MetricValue(dit(ctx.model, id, ctx.hierarchy));
      });
  add("NOC", ElementKind::Class, "number of children",
      "count of immediate specializations", kCk,
      [](const AnalysisContext& ctx, const ElementId& id) {
        return MetricValue(noc(ctx.model, id, ctx.hierarchy).first);
      });
  add("NumDesc", ElementKind::Class, "number of descendants",
      "count of transitive specializations", kCk,
      [](const AnalysisContext& ctx, const ElementId& id) {
        return MetricValue(noc(ctx.model, id, ctx.hierarchy).second);
      });
  add("RFC", ElementKind::Class, "response for a class",
      "|owned operations + operations invoked by the class's lifelines|; "
      "n/a without interactions",
      kCk, [](const AnalysisContext& ctx, const ElementId& id) {
        return rfc(ctx.model, id);
      });
  add("CBO", ElementKind::Class, "coupling between object classes",
      "|referenced classes + message-target classes|, self excluded", kCk,
      [](const AnalysisContext& ctx, const ElementId& id) {
        return MetricValue(cbo(ctx.model, id));
      });
  add("LCOM", ElementKind::Class, "lack of cohesion in methods (LCOM1)",
      "max(disjoint method pairs - intersecting method pairs, 0); n/a "
      "without usage evidence",
      kCk, [](const AnalysisContext& ctx, const ElementId& id) {
        return lcom(ctx.model, id, ctx.usage);
      });
  add("NumAttr", ElementKind::Class, "number of attributes in the class",
      "count of owned attributes", kSize,
      [](const AnalysisContext& ctx, const ElementId& id) {
        return MetricValue(
            ctx.model.owned_of_kind(id, ElementKind::Attribute).size());
      });
  add("NumOps", ElementKind::Class, "number of operations in the class",
      "count of owned operations", kSize,
      [](const AnalysisContext& ctx, const ElementId& id) {
        return MetricValue(
            ctx.model.owned_of_kind(id, ElementKind::Operation).size());
      });
  add("NumInhAttr", ElementKind::Class, "number of inherited attributes",
      "sum of owned attributes over all ancestors", kSize,
      [](const AnalysisContext& ctx, const ElementId& id) {
        return MetricValue(
            class_metrics(ctx.model, id, ctx.weights, ctx.hierarchy)
                .num_inherited_attr);
      });
  add("NumAnc", ElementKind::Class, "number of ancestors",
      "count of transitive generalization targets", kSize,
      [](const AnalysisContext& ctx, const ElementId& id) {
        return MetricValue(ctx.model.ancestors(id).size());
      });
  add("IntImpl", ElementKind::Class, "interfaces implemented",
      "distinct interfaces realized directly or via generalization", kSize,
      [](const AnalysisContext& ctx, const ElementId& id) {
        return MetricValue(
            class_metrics(ctx.model, id, ctx.weights, ctx.hierarchy)
                .num_interfaces_impl);
      });
  add("CL1", ElementKind::Class, "weighted number of class responsibilities",
      "sum over owned operations and attributes of "
      "responsibility_weight(visibility)",
      kMarchesi, [](const AnalysisContext& ctx, const ElementId& id) {
        return MetricValue(
            class_metrics(ctx.model, id, ctx.weights, ctx.hierarchy).cl1);
      });
  add("CL2", ElementKind::Class, "weighted number of class dependencies",
      "sum over outgoing relations of dependency_weight(kind)", kMarchesi,
      [](const AnalysisContext& ctx, const ElementId& id) {
        return MetricValue(
            class_metrics(ctx.model, id, ctx.weights, ctx.hierarchy).cl2);
      });
  add("CL3", ElementKind::Class, "depth of inheritance tree (Marchesi CL3)",
      "same as DIT", kMarchesi,
      [](const AnalysisContext& ctx, const ElementId& id) {
        return MetricValue(dit(ctx.model, id, ctx.hierarchy));
      });
  add("CL4", ElementKind::Class,
      "number of immediate subclasses of a given class", "same as NOC",
      kMarchesi, [](const AnalysisContext& ctx, const ElementId& id) {
        return MetricValue(noc(ctx.model, id, ctx.hierarchy).first);
      });
  add("CL5", ElementKind::Class, "number of distinct classes referenced",
      "|referenced classes| without behavioral augmentation", kMarchesi,
      [](const AnalysisContext& ctx, const ElementId& id) {
        return MetricValue(ctx.model.referenced_classes(id).size());
      });

  // --- package scope -------------------------------------------------------
  add("PK1", ElementKind::Package, "number of classes in the package",
      "count of directly owned classes", kMarchesi,
      [](const AnalysisContext& ctx, const ElementId& id) {
        return MetricValue(
            package_metrics(ctx.model, id, ctx.weights).pk1);
      });
  add("PK2", ElementKind::Package,
      "weighted number of responsibilities of the package's classes",
      "sum of CL1 over owned classes", kMarchesi,
      [](const AnalysisContext& ctx, const ElementId& id) {
        return MetricValue(
            package_metrics(ctx.model, id, ctx.weights).pk2);
      });
  add("PK3", ElementKind::Package, "overall coupling among packages",
      "cross-package relations whose source end this package owns", kMarchesi,
      [](const AnalysisContext& ctx, const ElementId& id) {
        return MetricValue(
            package_metrics(ctx.model, id, ctx.weights).pk3);
      });

  // --- use-case scope ------------------------------------------------------
  add("ExtPts", ElementKind::UseCase, "number of extension points",
      "count of owned extension points", kSize,
      [](const AnalysisContext& ctx, const ElementId& id) {
        return MetricValue(
            ctx.model.owned_of_kind(id, ElementKind::ExtensionPoint).size());
      });
  add("Includes", ElementKind::UseCase, "use cases included by this one",
      "count of owned include relationships", kSize,
      [](const AnalysisContext& ctx, const ElementId& id) {
        return MetricValue(
            ctx.model.owned_of_kind(id, ElementKind::Include).size());
      });
  add("Extends", ElementKind::UseCase, "use cases this one extends",
      "count of owned extend relationships", kSize,
      [](const AnalysisContext& ctx, const ElementId& id) {
        return MetricValue(
            ctx.model.owned_of_kind(id, ElementKind::Extend).size());
      });

  // --- statechart scope ----------------------------------------------------
  auto sc = [](auto member) {
    return [member](const AnalysisContext& ctx, const ElementId& id) {
      return MetricValue(statechart_metrics(ctx.model, id).*member);
    };
  };
  add("States", ElementKind::StateMachine, "number of states",
      "stable states, pseudostates excluded", kBehavior,
      sc(&StatechartRecord::states));
  add("Pseudostates", ElementKind::StateMachine,
      "raw pseudostate census (initial/final/choice/junction)",
      "count of pseudostates", kBehavior, sc(&StatechartRecord::pseudostates));
  add("Transitions", ElementKind::StateMachine, "number of transitions",
      "count of transitions", kBehavior, sc(&StatechartRecord::transitions));
  add("TTrigger", ElementKind::StateMachine,
      "number of triggers of the state machine transitions",
      "count of trigger elements", kBehavior, sc(&StatechartRecord::ttrigger));
  add("TGuard", ElementKind::StateMachine, "transitions with a guard",
      "count of transitions possessing a guard", kBehavior,
      sc(&StatechartRecord::tguard));
  add("TEffects", ElementKind::StateMachine, "transitions with an effect",
      "count of transitions possessing an effect", kBehavior,
      sc(&StatechartRecord::teffects));
  add("EntryActions", ElementKind::StateMachine, "number of entry actions",
      "states with an entry action", kBehavior,
      sc(&StatechartRecord::entry_actions));
  add("ExitActions", ElementKind::StateMachine, "number of exit actions",
      "states with an exit action", kBehavior,
      sc(&StatechartRecord::exit_actions));
  add("Activities", ElementKind::StateMachine, "number of activities",
      "states with a do-activity", kBehavior,
      sc(&StatechartRecord::activities));

  // --- activity scope ------------------------------------------------------
  auto act = [](auto member) {
    return [member](const AnalysisContext& ctx, const ElementId& id) {
      return MetricValue(activity_metrics(ctx.model, id).*member);
    };
  };
  add("Actions", ElementKind::Activity, "number of activity actions",
      "count of actions", kBehavior, act(&ActivityRecord::actions));
  add("ObjectNodes", ElementKind::Activity, "number of activity object nodes",
      "count of object nodes, pins excluded", kBehavior,
      act(&ActivityRecord::object_nodes));
  add("Pins", ElementKind::Activity, "number of pins on the activity nodes",
      "count of pins", kBehavior, act(&ActivityRecord::pins));
  add("Guards", ElementKind::Activity,
      "guards defined on object and control flows",
      "count of flows possessing a guard", kBehavior,
      act(&ActivityRecord::guards));
  add("Partitions", ElementKind::Activity, "number of activity groups/zones",
      "count of activity partitions", kBehavior,
      act(&ActivityRecord::partitions));
  add("ObjectFlows", ElementKind::Activity, "number of object flows",
      "count of object flows", kBehavior, act(&ActivityRecord::object_flows));
  add("ExceptionHandlers", ElementKind::Activity, "number of exceptions",
      "count of exception handlers", kBehavior,
      act(&ActivityRecord::exception_handlers));

  return m;
}

}  // namespace

AnalysisContext AnalysisContext::create(const UmlModel& model,
                                        WeightConfig weights,
                                        HierarchyOptions hierarchy) {
  weights.validate();
  return AnalysisContext{model, std::move(weights), hierarchy,
                         derive_usage_map(model)};
}

const std::vector<MetricInfo>& builtin_metrics() {
  static const std::vector<MetricInfo> registry = make_registry();
  return registry;
}

std::vector<const MetricInfo*> metrics_for_scope(ElementKind scope) {
  std::vector<const MetricInfo*> out;
  for (const MetricInfo& metric : builtin_metrics()) {
    if (metric.scope == scope) out.push_back(&metric);
  }
  return out;
}

const MetricInfo* find_metric(const std::string& name, ElementKind scope) {
  for (const MetricInfo& metric : builtin_metrics()) {
    if (metric.scope == scope && metric.name == name) return &metric;
  }
  return nullptr;
}

std::vector<ModelSummaryEntry> model_summary(const AnalysisContext& ctx) {
  ModelTotals totals = model_totals(ctx.model);
  UseCaseMetricsRecord uc = usecase_metrics(ctx.model, ctx.weights);
  return {
      {"NC", "number of classes", kMarchesi, MetricValue(totals.nc)},
      {"NP", "number of packages", kMarchesi, MetricValue(totals.np)},
      {"NA", "number of actors of the system", kMarchesi, MetricValue(uc.na)},
      {"UC1", "number of use cases in the system", kMarchesi,
       MetricValue(uc.uc1)},
      {"UC2", "communications among use cases and actors", kMarchesi,
       MetricValue(uc.uc2)},
      {"UC3", "communications without redundancies", kMarchesi,
       MetricValue(uc.uc3)},
      {"UC4", "global complexity of the system", kMarchesi,
       MetricValue(uc.uc4)},
      {"CrossPackageLinks", "cross-package relations, each counted once",
       kMarchesi, MetricValue(totals.cross_package_links)},
  };
}

const std::vector<ElementKind>& table_scopes() {
  static const std::vector<ElementKind> scopes = {
      ElementKind::Class, ElementKind::Package, ElementKind::UseCase,
      ElementKind::StateMachine, ElementKind::Activity};
  return scopes;
}

}  // namespace umlmeter
