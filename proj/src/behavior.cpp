#include "umlmeter/behavior.hpp"

#include "umlmeter/errors.hpp"

namespace umlmeter {

namespace {

void require_kind(const UmlModel& model, const ElementId& id,
                  ElementKind kind) {
  const ModelElement& e = model.at(id);
  if (e.kind != kind) {
    throw WrongElementKind("'" + id + "' is not a " +
                           std::string(kind_name(kind)) + " (kind " +
                           std::string(kind_name(e.kind)) + ")");
  }
}

}  // namespace

StatechartRecord statechart_metrics(const UmlModel& model,
                                    const ElementId& machine) {
  require_kind(model, machine, ElementKind::StateMachine);
  StatechartRecord r;
  r.machine_id = machine;

  for (const ElementId& id :
       model.owned_transitive(machine, ElementKind::State)) {
    const ModelElement& state = model.at(id);
    auto subkind = state.tags.find("subkind");
    bool stable = subkind == state.tags.end() || subkind->second == "normal";
    stable ? ++r.states : ++r.pseudostates;
    if (state.tags.count("entry")) ++r.entry_actions;
    if (state.tags.count("exit")) ++r.exit_actions;
    if (state.tags.count("do_activity")) ++r.activities;
  }
  for (const ElementId& id :
       model.owned_transitive(machine, ElementKind::Transition)) {
    const ModelElement& transition = model.at(id);
    ++r.transitions;
    if (transition.tags.count("guard")) ++r.tguard;
    if (transition.tags.count("effect")) ++r.teffects;
  }
  r.ttrigger = static_cast<int>(
      model.owned_transitive(machine, ElementKind::Trigger).size());
  return r;
}

ActivityRecord activity_metrics(const UmlModel& model,
                                const ElementId& activity) {
  require_kind(model, activity, ElementKind::Activity);
  ActivityRecord r;
  r.activity_id = activity;
  r.actions = static_cast<int>(
      model.owned_transitive(activity, ElementKind::Action).size());
  r.object_nodes = static_cast<int>(
      model.owned_transitive(activity, ElementKind::ObjectNode).size());
  r.pins = static_cast<int>(
      model.owned_transitive(activity, ElementKind::Pin).size());
  r.partitions = static_cast<int>(
      model.owned_transitive(activity, ElementKind::ActivityPartition).size());
  r.object_flows = static_cast<int>(
      model.owned_transitive(activity, ElementKind::ObjectFlow).size());
  r.exception_handlers = static_cast<int>(
      model.owned_transitive(activity, ElementKind::ExceptionHandler).size());
  for (ElementKind kind : {ElementKind::ControlFlow, ElementKind::ObjectFlow}) {
    for (const ElementId& id : model.owned_transitive(activity, kind)) {
      if (model.at(id).tags.count("guard")) ++r.guards;
    }
  }
  return r;
}

}  // namespace umlmeter
