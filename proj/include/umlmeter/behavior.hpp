#pragma once

#include "umlmeter/model.hpp"

namespace umlmeter {

struct StatechartRecord {
  ElementId machine_id;
  int states = 0;        // stable states; pseudostates censused separately
  int pseudostates = 0;  // initial/final/choice/junction/... raw census
  int transitions = 0;
  int ttrigger = 0;      // trigger elements (a transition may carry several)
  int tguard = 0;        // transitions possessing a guard, each at most once
  int teffects = 0;      // transitions possessing an effect
  int entry_actions = 0;
  int exit_actions = 0;
  int activities = 0;    // states with a do-activity
};

struct ActivityRecord {
  ElementId activity_id;
  int actions = 0;
  int object_nodes = 0;  // pins are censused separately, never double-counted
  int pins = 0;
  int guards = 0;        // guards on both object and control flows
  int partitions = 0;
  int object_flows = 0;
  int exception_handlers = 0;
};

StatechartRecord statechart_metrics(const UmlModel& model,
                                    const ElementId& machine);
ActivityRecord activity_metrics(const UmlModel& model,
                                const ElementId& activity);

}  // namespace umlmeter
