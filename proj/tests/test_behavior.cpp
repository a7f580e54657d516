#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "umlmeter/behavior.hpp"
#include "umlmeter/errors.hpp"

using namespace umlmeter;
using umlmeter::testing::load_fixture;

namespace {

ModelElement element(std::string id, ElementKind kind, std::string name = "",
                     std::string owner = "") {
  ModelElement e;
  e.id = std::move(id);
  e.kind = kind;
  e.name = std::move(name);
  e.owner = std::move(owner);
  return e;
}

}  // namespace

TEST_CASE("statechart census on the mwk state machine") {
  UmlModel m = load_fixture("mwk_like.xmi");
  StatechartRecord r = statechart_metrics(m, "sm_order");
  CHECK(r.states == 4);        // New, Active, Done, Cancelled
  CHECK(r.pseudostates == 3);  // initial, choice, final
  CHECK(r.transitions == 8);
  CHECK(r.ttrigger == 4);      // t2 carries two triggers
  CHECK(r.tguard == 4);        // t2, t4, t6, t7
  CHECK(r.teffects == 1);      // t2
  CHECK(r.entry_actions == 1);
  CHECK(r.exit_actions == 1);
  CHECK(r.activities == 1);    // the do-activity on Active
  CHECK(r.tguard <= r.transitions);
  CHECK(r.teffects <= r.transitions);
  CHECK_THROWS_AS(statechart_metrics(m, "c_order"), WrongElementKind);
}

TEST_CASE("empty state machine yields zeros") {
  ModelBuilder b;
  b.add(element("sm", ElementKind::StateMachine, "Empty"));
  UmlModel m = b.build();
  StatechartRecord r = statechart_metrics(m, "sm");
  CHECK(r.states == 0);
  CHECK(r.transitions == 0);
  CHECK(r.ttrigger == 0);
  CHECK(r.tguard == 0);
  CHECK(r.teffects == 0);
}

TEST_CASE("a transition with both guard and effect increments each once") {
  ModelBuilder b;
  b.add(element("sm", ElementKind::StateMachine, "M"));
  b.add(element("s1", ElementKind::State, "S1", "sm"));
  b.add(element("s2", ElementKind::State, "S2", "sm"));
  ModelElement t = element("t1", ElementKind::Transition, "", "sm");
  t.refs["source"] = "s1";
  t.refs["target"] = "s2";
  t.tags["guard"] = "x > 0";
  t.tags["effect"] = "fire";
  b.add(t);
  UmlModel m = b.build();
  StatechartRecord r = statechart_metrics(m, "sm");
  CHECK(r.transitions == 1);
  CHECK(r.tguard == 1);
  CHECK(r.teffects == 1);
}

TEST_CASE("activity census on the mwk activity") {
  UmlModel m = load_fixture("mwk_like.xmi");
  ActivityRecord r = activity_metrics(m, "act_total");
  CHECK(r.actions == 4);
  CHECK(r.object_nodes == 1);  // pins never double-count as object nodes
  CHECK(r.pins == 2);
  CHECK(r.guards == 3);  // two guarded control flows + one guarded object flow
  CHECK(r.partitions == 1);
  CHECK(r.object_flows == 2);
  CHECK(r.exception_handlers == 1);
  CHECK_THROWS_AS(activity_metrics(m, "sm_order"), WrongElementKind);
}

TEST_CASE("empty activity yields zeros") {
  ModelBuilder b;
  b.add(element("act", ElementKind::Activity, "Empty"));
  UmlModel m = b.build();
  ActivityRecord r = activity_metrics(m, "act");
  CHECK(r.actions == 0);
  CHECK(r.object_nodes == 0);
  CHECK(r.pins == 0);
  CHECK(r.guards == 0);
  CHECK(r.partitions == 0);
  CHECK(r.object_flows == 0);
  CHECK(r.exception_handlers == 0);
}

TEST_CASE("deleting an unguarded flow leaves guards unchanged") {
  auto build = [&](bool with_extra_flow) {
    ModelBuilder b;
    b.add(element("act", ElementKind::Activity, "A"));
    b.add(element("a1", ElementKind::Action, "x", "act"));
    b.add(element("a2", ElementKind::Action, "y", "act"));
    ModelElement guarded = element("f1", ElementKind::ControlFlow, "", "act");
    guarded.refs["source"] = "a1";
    guarded.refs["target"] = "a2";
    guarded.tags["guard"] = "go";
    b.add(guarded);
    if (with_extra_flow) {
      ModelElement plain = element("f2", ElementKind::ControlFlow, "", "act");
      plain.refs["source"] = "a2";
      plain.refs["target"] = "a1";
      b.add(plain);
    }
    return b.build();
  };
  CHECK(activity_metrics(build(true), "act").guards ==
        activity_metrics(build(false), "act").guards);
}

TEST_CASE("behavior censuses match the brute-force oracle") {
  WeightConfig w = WeightConfig::defaults();
  HierarchyOptions options;
  UmlModel m = load_fixture("mwk_like.xmi");
  for (const ElementId& sm : m.of_kind(ElementKind::StateMachine)) {
    StatechartRecord r = statechart_metrics(m, sm);
    auto oracle = [&](const char* metric) {
      return umlmeter::testing::oracle_metric(m, w, options, metric, sm);
    };
    CHECK(MetricValue(r.states) == oracle("States"));
    CHECK(MetricValue(r.pseudostates) == oracle("Pseudostates"));
    CHECK(MetricValue(r.transitions) == oracle("Transitions"));
    CHECK(MetricValue(r.ttrigger) == oracle("TTrigger"));
    CHECK(MetricValue(r.tguard) == oracle("TGuard"));
    CHECK(MetricValue(r.teffects) == oracle("TEffects"));
    CHECK(MetricValue(r.entry_actions) == oracle("EntryActions"));
    CHECK(MetricValue(r.exit_actions) == oracle("ExitActions"));
    CHECK(MetricValue(r.activities) == oracle("Activities"));
  }
  for (const ElementId& act : m.of_kind(ElementKind::Activity)) {
    ActivityRecord r = activity_metrics(m, act);
    auto oracle = [&](const char* metric) {
      return umlmeter::testing::oracle_metric(m, w, options, metric, act);
    };
    CHECK(MetricValue(r.actions) == oracle("Actions"));
    CHECK(MetricValue(r.object_nodes) == oracle("ObjectNodes"));
    CHECK(MetricValue(r.pins) == oracle("Pins"));
    CHECK(MetricValue(r.guards) == oracle("Guards"));
    CHECK(MetricValue(r.partitions) == oracle("Partitions"));
    CHECK(MetricValue(r.object_flows) == oracle("ObjectFlows"));
    CHECK(MetricValue(r.exception_handlers) == oracle("ExceptionHandlers"));
  }
}
