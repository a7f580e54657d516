#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "umlmeter/ck.hpp"
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

TEST_CASE("wmc1 counts owned operations only") {
  UmlModel m = load_fixture("mwk_like.xmi");
  CHECK(wmc1(m, "c_gcs") == 26);       // the case-study outlier
  CHECK(wmc1(m, "c_billable") == 0);   // parents' operations do not count
  CHECK(wmc1(m, "c_service") == 3);
  CHECK_THROWS_AS(wmc1(m, "nope"), NotFound);
  CHECK_THROWS_AS(wmc1(m, "p_core"), WrongElementKind);
}

TEST_CASE("cyclomatic complexity of behaviors") {
  UmlModel m = load_fixture("mwk_like.xmi");
  // one decision node with two outgoing flows
  CHECK(cyclomatic_of_behavior(m, "act_total") == 2);
  // one choice pseudostate with two outgoing transitions
  CHECK(cyclomatic_of_behavior(m, "sm_order") == 2);
  CHECK_THROWS_AS(cyclomatic_of_behavior(m, "c_gcs"), WrongElementKind);

  // linear activity -> 1 (McCabe base case)
  ModelBuilder b;
  b.add(element("c", ElementKind::Class, "C"));
  b.add(element("act", ElementKind::Activity, "linear", "c"));
  b.add(element("a1", ElementKind::Action, "step1", "act"));
  b.add(element("a2", ElementKind::Action, "step2", "act"));
  ModelElement flow = element("f1", ElementKind::ControlFlow, "", "act");
  flow.refs["source"] = "a1";
  flow.refs["target"] = "a2";
  b.add(flow);
  UmlModel linear = b.build();
  CHECK(cyclomatic_of_behavior(linear, "act") == 1);
}

TEST_CASE("two decision nodes with 3 and 2 outgoing flows give CC 4") {
  ModelBuilder b;
  b.add(element("act", ElementKind::Activity, "branchy"));
  b.add(element("d1", ElementKind::DecisionNode, "", "act"));
  b.add(element("d2", ElementKind::DecisionNode, "", "act"));
  for (int i = 0; i < 5; ++i) {
    b.add(element("t" + std::to_string(i), ElementKind::Action, "", "act"));
  }
  int flow_id = 0;
  auto flow = [&](const char* from, const std::string& to) {
    ModelElement f = element("f" + std::to_string(flow_id++),
                             ElementKind::ControlFlow, "", "act");
    f.refs["source"] = from;
    f.refs["target"] = to;
    b.add(f);
  };
  flow("d1", "t0");
  flow("d1", "t1");
  flow("d1", "t2");
  flow("d2", "t3");
  flow("d2", "t4");
  UmlModel m = b.build();
  CHECK(cyclomatic_of_behavior(m, "act") == 1 + (3 - 1) + (2 - 1));
}

TEST_CASE("wmc_cc sums behavior complexities, degrades to wmc1") {
  UmlModel m = load_fixture("mwk_like.xmi");
  CHECK(wmc_cc(m, "c_service") == 4);  // 2 (activity) + 1 + 1
  CHECK(wmc_cc(m, "c_order") == 4);    // 1 + 1 + 2 (state machine)
  CHECK(wmc_cc(m, "c_gcs") == 26);     // no behaviors: equals wmc1
  CHECK(wmc_cc(m, "c_billable") == 0);
}

TEST_CASE("wmc_cc >= wmc1 on every fixture class") {
  for (const char* name : {"mwk_like.xmi", "mwk_like_prev.xmi",
                           "clean_small.xmi"}) {
    UmlModel m = load_fixture(name);
    for (const ElementId& cls : m.of_kind(ElementKind::Class)) {
      CAPTURE(cls);
      int unit = wmc1(m, cls);
      int weighted = wmc_cc(m, cls);
      CHECK(weighted >= unit);
      bool has_behavior = false;
      for (const ElementId& op : m.owned_of_kind(cls, ElementKind::Operation)) {
        if (m.behavior_of_operation(op)) has_behavior = true;
      }
      if (!has_behavior) CHECK(weighted == unit);
    }
  }
}

TEST_CASE("dit: root, chain and diamond depths") {
  UmlModel m = load_fixture("mwk_like.xmi");
  CHECK(dit(m, "c_entity") == 0);
  CHECK(dit(m, "c_party") == 1);
  CHECK(dit(m, "c_client") == 2);
  CHECK(dit(m, "c_premium") == 3);  // diamond, longest path wins
}

TEST_CASE("dit equals 1 + max over direct parents") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    UmlModel m = umlmeter::testing::random_hierarchy(rng, 10);
    for (const ElementId& cls : m.of_kind(ElementKind::Class)) {
      const auto& parents = m.generals(cls);
      if (parents.empty()) {
        CHECK(dit(m, cls) == 0);
      } else {
        int best = 0;
        for (const ElementId& parent : parents) {
          best = std::max(best, dit(m, parent));
        }
        CHECK(dit(m, cls) == 1 + best);
      }
    }
  }
}

TEST_CASE("noc and descendant counts") {
  UmlModel m = load_fixture("mwk_like.xmi");
  CHECK(noc(m, "c_premium") == std::pair<int, int>{0, 0});
  CHECK(noc(m, "c_party") == std::pair<int, int>{3, 4});
  CHECK(noc(m, "c_entity") == std::pair<int, int>{5, 9});
  for (const ElementId& cls : m.of_kind(ElementKind::Class)) {
    auto [children, descendants] = noc(m, cls);
    CHECK(descendants >= children);
  }
}

TEST_CASE("interfaces are excluded from noc/dit by default, included on demand") {
  ModelBuilder b;
  b.add(element("i1", ElementKind::Interface, "Base"));
  b.add(element("c1", ElementKind::Class, "Impl"));
  ModelElement g = element("g1", ElementKind::Generalization, "", "c1");
  g.refs["general"] = "i1";
  b.add(g);
  UmlModel m = b.build();
  CHECK(dit(m, "c1") == 0);
  CHECK(noc(m, "i1").first == 1);  // class children of an interface count
  HierarchyOptions with_interfaces{true};
  CHECK(dit(m, "c1", with_interfaces) == 1);
}

TEST_CASE("rfc: one call level from the class's lifelines") {
  UmlModel m = load_fixture("mwk_like.xmi");
  CHECK(rfc(m, "c_gcs") == MetricValue(28));    // 26 owned + total + getQuantity
  CHECK(rfc(m, "c_client") == MetricValue(3));  // duplicate call counted once
  CHECK(rfc(m, "c_service") == MetricValue(3)); // self-calls already owned
  CHECK(rfc(m, "c_payment") == MetricValue(3)); // no lifelines: |M|
}

TEST_CASE("rfc is unavailable without interactions, wmc1 reports |M|") {
  UmlModel m = load_fixture("clean_small.xmi");
  CHECK_FALSE(rfc(m, "c1").available());
  CHECK(wmc1(m, "c1") == 1);  // the fallback value, reported separately
}

TEST_CASE("cbo: structural references plus message targets") {
  UmlModel m = load_fixture("mwk_like.xmi");
  // structurally GCS only references Service; messages add Order
  CHECK(m.referenced_classes("c_gcs") == std::set<ElementId>{"c_service"});
  CHECK(cbo(m, "c_gcs") == 2);
  // without interactions the structural count stands
  UmlModel small = load_fixture("clean_small.xmi");
  CHECK(cbo(small, "c2") == 1);
  CHECK(cbo(small, "c1") == 0);  // isolated
}

TEST_CASE("usage map evidence: dependencies and accessor self-messages") {
  UmlModel m = load_fixture("mwk_like.xmi");
  UsageMap usage = derive_usage_map(m);
  CHECK(usage.at("op_pay1") == std::set<ElementId>{"a_pay1"});
  CHECK(usage.at("op_pay2") == std::set<ElementId>{"a_pay1"});
  CHECK(usage.at("op_pay3") == std::set<ElementId>{"a_pay2"});
  // self-messages getLabel/setLabel name accessors of Service.label
  CHECK(usage.at("op_srv2") == std::set<ElementId>{"a_srv1"});
  CHECK(usage.at("op_srv3") == std::set<ElementId>{"a_srv1"});
  CHECK(usage.count("op_g01") == 0);
  CHECK(usage == umlmeter::testing::oracle_usage_map(m));
}

TEST_CASE("usage map is empty without evidence") {
  UmlModel m = load_fixture("clean_small.xmi");
  CHECK(derive_usage_map(m).empty());
}

TEST_CASE("merged evidence sources collapse to one entry") {
  ModelBuilder b;
  b.add(element("c1", ElementKind::Class, "C"));
  b.add(element("a1", ElementKind::Attribute, "label", "c1"));
  b.add(element("o1", ElementKind::Operation, "getLabel", "c1"));
  ModelElement dep = element("d1", ElementKind::Dependency);
  dep.refs["client"] = "o1";
  dep.refs["supplier"] = "a1";
  b.add(dep);
  b.add(element("ix", ElementKind::Interaction, "flow", "c1"));
  ModelElement life = element("lf", ElementKind::Lifeline, "c", "ix");
  life.refs["represents"] = "c1";
  b.add(life);
  ModelElement msg = element("m1", ElementKind::Message, "getLabel", "ix");
  msg.refs["send_lifeline"] = "lf";
  msg.refs["receive_lifeline"] = "lf";
  msg.refs["signature"] = "o1";
  b.add(msg);
  UmlModel m = b.build();
  UsageMap usage = derive_usage_map(m);
  CHECK(usage.at("o1") == std::set<ElementId>{"a1"});  // union, not duplicates
}

TEST_CASE("lcom pair counting") {
  UmlModel m = load_fixture("mwk_like.xmi");
  UsageMap usage = derive_usage_map(m);
  // Payment: {a},{a},{b} -> P=2, Q=1 -> 1
  CHECK(lcom(m, "c_payment", usage) == MetricValue(1));
  // Service: {},{a},{a} -> P=2, Q=1 -> 1
  CHECK(lcom(m, "c_service", usage) == MetricValue(1));
  // fewer than two operations -> 0 regardless of evidence
  CHECK(lcom(m, "c_entity", usage) == MetricValue(0));
  // operations but no evidence -> unavailable, distinct from 0
  CHECK_FALSE(lcom(m, "c_gcs", usage).available());
}

TEST_CASE("lcom is invariant under renaming") {
  auto build = [&](const char* op_a, const char* op_b, const char* attr_a) {
    ModelBuilder b;
    b.add(element("c1", ElementKind::Class, "C"));
    b.add(element("a1", ElementKind::Attribute, attr_a, "c1"));
    b.add(element("a2", ElementKind::Attribute, "other", "c1"));
    b.add(element("o1", ElementKind::Operation, op_a, "c1"));
    b.add(element("o2", ElementKind::Operation, op_b, "c1"));
    for (const char* pair : {"o1:a1", "o2:a2"}) {
      std::string text(pair);
      ModelElement dep = element("d" + text, ElementKind::Dependency);
      dep.refs["client"] = text.substr(0, 2);
      dep.refs["supplier"] = text.substr(3);
      b.add(dep);
    }
    UmlModel m = b.build();
    return lcom(m, "c1", derive_usage_map(m));
  };
  CHECK(build("alpha", "beta", "x") == build("gamma", "delta", "y"));
}

TEST_CASE("ck records match the brute-force oracle on every fixture class") {
  WeightConfig weights = WeightConfig::defaults();
  HierarchyOptions options;
  for (const char* name : {"mwk_like.xmi", "mwk_like_prev.xmi",
                           "clean_small.xmi", "quarantine.xmi"}) {
    CAPTURE(name);
    UmlModel m = load_fixture(name);
    UsageMap usage = derive_usage_map(m);
    for (const ElementId& cls : m.of_kind(ElementKind::Class)) {
      CAPTURE(cls);
      CkRecord record = ck_record(m, cls, usage, options);
      auto oracle = [&](const char* metric) {
        return umlmeter::testing::oracle_metric(m, weights, options, metric,
                                                cls);
      };
      CHECK(MetricValue(record.wmc1) == oracle("WMC1"));
      CHECK(MetricValue(record.wmc_cc) == oracle("WMC_CC"));
      CHECK(MetricValue(record.dit) == oracle("DIT"));
      CHECK(MetricValue(record.noc) == oracle("NOC"));
      CHECK(MetricValue(record.num_desc) == oracle("NumDesc"));
      CHECK(record.rfc == oracle("RFC"));
      CHECK(MetricValue(record.cbo) == oracle("CBO"));
      CHECK(record.lcom == oracle("LCOM"));
      CHECK(record.num_desc >= record.noc);
    }
  }
}
