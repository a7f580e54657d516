#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "umlmeter/errors.hpp"
#include "umlmeter/structural.hpp"

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

TEST_CASE("weight config validation") {
  WeightConfig w = WeightConfig::defaults();
  CHECK_NOTHROW(w.validate());
  w.dependency_weights["association"] = -1;
  CHECK_THROWS_AS(w.validate(), InvalidConfig);
}

TEST_CASE("empty class yields zeros") {
  ModelBuilder b;
  b.add(element("c1", ElementKind::Class, "Empty"));
  UmlModel m = b.build();
  ClassMetricsRecord r = class_metrics(m, "c1", WeightConfig::defaults());
  CHECK(r.num_attr == 0);
  CHECK(r.num_ops == 0);
  CHECK(r.cl1 == 0);
  CHECK(r.cl2 == 0);
  CHECK(r.cl3 == 0);
  CHECK(r.cl4 == 0);
  CHECK(r.cl5 == 0);
}

TEST_CASE("cl1: two public operations and a private attribute weigh 2.25") {
  ModelBuilder b;
  b.add(element("c1", ElementKind::Class, "C"));
  for (const char* op : {"o1", "o2"}) {
    ModelElement o = element(op, ElementKind::Operation, op, "c1");
    o.tags["visibility"] = "public";
    b.add(o);
  }
  ModelElement attr = element("a1", ElementKind::Attribute, "x", "c1");
  attr.tags["visibility"] = "private";
  b.add(attr);
  UmlModel m = b.build();
  ClassMetricsRecord r = class_metrics(m, "c1", WeightConfig::defaults());
  CHECK(r.cl1 == doctest::Approx(2.25).epsilon(1e-12));
}

TEST_CASE("cl1 with unit weights degenerates to num_attr + num_ops") {
  WeightConfig unit;
  unit.responsibility_weights = {
      {"public", 1.0}, {"protected", 1.0}, {"private", 1.0}};
  unit.dependency_weights = WeightConfig::defaults().dependency_weights;
  UmlModel m = load_fixture("mwk_like.xmi");
  for (const ElementId& cls : m.of_kind(ElementKind::Class)) {
    ClassMetricsRecord r = class_metrics(m, cls, unit);
    CHECK(r.cl1 == doctest::Approx(r.num_attr + r.num_ops));
  }
}

TEST_CASE("class metrics on the mwk fixture") {
  UmlModel m = load_fixture("mwk_like.xmi");
  WeightConfig w = WeightConfig::defaults();

  ClassMetricsRecord service = class_metrics(m, "c_service", w);
  CHECK(service.num_attr == 2);
  CHECK(service.num_ops == 3);
  CHECK(service.num_inherited_attr == 1);
  CHECK(service.num_ancestors == 1);
  CHECK(service.cl1 == doctest::Approx(3.5));
  CHECK(service.cl2 == doctest::Approx(3.0));  // three associations
  CHECK(service.cl3 == 1);
  CHECK(service.cl5 == 3);

  ClassMetricsRecord gcs = class_metrics(m, "c_gcs", w);
  CHECK(gcs.num_ops == 26);
  CHECK(gcs.cl1 == doctest::Approx(26.25));

  CHECK(class_metrics(m, "c_supplier", w).num_interfaces_impl == 1);
  CHECK(class_metrics(m, "c_invoice", w).num_interfaces_impl == 1);
  CHECK(class_metrics(m, "c_party", w).num_interfaces_impl == 0);

  ClassMetricsRecord premium = class_metrics(m, "c_premium", w);
  CHECK(premium.num_ancestors == 4);  // client, billable, party, entity
  CHECK(premium.num_inherited_attr == 4);
}

TEST_CASE("package metrics and pk2 consistency") {
  UmlModel m = load_fixture("mwk_like.xmi");
  WeightConfig w = WeightConfig::defaults();

  PackageMetricsRecord billing = package_metrics(m, "p_billing", w);
  CHECK(billing.pk1 == 2);
  CHECK(billing.pk2 == doctest::Approx(6.0));
  CHECK(billing.pk3 == 2);  // Invoice-Order association + Payable generalization

  PackageMetricsRecord core = package_metrics(m, "p_core", w);
  CHECK(core.pk1 == 10);
  CHECK(core.pk3 == 1);  // the GCS -> Invoice dependency

  PackageMetricsRecord uc = package_metrics(m, "p_uc", w);
  CHECK(uc.pk1 == 0);
  CHECK(uc.pk3 == 0);

  // pk2 equals the sum of cl1 over the package's classes
  for (const ElementId& pkg : m.of_kind(ElementKind::Package)) {
    double sum = 0;
    for (const ElementId& cls : m.owned_of_kind(pkg, ElementKind::Class)) {
      sum += class_metrics(m, cls, w).cl1;
    }
    CHECK(package_metrics(m, pkg, w).pk2 == doctest::Approx(sum));
  }

  CHECK_THROWS_AS(package_metrics(m, "c_gcs", w), WrongElementKind);
}

TEST_CASE("empty package yields zeros") {
  ModelBuilder b;
  b.add(element("p1", ElementKind::Package, "Empty"));
  UmlModel m = b.build();
  PackageMetricsRecord r = package_metrics(m, "p1", WeightConfig::defaults());
  CHECK(r.pk1 == 0);
  CHECK(r.pk2 == 0);
  CHECK(r.pk3 == 0);
}

TEST_CASE("model totals") {
  UmlModel empty = ModelBuilder().build();
  ModelTotals none = model_totals(empty);
  CHECK(none.nc == 0);
  CHECK(none.np == 0);

  UmlModel m = load_fixture("mwk_like.xmi");
  ModelTotals totals = model_totals(m);
  CHECK(totals.nc == 12);
  CHECK(totals.np == 3);  // nested packages each count once
  CHECK(totals.cross_package_links == 3);
}

TEST_CASE("use case metrics: totals, redundancy, uc4") {
  UmlModel m = load_fixture("mwk_like.xmi");
  WeightConfig w = WeightConfig::defaults();
  UseCaseMetricsRecord r = usecase_metrics(m, w);
  CHECK(r.na == 4);
  CHECK(r.uc1 == 12);  // the case-study's twelve use cases
  CHECK(r.uc2 == 15);  // one duplicated communication
  CHECK(r.uc3 == 14);
  CHECK(r.uc4 == doctest::Approx(1.0 * 12 + 0.0 * 15 + 1.0 * 14));
  CHECK(r.uc3 <= r.uc2);

  std::map<ElementId, UseCaseMetricsRecord::PerUseCase> per;
  for (const auto& entry : r.per_usecase) per[entry.usecase_id] = entry;
  CHECK(per.at("uc01").includes == 1);
  CHECK(per.at("uc10").includes == 1);
  CHECK(per.at("uc02").extends == 1);
  CHECK(per.at("uc08").ext_pts == 1);
  CHECK(per.at("uc03").includes == 0);

  // uc4 coefficients are configurable
  WeightConfig custom = w;
  custom.uc4_alpha = 2.0;
  custom.uc4_beta = 1.0;
  custom.uc4_gamma = 0.5;
  CHECK(usecase_metrics(m, custom).uc4 ==
        doctest::Approx(2.0 * 12 + 1.0 * 15 + 0.5 * 14));
}

TEST_CASE("no actors or use cases: all zeros") {
  UmlModel m = load_fixture("clean_small.xmi");
  UseCaseMetricsRecord r = usecase_metrics(m, WeightConfig::defaults());
  CHECK(r.na == 0);
  CHECK(r.uc1 == 0);
  CHECK(r.uc2 == 0);
  CHECK(r.uc3 == 0);
  CHECK(r.uc4 == 0);
}

TEST_CASE("uc2/uc3: duplicated pairs counted once in uc3") {
  ModelBuilder b;
  b.add(element("a1", ElementKind::Actor, "A1"));
  b.add(element("a2", ElementKind::Actor, "A2"));
  for (int i = 1; i <= 3; ++i) {
    b.add(element("u" + std::to_string(i), ElementKind::UseCase,
                  "U" + std::to_string(i)));
  }
  int n = 0;
  auto link = [&](const char* actor, const char* usecase) {
    ModelElement assoc = element("l" + std::to_string(n++),
                                 ElementKind::Association);
    assoc.end_types = {actor, usecase};
    b.add(assoc);
  };
  link("a1", "u1");
  link("a1", "u1");  // duplicated communication
  link("a1", "u2");
  link("a2", "u3");
  UmlModel m = b.build();
  UseCaseMetricsRecord r = usecase_metrics(m, WeightConfig::defaults());
  CHECK(r.uc2 == 4);
  CHECK(r.uc3 == 3);
}

TEST_CASE("metrics are invariant under element ordering") {
  auto build = [&](bool reversed) {
    std::vector<ModelElement> elements;
    elements.push_back(element("p1", ElementKind::Package, "P"));
    elements.push_back(element("c1", ElementKind::Class, "A", "p1"));
    elements.push_back(element("c2", ElementKind::Class, "B", "p1"));
    ModelElement attr = element("a1", ElementKind::Attribute, "x", "c1");
    attr.refs["type"] = "c2";
    attr.tags["visibility"] = "private";
    elements.push_back(attr);
    ModelElement g = element("g1", ElementKind::Generalization, "", "c2");
    g.refs["general"] = "c1";
    elements.push_back(g);
    if (reversed) std::reverse(elements.begin(), elements.end());
    ModelBuilder b;
    for (ModelElement& e : elements) b.add(std::move(e));
    return b.build();
  };
  UmlModel forward = build(false);
  UmlModel backward = build(true);
  WeightConfig w = WeightConfig::defaults();
  for (const char* cls : {"c1", "c2"}) {
    ClassMetricsRecord a = class_metrics(forward, cls, w);
    ClassMetricsRecord c = class_metrics(backward, cls, w);
    CHECK(a.num_attr == c.num_attr);
    CHECK(a.cl1 == c.cl1);
    CHECK(a.cl2 == c.cl2);
    CHECK(a.cl3 == c.cl3);
    CHECK(a.cl4 == c.cl4);
    CHECK(a.cl5 == c.cl5);
  }
  CHECK(package_metrics(forward, "p1", w).pk2 ==
        package_metrics(backward, "p1", w).pk2);
}

TEST_CASE("structural metrics match the brute-force oracle on fixtures") {
  WeightConfig w = WeightConfig::defaults();
  HierarchyOptions options;
  for (const char* name : {"mwk_like.xmi", "mwk_like_prev.xmi",
                           "clean_small.xmi"}) {
    CAPTURE(name);
    UmlModel m = load_fixture(name);
    for (const ElementId& cls : m.of_kind(ElementKind::Class)) {
      CAPTURE(cls);
      ClassMetricsRecord r = class_metrics(m, cls, w);
      auto oracle = [&](const char* metric) {
        return umlmeter::testing::oracle_metric(m, w, options, metric, cls);
      };
      CHECK(MetricValue(r.num_attr) == oracle("NumAttr"));
      CHECK(MetricValue(r.num_ops) == oracle("NumOps"));
      CHECK(MetricValue(r.num_inherited_attr) == oracle("NumInhAttr"));
      CHECK(MetricValue(r.num_ancestors) == oracle("NumAnc"));
      CHECK(MetricValue(r.num_interfaces_impl) == oracle("IntImpl"));
      CHECK(MetricValue(r.cl1) == oracle("CL1"));
      CHECK(MetricValue(r.cl2) == oracle("CL2"));
      CHECK(MetricValue(r.cl5) == oracle("CL5"));
    }
    for (const ElementId& pkg : m.of_kind(ElementKind::Package)) {
      CAPTURE(pkg);
      PackageMetricsRecord r = package_metrics(m, pkg, w);
      auto oracle = [&](const char* metric) {
        return umlmeter::testing::oracle_metric(m, w, options, metric, pkg);
      };
      CHECK(MetricValue(r.pk1) == oracle("PK1"));
      CHECK(MetricValue(r.pk2) == oracle("PK2"));
      CHECK(MetricValue(r.pk3) == oracle("PK3"));
    }
    auto summary = umlmeter::testing::oracle_model_summary(m, w);
    ModelTotals totals = model_totals(m);
    CHECK(MetricValue(totals.nc) == summary.at("NC"));
    CHECK(MetricValue(totals.np) == summary.at("NP"));
    CHECK(MetricValue(totals.cross_package_links) ==
          summary.at("CrossPackageLinks"));
    UseCaseMetricsRecord uc = usecase_metrics(m, w);
    CHECK(MetricValue(uc.na) == summary.at("NA"));
    CHECK(MetricValue(uc.uc1) == summary.at("UC1"));
    CHECK(MetricValue(uc.uc2) == summary.at("UC2"));
    CHECK(MetricValue(uc.uc3) == summary.at("UC3"));
    CHECK(MetricValue(uc.uc4) == summary.at("UC4"));
  }
}
