#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "umlmeter/errors.hpp"
#include "umlmeter/model.hpp"

using namespace umlmeter;
using umlmeter::testing::oracle_ancestor_set;
using umlmeter::testing::oracle_descendant_set;

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

ModelElement generalization(std::string id, std::string specific,
                            std::string general) {
  ModelElement g = element(std::move(id), ElementKind::Generalization);
  g.owner = std::move(specific);
  g.refs["general"] = std::move(general);
  return g;
}

// Diamond: D -> {B, C}, B -> A, C -> A, A -> R.
UmlModel diamond() {
  ModelBuilder b;
  for (const char* id : {"R", "A", "B", "C", "D"}) {
    b.add(element(id, ElementKind::Class, id));
  }
  b.add(generalization("gA", "A", "R"));
  b.add(generalization("gB", "B", "A"));
  b.add(generalization("gC", "C", "A"));
  b.add(generalization("gD1", "D", "B"));
  b.add(generalization("gD2", "D", "C"));
  return b.build();
}

}  // namespace

TEST_CASE("ancestors: root, chain, diamond") {
  ModelBuilder b;
  b.add(element("A", ElementKind::Class, "A"));
  b.add(element("B", ElementKind::Class, "B"));
  b.add(element("C", ElementKind::Class, "C"));
  b.add(generalization("g1", "C", "B"));
  b.add(generalization("g2", "B", "A"));
  UmlModel chain = b.build();

  CHECK(chain.ancestors("A").empty());
  CHECK(chain.ancestors("C") == std::vector<ElementId>{"B", "A"});

  UmlModel d = diamond();
  // A appears once, breadth-first from D.
  CHECK(d.ancestors("D") == std::vector<ElementId>{"B", "C", "A", "R"});
}

TEST_CASE("descendants: leaf, tree, self-exclusion") {
  ModelBuilder b;
  b.add(element("A", ElementKind::Class, "A"));
  b.add(element("B", ElementKind::Class, "B"));
  b.add(element("C", ElementKind::Class, "C"));
  b.add(element("D", ElementKind::Class, "D"));
  b.add(generalization("g1", "B", "A"));
  b.add(generalization("g2", "C", "A"));
  b.add(generalization("g3", "D", "B"));
  UmlModel m = b.build();

  CHECK(m.descendants("D").empty());
  CHECK(m.descendants("A") == std::set<ElementId>{"B", "C", "D"});
  CHECK(m.descendants("D").count("D") == 0);
}

TEST_CASE("ancestors and descendants are disjoint on every classifier") {
  UmlModel m = diamond();
  for (const char* id : {"R", "A", "B", "C", "D"}) {
    auto up = m.ancestors(id);
    auto down = m.descendants(id);
    for (const ElementId& a : up) CHECK(down.count(a) == 0);
  }
}

TEST_CASE("traversals agree with the edge-list reachability oracle") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    UmlModel m = umlmeter::testing::random_hierarchy(rng, 12);
    for (const ElementId& cls : m.of_kind(ElementKind::Class)) {
      auto bfs = m.ancestors(cls);
      std::set<ElementId> bfs_set(bfs.begin(), bfs.end());
      CHECK(bfs_set == oracle_ancestor_set(m, cls));
      CHECK(bfs.size() == bfs_set.size());  // no duplicates in BFS order
      CHECK(m.descendants(cls) == oracle_descendant_set(m, cls));
    }
  }
}

TEST_CASE("referenced_classes collects types, params and association ends") {
  ModelBuilder b;
  b.add(element("c1", ElementKind::Class, "Main"));
  b.add(element("c2", ElementKind::Class, "B"));
  b.add(element("c3", ElementKind::Class, "C"));
  ModelElement attr = element("a1", ElementKind::Attribute, "x", "c1");
  attr.refs["type"] = "c2";
  b.add(attr);
  ModelElement assoc = element("as1", ElementKind::Association);
  assoc.end_types = {"c1", "c3"};
  b.add(assoc);
  UmlModel m = b.build();

  CHECK(m.referenced_classes("c1") == std::set<ElementId>{"c2", "c3"});
  CHECK(m.referenced_classes("c2").empty());
}

TEST_CASE("empty class references nothing; self excluded") {
  ModelBuilder b;
  b.add(element("c1", ElementKind::Class, "Solo"));
  ModelElement self_assoc = element("as1", ElementKind::Association);
  self_assoc.end_types = {"c1", "c1"};
  b.add(self_assoc);
  UmlModel m = b.build();
  CHECK(m.referenced_classes("c1").empty());
}

TEST_CASE("unknown ids and wrong kinds are rejected") {
  ModelBuilder b;
  b.add(element("p1", ElementKind::Package, "pkg"));
  b.add(element("c1", ElementKind::Class, "C"));
  UmlModel m = b.build();
  CHECK_THROWS_AS(m.ancestors("nope"), NotFound);
  CHECK_THROWS_AS(m.ancestors("p1"), WrongElementKind);
  CHECK_THROWS_AS(m.descendants("p1"), WrongElementKind);
  CHECK_THROWS_AS(m.referenced_classes("p1"), WrongElementKind);
  CHECK_THROWS_AS(m.at("nope"), NotFound);
}

TEST_CASE("unresolved references are quarantined, never dropped") {
  ModelBuilder b;
  b.add(element("c1", ElementKind::Class, "C"));
  ModelElement attr = element("a1", ElementKind::Attribute, "x", "c1");
  attr.refs["type"] = "ghost";
  b.add(attr);
  UmlModel m = b.build();
  REQUIRE(m.unresolved_refs().size() == 1);
  CHECK(m.unresolved_refs()[0].source == "a1");
  CHECK(m.unresolved_refs()[0].target == "ghost");
  // the quarantined target acts as absent
  CHECK(m.at("a1").refs.count("type") == 0);
  CHECK(m.referenced_classes("c1").empty());
  // the quarantined id is not an element
  CHECK(m.find("ghost") == nullptr);
}

TEST_CASE("generalization cycles abort the build with the cycle listed") {
  ModelBuilder b;
  b.add(element("c1", ElementKind::Class, "X"));
  b.add(element("c2", ElementKind::Class, "Y"));
  b.add(generalization("g1", "c1", "c2"));
  b.add(generalization("g2", "c2", "c1"));
  try {
    b.build();
    FAIL("expected InvalidModel");
  } catch (const InvalidModel& e) {
    std::string message = e.what();
    CHECK(message.find("cycle") != std::string::npos);
    CHECK(message.find("c1") != std::string::npos);
    CHECK(message.find("c2") != std::string::npos);
  }
}

TEST_CASE("kind-mismatched refs and tags are rejected at construction") {
  ModelBuilder b;
  ModelElement state = element("s1", ElementKind::State, "S");
  state.refs["signature"] = "x";  // a State never carries a Message signature
  CHECK_THROWS_AS(b.add(state), WrongElementKind);

  ModelBuilder b2;
  ModelElement cls = element("c1", ElementKind::Class, "C");
  cls.tags["guard"] = "x";
  CHECK_THROWS_AS(b2.add(cls), WrongElementKind);

  ModelBuilder b3;
  b3.add(element("c2", ElementKind::Class, "C2"));
  CHECK_THROWS_AS(b3.add(element("c2", ElementKind::Class, "dup")),
                  InvalidModel);
}

TEST_CASE("qualified names use the package path") {
  ModelBuilder b;
  b.add(element("p1", ElementKind::Package, "outer"));
  b.add(element("p2", ElementKind::Package, "inner", "p1"));
  b.add(element("c1", ElementKind::Class, "Thing", "p2"));
  b.add(element("c2", ElementKind::Class, "", "p1"));
  UmlModel m = b.build();
  CHECK(m.qualified_name("c1") == "outer::inner::Thing");
  CHECK(m.qualified_name("c2") == "outer::#c2");  // unnamed leaf keeps its id
  CHECK(m.package_of("c1") == "p2");
  CHECK(m.package_of("p1") == "");
}

TEST_CASE("rebuilding indices from the raw element list is idempotent") {
  UmlModel m = umlmeter::testing::load_fixture("mwk_like.xmi");
  ModelBuilder rebuild;
  rebuild.source(m.source());
  for (const ElementId& id : m.ids()) rebuild.add(m.at(id));
  UmlModel m2 = rebuild.build();

  REQUIRE(m.ids() == m2.ids());
  for (const ElementId& id : m.ids()) {
    CHECK(m.children(id) == m2.children(id));
    CHECK(m.generals(id) == m2.generals(id));
    CHECK(m.specifics(id) == m2.specifics(id));
    CHECK(m.associations_of(id) == m2.associations_of(id));
    CHECK(m.dependencies_from(id) == m2.dependencies_from(id));
    CHECK(m.transitions_from(id) == m2.transitions_from(id));
    CHECK(m.flows_from(id) == m2.flows_from(id));
  }
  for (int k = 0; k < kElementKindCount; ++k) {
    CHECK(m.of_kind(static_cast<ElementKind>(k)) ==
          m2.of_kind(static_cast<ElementKind>(k)));
  }
}
