#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "umlmeter/errors.hpp"
#include "umlmeter/xmi.hpp"

using namespace umlmeter;
using umlmeter::testing::fixture_path;
using umlmeter::testing::load_fixture;
using umlmeter::testing::raw_xml_census;
using umlmeter::testing::read_file;

TEST_CASE("minimal document: one named class") {
  UmlModel m = load_fixture("minimal_class.xmi");
  REQUIRE(m.kind_count(ElementKind::Class) == 1);
  CHECK(m.at(m.of_kind(ElementKind::Class)[0]).name == "Lonely");
  CHECK(m.unresolved_refs().empty());
  CHECK(m.unrecognized_tags().empty());
}

TEST_CASE("census: parsed per-kind counts match the raw text scan") {
  for (const char* name : {"mwk_like.xmi", "mwk_like_prev.xmi",
                           "clean_small.xmi", "minimal_class.xmi",
                           "model_root.xmi", "quarantine.xmi"}) {
    CAPTURE(name);
    std::string text = read_file(fixture_path(name));
    UmlModel m = parse_xmi(text, name);
    auto census = raw_xml_census(text);
    for (const auto& [kind_text, expected] : census) {
      CAPTURE(kind_text);
      auto kind = kind_from_name(kind_text);
      REQUIRE(kind.has_value());
      CHECK(static_cast<int>(m.kind_count(*kind)) == expected);
    }
  }
}

TEST_CASE("mwk-like fixture mirrors the case-study shape") {
  UmlModel m = load_fixture("mwk_like.xmi");
  CHECK(m.kind_count(ElementKind::UseCase) == 12);
  CHECK(m.kind_count(ElementKind::Actor) == 4);
  CHECK(m.kind_count(ElementKind::Class) == 12);
  CHECK(m.kind_count(ElementKind::Package) == 3);
  CHECK(m.kind_count(ElementKind::StateMachine) == 1);
  CHECK(m.kind_count(ElementKind::Activity) == 1);
  CHECK(m.kind_count(ElementKind::Interaction) == 1);
  CHECK(m.unresolved_refs().empty());
  CHECK(m.unrecognized_tags().empty());

  // The GCS class carries exactly 26 operations.
  CHECK(m.owned_of_kind("c_gcs", ElementKind::Operation).size() == 26);
}

TEST_CASE("quarantine: missing attribute type degrades, never drops") {
  UmlModel m = load_fixture("quarantine.xmi");
  REQUIRE(m.unresolved_refs().size() == 1);
  CHECK(m.unresolved_refs()[0].target == "missing_type");
  CHECK(m.owned_of_kind("c1", ElementKind::Attribute).size() == 1);
  CHECK(m.referenced_classes("c1").empty());
}

TEST_CASE("parse is deterministic: same bytes, same model") {
  std::string text = read_file(fixture_path("mwk_like.xmi"));
  UmlModel a = parse_xmi(text, "x");
  UmlModel b = parse_xmi(text, "x");
  REQUIRE(a.ids() == b.ids());
  for (const ElementId& id : a.ids()) {
    CHECK(a.at(id).kind == b.at(id).kind);
    CHECK(a.at(id).refs == b.at(id).refs);
    CHECK(a.at(id).tags == b.at(id).tags);
    CHECK(a.at(id).end_types == b.at(id).end_types);
  }
}

TEST_CASE("no element id is also a quarantined target") {
  for (const char* name : {"mwk_like.xmi", "quarantine.xmi"}) {
    UmlModel m = load_fixture(name);
    for (const UnresolvedRef& u : m.unresolved_refs()) {
      CHECK(m.find(u.target) == nullptr);
    }
  }
}

TEST_CASE("dialect detection") {
  XmiDialect d = detect_dialect(read_file(fixture_path("mwk_like.xmi")));
  CHECK(d.xmi_version == "2.1");
  CHECK_FALSE(d.exporter.has_value());

  XmiDialect toolx = detect_dialect(read_file(fixture_path("dialect_toolx.xmi")));
  CHECK(toolx.xmi_version == "2.1");
  REQUIRE(toolx.exporter.has_value());
  CHECK(*toolx.exporter == "ToolX");

  XmiDialect bare = detect_dialect(read_file(fixture_path("model_root.xmi")));
  CHECK(bare.xmi_version == "2.1");

  CHECK_THROWS_AS(detect_dialect(read_file(fixture_path("not_xmi.xml"))),
                  NotXmi);
}

TEST_CASE("exporter dialect table maps synonym tags") {
  std::string text = read_file(fixture_path("dialect_toolx.xmi"));

  // Without the table the exporter's tags are unrecognized (reported, not
  // fatal) and nothing maps.
  UmlModel plain = parse_xmi(text, "toolx");
  CHECK(plain.kind_count(ElementKind::Class) == 0);
  CHECK(plain.unrecognized_tags().count("clazz") == 1);

  IngestOptions options;
  options.dialects = load_dialect_dir(std::string(UMLMETER_DATA_DIR) +
                                      "/dialects");
  UmlModel m = parse_xmi(text, "toolx", options);
  CHECK(m.kind_count(ElementKind::Class) == 2);
  CHECK(m.kind_count(ElementKind::Attribute) == 1);
  CHECK(m.kind_count(ElementKind::Operation) == 1);
  CHECK(m.at("a1").tags.at("visibility") == "private");
  CHECK(m.generals("c1") == std::vector<ElementId>{"c2"});
  CHECK(m.unrecognized_tags().empty());
}

TEST_CASE("model-root documents parse without the XMI wrapper") {
  UmlModel m = load_fixture("model_root.xmi");
  CHECK(m.kind_count(ElementKind::Class) == 1);
}

TEST_CASE("malformed XML raises ParseError with a location") {
  try {
    load_fixture("malformed.xmi");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() > 1);
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }
}

TEST_CASE("plain XML raises NotXmi") {
  CHECK_THROWS_AS(load_fixture("not_xmi.xml"), NotXmi);
}

TEST_CASE("generalization cycle raises InvalidModel at ingest") {
  CHECK_THROWS_AS(load_fixture("cycle.xmi"), InvalidModel);
}

TEST_CASE("association ends resolve through memberEnd and ownedEnd") {
  UmlModel m = load_fixture("mwk_like.xmi");
  CHECK(m.at("assoc_co").end_types ==
        std::vector<ElementId>{"c_client", "c_order"});
  CHECK(m.at("assoc_io").end_types ==
        std::vector<ElementId>{"c_invoice", "c_order"});
}

TEST_CASE("message events resolve to lifelines through occurrences") {
  UmlModel m = load_fixture("mwk_like.xmi");
  const ModelElement& m1 = m.at("m1");
  CHECK(m1.refs.at("send_lifeline") == "lf_client");
  CHECK(m1.refs.at("receive_lifeline") == "lf_gcs");
  CHECK(m1.refs.at("signature") == "op_g01");
  // lifeline -> classifier resolution, both direct and via a property
  CHECK(m.lifeline_classifier("lf_client") == ElementId("c_client"));
  CHECK(m.lifeline_classifier("lf_gcs") == ElementId("c_gcs"));
}

TEST_CASE("behavior attachment and state machine content") {
  UmlModel m = load_fixture("mwk_like.xmi");
  CHECK(m.behavior_of_operation("op_srv1") == ElementId("act_total"));
  CHECK(m.behavior_of_operation("op_ord3") == ElementId("sm_order"));
  CHECK_FALSE(m.behavior_of_operation("op_ent1").has_value());

  CHECK(m.at("st_new").tags.at("entry") == "logCreate");
  CHECK(m.at("st_active").tags.at("do_activity") == "monitor");
  CHECK(m.at("st_done").tags.at("exit") == "archive");
  CHECK(m.at("ch1").tags.at("subkind") == "choice");
  CHECK(m.at("fs_closed").tags.at("subkind") == "final");
  CHECK(m.at("t2").tags.at("guard") == "paid");
  CHECK(m.at("t2").tags.at("effect") == "notify");
  CHECK(m.at("t6").tags.at("guard") == "ok");  // child <guard> form
  CHECK(m.at("of2").tags.at("guard") == "valid");
}
