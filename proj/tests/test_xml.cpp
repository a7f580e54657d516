#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "umlmeter/errors.hpp"
#include "umlmeter/xml.hpp"

using namespace umlmeter;

TEST_CASE("basic document structure") {
  auto doc = xml::parse(R"(<?xml version="1.0" encoding="UTF-8"?>
<root a="1" b="two">
  <child>text</child>
  <child b="3"/>
</root>)");
  CHECK(doc.declared_encoding == "utf-8");
  CHECK(doc.root.name == "root");
  REQUIRE(doc.root.attrs.size() == 2);
  CHECK(*doc.root.attr("a") == "1");
  CHECK(*doc.root.attr("b") == "two");
  REQUIRE(doc.root.children.size() == 2);
  CHECK(doc.root.children[0].text == "text");
  CHECK(*doc.root.children[1].attr("b") == "3");
  CHECK(doc.root.attr("missing") == nullptr);
}

TEST_CASE("entities, CDATA, comments, PIs") {
  auto doc = xml::parse(
      "<r x=\"a&lt;b&amp;c&quot;d\">"
      "&#65;&#x42;<!-- skip --><![CDATA[<raw&>]]><?pi data?>tail</r>");
  CHECK(*doc.root.attr("x") == "a<b&c\"d");
  CHECK(doc.root.text == "AB<raw&>tail");
}

TEST_CASE("numeric references encode UTF-8") {
  auto doc = xml::parse("<r>&#xE9;</r>");
  CHECK(doc.root.text == "\xC3\xA9");
}

TEST_CASE("DOCTYPE with internal subset is skipped") {
  auto doc = xml::parse(
      "<?xml version=\"1.0\"?>\n"
      "<!DOCTYPE r [ <!ELEMENT r (#PCDATA)> ]>\n"
      "<r>ok</r>");
  CHECK(doc.root.text == "ok");
}

TEST_CASE("namespace helpers") {
  CHECK(xml::local_name("uml:Class") == "Class");
  CHECK(xml::local_name("plain") == "plain");
  CHECK(xml::name_prefix("uml:Class") == "uml");
  CHECK(xml::name_prefix("plain") == "");
}

TEST_CASE("error positions are reported") {
  try {
    xml::parse("<root>\n  <broken\n</root>");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("well-formedness violations") {
  CHECK_THROWS_AS(xml::parse("<a><b></a>"), ParseError);       // mismatch
  CHECK_THROWS_AS(xml::parse("<a x=\"1\" x=\"2\"/>"), ParseError);  // dup attr
  CHECK_THROWS_AS(xml::parse("<a>"), ParseError);              // unterminated
  CHECK_THROWS_AS(xml::parse("<a/><b/>"), ParseError);         // two roots
  CHECK_THROWS_AS(xml::parse("<a>&unknown;</a>"), ParseError); // bad entity
  CHECK_THROWS_AS(xml::parse("<a x=1/>"), ParseError);         // unquoted
  CHECK_THROWS_AS(xml::parse(""), ParseError);                 // empty
  CHECK_THROWS_AS(xml::parse("junk"), ParseError);
}

TEST_CASE("unsupported encodings rejected") {
  CHECK_THROWS_AS(xml::parse("\xFF\xFE<a/>"), ParseError);
  CHECK_THROWS_AS(
      xml::parse("<?xml version=\"1.0\" encoding=\"UTF-16\"?><a/>"),
      ParseError);
}

TEST_CASE("latin-1 input is transcoded") {
  std::string input = "<?xml version=\"1.0\" encoding=\"ISO-8859-1\"?><a n=\"caf\xE9\"/>";
  auto doc = xml::parse(input);
  CHECK(*doc.root.attr("n") == "caf\xC3\xA9");
}

TEST_CASE("UTF-8 BOM is skipped") {
  auto doc = xml::parse("\xEF\xBB\xBF<a/>");
  CHECK(doc.root.name == "a");
}

TEST_CASE("parse is deterministic") {
  const char* text = "<a><b x=\"1\"/><c>t</c></a>";
  auto d1 = xml::parse(text);
  auto d2 = xml::parse(text);
  CHECK(d1.root.children.size() == d2.root.children.size());
  CHECK(d1.root.children[0].name == d2.root.children[0].name);
}
