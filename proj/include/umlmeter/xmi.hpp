#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "umlmeter/model.hpp"

namespace umlmeter {

struct XmiDialect {
  std::string xmi_version;  // non-empty once detection succeeds
  std::optional<std::string> exporter;
};

// How one XML element maps into the model vocabulary.
struct KindMapping {
  enum class Action {
    Element,    // creates a ModelElement
    Container,  // transparent: children attach to the current owner
    Ignore,     // recognized noise: the whole subtree is skipped
  };
  Action action = Action::Element;
  ElementKind kind = ElementKind::Class;
  std::map<std::string, std::string> tags;       // fixed tags to set
  std::map<std::string, std::string> attr_tags;  // XML attr -> tag key

  static KindMapping element(ElementKind k) {
    KindMapping m;
    m.kind = k;
    return m;
  }
  static KindMapping container() {
    KindMapping m;
    m.action = Action::Container;
    return m;
  }
  static KindMapping ignore() {
    KindMapping m;
    m.action = Action::Ignore;
    return m;
  }
};

// Per-exporter tag/type synonym table. Exporter-specific tables overlay the
// canonical one, so shipped tables only list what differs. These are data
// files (JSON), human-editable; see docs/formats.md.
struct DialectTable {
  std::string exporter;  // empty = canonical/fallback
  std::map<std::string, KindMapping> type_map;  // local xmi:type name ->
  std::map<std::string, KindMapping> tag_map;   // local element tag ->
  std::vector<std::string> type_attrs;          // qualified, e.g. "xmi:type"
  std::vector<std::string> id_attrs;
  // canonical ref key -> accepted attribute local names
  std::map<std::string, std::vector<std::string>> ref_attrs;

  // Overlays `other` on top of this table (entries replace, lists extend).
  void merge(const DialectTable& other);
};

// The built-in XMI 2.x / UML2 table (unknown exporters fall back to it).
const DialectTable& canonical_dialect();

DialectTable load_dialect_table(const std::filesystem::path& json_file);
std::vector<DialectTable> load_dialect_dir(const std::filesystem::path& dir);

struct IngestOptions {
  std::vector<DialectTable> dialects;  // exporter-specific overlays
};

// Reads the declared XMI version and exporter. Throws NotXmi when the
// document has no recognizable XMI/UML root, ParseError on malformed XML.
XmiDialect detect_dialect(std::string_view bytes);

// Parses an XMI document into a UmlModel. Unrecognized element tags are
// counted and reported on the model, never fatal; dangling cross-references
// are quarantined. Throws ParseError / NotXmi / InvalidModel.
UmlModel parse_xmi(std::string_view bytes, const std::string& source_name = "",
                   const IngestOptions& options = {});
UmlModel parse_xmi_file(const std::filesystem::path& path,
                        const IngestOptions& options = {});

}  // namespace umlmeter
