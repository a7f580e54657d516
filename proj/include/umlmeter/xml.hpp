#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace umlmeter::xml {

struct Attr {
  std::string name;  // as written, prefix included
  std::string value;
};

struct Node {
  std::string name;  // qualified name as written
  std::vector<Attr> attrs;
  std::vector<Node> children;
  std::string text;  // concatenated character data of this element
  int line = 0;      // 1-based position of the opening '<'
  int column = 0;

  // First attribute with the given qualified name, nullptr if absent.
  const std::string* attr(std::string_view name) const;
  // First attribute whose local name (prefix stripped) matches.
  const std::string* attr_local(std::string_view local) const;
  // First child with the given local name, nullptr if absent.
  const Node* child_local(std::string_view local) const;
};

struct Document {
  Node root;
  std::string declared_encoding;  // from the prolog, empty if none
};

// Non-validating XML parser: prolog, comments, processing instructions,
// CDATA, DOCTYPE skipping, predefined and numeric character entities,
// duplicate-attribute and tag-balance checks. Input is treated as UTF-8;
// ISO-8859-1 input (per the prolog) is transcoded. Throws ParseError with
// the 1-based line/column of the offending byte.
Document parse(std::string_view bytes);
Document parse_file(const std::filesystem::path& path);

std::string_view local_name(std::string_view qualified);
std::string_view name_prefix(std::string_view qualified);  // "" when none

}  // namespace umlmeter::xml
