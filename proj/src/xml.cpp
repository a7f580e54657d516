#include "umlmeter/xml.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "umlmeter/errors.hpp"

namespace umlmeter::xml {

namespace {

bool is_name_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c == ':' || c >= 0x80;
}

bool is_name_char(unsigned char c) {
  return is_name_start(c) || std::isdigit(c) || c == '-' || c == '.';
}

void append_utf8(std::string& out, unsigned long cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class Parser {
 public:
  explicit Parser(std::string_view in) : in_(in) {}

  Document run() {
    Document doc;
    skip_bom();
    parse_prolog(doc);
    skip_misc();
    if (eof()) fail("missing document element");
    if (peek() != '<') fail("content outside the document element");
    doc.root = parse_element();
    skip_misc();
    if (!eof()) fail("content after the document element");
    return doc;
  }

 private:
  std::string_view in_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  bool latin1_ = false;

  bool eof() const { return pos_ >= in_.size(); }
  char peek() const { return in_[pos_]; }
  bool starts_with(std::string_view s) const {
    return in_.compare(pos_, s.size(), s) == 0;
  }

  char take() {
    char c = in_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void take(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) take();
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, col_);
  }

  void expect(std::string_view s, const char* what) {
    if (!starts_with(s)) fail(std::string("expected ") + what);
    take(s.size());
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) take();
  }

  void skip_bom() {
    if (starts_with("\xEF\xBB\xBF")) {
      take(3);
      return;
    }
    if (starts_with("\xFF\xFE") || starts_with("\xFE\xFF")) {
      fail("unsupported document encoding (UTF-16)");
    }
  }

  void parse_prolog(Document& doc) {
    if (!starts_with("<?xml")) return;
    std::size_t end = in_.find("?>", pos_);
    if (end == std::string_view::npos) fail("unterminated XML declaration");
    std::string_view decl = in_.substr(pos_, end - pos_);
    auto enc = decl.find("encoding");
    if (enc != std::string_view::npos) {
      auto q1 = decl.find_first_of("\"'", enc);
      if (q1 != std::string_view::npos) {
        auto q2 = decl.find(decl[q1], q1 + 1);
        if (q2 != std::string_view::npos) {
          std::string name(decl.substr(q1 + 1, q2 - q1 - 1));
          std::transform(name.begin(), name.end(), name.begin(),
                         [](unsigned char c) { return std::tolower(c); });
          doc.declared_encoding = name;
          if (name == "iso-8859-1" || name == "latin-1" || name == "latin1") {
            latin1_ = true;
          } else if (name != "utf-8" && name != "utf8" && name != "us-ascii" &&
                     name != "ascii") {
            fail("unsupported document encoding (" + name + ")");
          }
        }
      }
    }
    take(end + 2 - pos_);
  }

  // Comments, PIs, DOCTYPE, whitespace between markup.
  void skip_misc() {
    for (;;) {
      skip_ws();
      if (starts_with("<!--")) {
        skip_comment();
      } else if (starts_with("<?")) {
        skip_pi();
      } else if (starts_with("<!DOCTYPE")) {
        skip_doctype();
      } else {
        return;
      }
    }
  }

  void skip_comment() {
    take(4);
    std::size_t end = in_.find("-->", pos_);
    if (end == std::string_view::npos) fail("unterminated comment");
    take(end + 3 - pos_);
  }

  void skip_pi() {
    take(2);
    std::size_t end = in_.find("?>", pos_);
    if (end == std::string_view::npos) {
      fail("unterminated processing instruction");
    }
    take(end + 2 - pos_);
  }

  void skip_doctype() {
    take(9);
    int brackets = 0;
    while (!eof()) {
      char c = take();
      if (c == '[') {
        ++brackets;
      } else if (c == ']') {
        --brackets;
      } else if (c == '>' && brackets <= 0) {
        return;
      }
    }
    fail("unterminated DOCTYPE declaration");
  }

  std::string parse_name() {
    if (eof() || !is_name_start(static_cast<unsigned char>(peek()))) {
      fail("expected a name");
    }
    std::string name;
    while (!eof() && is_name_char(static_cast<unsigned char>(peek()))) {
      name += take();
    }
    return name;
  }

  void append_char(std::string& out, char c) {
    if (latin1_ && static_cast<unsigned char>(c) >= 0x80) {
      append_utf8(out, static_cast<unsigned char>(c));
    } else {
      out += c;
    }
  }

  void parse_entity(std::string& out) {
    // positioned on '&'
    take();
    if (eof()) fail("unterminated entity reference");
    if (peek() == '#') {
      take();
      bool hex = !eof() && (peek() == 'x' || peek() == 'X');
      if (hex) take();
      std::string digits;
      while (!eof() && peek() != ';') digits += take();
      if (eof() || digits.empty()) fail("malformed character reference");
      take();  // ';'
      unsigned long cp = 0;
      try {
        cp = std::stoul(digits, nullptr, hex ? 16 : 10);
      } catch (const std::exception&) {
        fail("malformed character reference");
      }
      if (cp == 0 || cp > 0x10FFFF) fail("character reference out of range");
      append_utf8(out, cp);
      return;
    }
    std::string name;
    while (!eof() && peek() != ';' && name.size() <= 8) name += take();
    if (eof() || peek() != ';') fail("unterminated entity reference");
    take();
    if (name == "lt") {
      out += '<';
    } else if (name == "gt") {
      out += '>';
    } else if (name == "amp") {
      out += '&';
    } else if (name == "apos") {
      out += '\'';
    } else if (name == "quot") {
      out += '"';
    } else {
      fail("unknown entity '&" + name + ";'");
    }
  }

  std::string parse_attr_value() {
    if (eof() || (peek() != '"' && peek() != '\'')) {
      fail("expected a quoted attribute value");
    }
    char quote = take();
    std::string value;
    for (;;) {
      if (eof()) fail("unterminated attribute value");
      if (peek() == quote) {
        take();
        return value;
      }
      if (peek() == '<') fail("'<' in attribute value");
      if (peek() == '&') {
        parse_entity(value);
      } else {
        append_char(value, take());
      }
    }
  }

  Node parse_element() {
    Node node;
    node.line = line_;
    node.column = col_;
    expect("<", "'<'");
    node.name = parse_name();
    for (;;) {
      bool had_ws = !eof() && std::isspace(static_cast<unsigned char>(peek()));
      skip_ws();
      if (eof()) fail("unterminated start tag <" + node.name + ">");
      if (peek() == '>') {
        take();
        parse_content(node);
        return node;
      }
      if (starts_with("/>")) {
        take(2);
        return node;
      }
      if (!had_ws) fail("malformed start tag <" + node.name + ">");
      Attr attr;
      attr.name = parse_name();
      skip_ws();
      expect("=", "'=' after attribute name");
      skip_ws();
      attr.value = parse_attr_value();
      for (const Attr& existing : node.attrs) {
        if (existing.name == attr.name) {
          fail("duplicate attribute '" + attr.name + "'");
        }
      }
      node.attrs.push_back(std::move(attr));
    }
  }

  void parse_content(Node& node) {
    for (;;) {
      if (eof()) fail("unterminated element <" + node.name + ">");
      if (starts_with("</")) {
        take(2);
        std::string closing = parse_name();
        if (closing != node.name) {
          fail("mismatched end tag </" + closing + ">, expected </" +
               node.name + ">");
        }
        skip_ws();
        expect(">", "'>' after end tag");
        return;
      }
      if (starts_with("<!--")) {
        skip_comment();
      } else if (starts_with("<![CDATA[")) {
        take(9);
        std::size_t end = in_.find("]]>", pos_);
        if (end == std::string_view::npos) fail("unterminated CDATA section");
        while (pos_ < end) append_char(node.text, take());
        take(3);
      } else if (starts_with("<?")) {
        skip_pi();
      } else if (peek() == '<') {
        node.children.push_back(parse_element());
      } else if (peek() == '&') {
        parse_entity(node.text);
      } else {
        append_char(node.text, take());
      }
    }
  }
};

}  // namespace

const std::string* Node::attr(std::string_view name) const {
  for (const Attr& a : attrs) {
    if (a.name == name) return &a.value;
  }
  return nullptr;
}

const std::string* Node::attr_local(std::string_view local) const {
  for (const Attr& a : attrs) {
    if (local_name(a.name) == local) return &a.value;
  }
  return nullptr;
}

const Node* Node::child_local(std::string_view local) const {
  for (const Node& c : children) {
    if (local_name(c.name) == local) return &c;
  }
  return nullptr;
}

Document parse(std::string_view bytes) { return Parser(bytes).run(); }

Document parse_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string bytes = buffer.str();
  return parse(bytes);
}

std::string_view local_name(std::string_view qualified) {
  auto colon = qualified.rfind(':');
  if (colon == std::string_view::npos) return qualified;
  return qualified.substr(colon + 1);
}

std::string_view name_prefix(std::string_view qualified) {
  auto colon = qualified.rfind(':');
  if (colon == std::string_view::npos) return {};
  return qualified.substr(0, colon);
}

}  // namespace umlmeter::xml
