#include "umlmeter/pattern.hpp"

#include <cstddef>
#include <string>

#include "umlmeter/errors.hpp"

namespace umlmeter {

namespace {

// Matches one character class starting at pattern[pos] (the '['). On return
// pos points one past the closing ']'.
bool match_class(std::string_view pattern, std::size_t& pos, char c) {
  std::size_t p = pos + 1;
  bool negate = false;
  if (p < pattern.size() && (pattern[p] == '!' || pattern[p] == '^')) {
    negate = true;
    ++p;
  }
  bool matched = false;
  bool first = true;
  while (p < pattern.size() && (pattern[p] != ']' || first)) {
    first = false;
    char lo = pattern[p];
    if (p + 2 < pattern.size() && pattern[p + 1] == '-' &&
        pattern[p + 2] != ']') {
      char hi = pattern[p + 2];
      if (c >= lo && c <= hi) matched = true;
      p += 3;
    } else {
      if (c == lo) matched = true;
      ++p;
    }
  }
  if (p >= pattern.size()) {
    throw ConfigError("unterminated character class in pattern '" +
                      std::string(pattern) + "'");
  }
  pos = p + 1;  // past ']'
  return matched != negate;
}

}  // namespace

bool glob_match(std::string_view pattern, std::string_view text) {
  std::size_t p = 0, t = 0;
  std::size_t star_p = std::string_view::npos, star_t = 0;
  while (t < text.size()) {
    if (p < pattern.size() && pattern[p] == '*') {
      star_p = ++p;
      star_t = t;
      continue;
    }
    bool one = false;
    if (p < pattern.size()) {
      if (pattern[p] == '?') {
        one = true;
        ++p;
      } else if (pattern[p] == '[') {
        one = match_class(pattern, p, text[t]);
      } else if (pattern[p] == text[t]) {
        one = true;
        ++p;
      }
    }
    if (one) {
      ++t;
      continue;
    }
    if (star_p == std::string_view::npos) return false;
    p = star_p;
    t = ++star_t;
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

void validate_glob(std::string_view pattern) {
  for (std::size_t p = 0; p < pattern.size();) {
    if (pattern[p] == '[') {
      match_class(pattern, p, '\0');
    } else {
      ++p;
    }
  }
}

}  // namespace umlmeter
