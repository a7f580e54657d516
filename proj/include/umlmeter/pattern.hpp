#pragma once

#include <string_view>

namespace umlmeter {

// Anchored wildcard patterns used by naming-convention rules and DSL name
// predicates:
//   ?       any single character
//   *       any run of characters, possibly empty
//   [...]   character class; ranges allowed ([a-z0-9]); leading ! negates
// The pattern must cover the whole text. Throws ConfigError on a malformed
// pattern (unterminated character class).
bool glob_match(std::string_view pattern, std::string_view text);

// Validates pattern syntax without matching. Throws ConfigError.
void validate_glob(std::string_view pattern);

}  // namespace umlmeter
