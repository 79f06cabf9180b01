#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace semsum::utf8 {

// Decodes one code point starting at text[pos]. Invalid or truncated
// sequences decode as a single byte (U+FFFD with length 1).
struct Decoded {
  char32_t code_point;
  std::size_t length;
};

Decoded decode(std::string_view text, std::size_t pos);

bool is_space(char32_t cp);
bool is_punct(char32_t cp);
bool is_dash(char32_t cp);

// Longest prefix of at most max_bytes bytes that ends on a code point boundary.
std::string_view truncate(std::string_view text, std::size_t max_bytes);

}  // namespace semsum::utf8
