#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace genfer {

// Byte-level UTF-8 helpers. Invalid sequences are treated as one code point
// per byte so every function below stays total.

inline bool utf8_is_continuation(unsigned char b) { return (b & 0xC0) == 0x80; }

inline std::size_t utf8_length(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if (!utf8_is_continuation(c)) ++n;
  return n;
}

inline std::vector<char32_t> utf8_decode(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    char32_t cp = c;
    std::size_t len = 1;
    if ((c & 0xE0) == 0xC0)
      len = 2, cp = c & 0x1F;
    else if ((c & 0xF0) == 0xE0)
      len = 3, cp = c & 0x0F;
    else if ((c & 0xF8) == 0xF0)
      len = 4, cp = c & 0x07;
    if (len > 1) {
      std::size_t j = 1;
      for (; j < len && i + j < s.size() &&
             utf8_is_continuation(static_cast<unsigned char>(s[i + j]));
           ++j)
        cp = (cp << 6) | (static_cast<unsigned char>(s[i + j]) & 0x3F);
      if (j != len) {  // truncated sequence: fall back to single byte
        cp = c;
        len = 1;
      } else {
        i += len;
        out.push_back(cp);
        continue;
      }
    }
    i += len;
    out.push_back(cp);
  }
  return out;
}

inline char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

inline std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = ascii_lower(c);
  return out;
}

inline bool is_ascii_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

inline bool is_all_ascii_alpha(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!is_ascii_alpha(c)) return false;
  return true;
}

}  // namespace genfer
