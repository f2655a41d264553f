#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace demoji::utf {

// Returned by next_utf8 for malformed input.
inline constexpr char32_t kBad = 0xFFFFFFFFu;

inline constexpr bool is_scalar(char32_t cp) {
    return cp <= 0x10FFFF && !(cp >= 0xD800 && cp <= 0xDFFF);
}

// Decodes one sequence starting at data[i], advancing i past it.  On
// malformed input (overlong, surrogate, truncated, out of range) advances i
// by one byte and returns kBad.
char32_t next_utf8(std::span<const std::uint8_t> data, std::size_t& i);

struct Utf8Scan {
    bool valid = false;
    bool has_multibyte = false;
};

// Validates a whole buffer and reports whether any multi-byte sequence
// occurs.  Stops early on the first malformed sequence.
Utf8Scan scan_utf8(std::span<const std::uint8_t> data);

void append_utf8(std::string& out, char32_t cp);
std::string to_utf8(std::u32string_view text);

// Boundary decode: malformed sequences become U+FFFD, one per rejected byte.
std::u32string from_utf8_lossy(std::string_view bytes);

}  // namespace demoji::utf
