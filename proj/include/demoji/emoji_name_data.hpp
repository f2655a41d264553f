#pragma once

#include <cstddef>

namespace demoji::emoji {

// one bundled shortname row: zero-terminated codepoint sequence (max 7 long)
struct EmojiNameRow {
    char32_t seq[8];
    const char* name;
};

extern const EmojiNameRow k_emoji_name_rows[];
extern const std::size_t k_emoji_name_row_count;

}  // namespace demoji::emoji
