#include "demoji/utf.hpp"

namespace demoji::utf {

char32_t next_utf8(std::span<const std::uint8_t> data, std::size_t& i) {
    const std::uint8_t b0 = data[i];
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int len;
    char32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        ++i;
        return kBad;
    }
    if (i + static_cast<std::size_t>(len) > data.size()) {
        ++i;
        return kBad;
    }
    for (int k = 1; k < len; ++k) {
        const std::uint8_t b = data[i + static_cast<std::size_t>(k)];
        if ((b & 0xC0) != 0x80) {
            ++i;
            return kBad;
        }
        cp = (cp << 6) | (b & 0x3F);
    }
    // overlong forms and non-scalar values are malformed, not just unusual
    static constexpr char32_t min_for_len[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < min_for_len[len] || !is_scalar(cp)) {
        ++i;
        return kBad;
    }
    i += static_cast<std::size_t>(len);
    return cp;
}

Utf8Scan scan_utf8(std::span<const std::uint8_t> data) {
    Utf8Scan out;
    std::size_t i = 0;
    while (i < data.size()) {
        const std::size_t start = i;
        if (next_utf8(data, i) == kBad) return {false, out.has_multibyte};
        if (i - start > 1) out.has_multibyte = true;
    }
    out.valid = true;
    return out;
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string to_utf8(std::u32string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char32_t cp : text) append_utf8(out, cp);
    return out;
}

std::u32string from_utf8_lossy(std::string_view bytes) {
    std::u32string out;
    out.reserve(bytes.size());
    const std::span<const std::uint8_t> data(
        reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size());
    std::size_t i = 0;
    while (i < data.size()) {
        const char32_t cp = next_utf8(data, i);
        out.push_back(cp == kBad ? char32_t{0xFFFD} : cp);
    }
    return out;
}

}  // namespace demoji::utf
