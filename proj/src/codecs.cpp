#include "demoji/codecs.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "demoji/codec_table_data.hpp"
#include "demoji/utf.hpp"

namespace demoji::codecs {

namespace {

enum class UtfForm {
    utf_8,
    utf_8_sig,
    utf_16,
    utf_16_le,
    utf_16_be,
    utf_32,
    utf_32_le,
    utf_32_be,
    utf_7,
};

constexpr char32_t kReplacement = 0xFFFD;

}  // namespace

struct Codec {
    std::string name_;
    Kind kind_ = Kind::single_byte;
    bool ascii_clean_ = true;
    UtfForm form_ = UtfForm::utf_8;
    std::array<std::uint32_t, 256> to_cp_{};
    std::unordered_map<char32_t, std::uint8_t> to_byte_;
};

namespace {

// ---------------------------------------------------------------- registry

constexpr const char* kUnsupported[] = {
    "big5",          "big5hkscs",      "cp932",
    "cp949",         "cp950",          "euc_jis_2004",
    "euc_jisx0213",  "euc_jp",         "euc_kr",
    "gb18030",       "gb2312",         "gbk",
    "hz",            "iso2022_jp",     "iso2022_jp_1",
    "iso2022_jp_2",  "iso2022_jp_2004", "iso2022_jp_3",
    "iso2022_jp_ext", "iso2022_kr",    "johab",
    "shift_jis",     "shift_jis_2004", "shift_jisx0213",
};

// Legacy spellings of the EUC family plus the usual ISO synonym.
constexpr std::pair<const char*, const char*> kAliases[] = {
    {"eur_jp", "euc_jp"},
    {"eur_kr", "euc_kr"},
    {"eur_jis_2004", "euc_jis_2004"},
    {"eur_jisx0213", "euc_jisx0213"},
    {"iso8859_1", "latin_1"},
    {"iso_8859_1", "latin_1"},
};

constexpr const char* kFileRankHead[] = {"cp1252", "latin_1", "cp1250",
                                         "cp1251", "cp1254", "mac_roman"};

constexpr const char* kUtfFileOrder[] = {"utf_8",     "utf_8_sig", "utf_16_le",
                                         "utf_16_be", "utf_16",    "utf_32_le",
                                         "utf_32_be", "utf_32",    "utf_7"};

constexpr const char* kUtfSourceOrder[] = {
    "utf_8",  "utf_16_le", "utf_16_be", "utf_32_le", "utf_32_be",
    "utf_8_sig", "utf_16", "utf_32",    "utf_7"};

struct Registry {
    std::vector<std::unique_ptr<Codec>> codecs;
    std::unordered_map<std::string, const Codec*> by_name;
    std::vector<std::string> list_order;
    std::vector<const Codec*> sb_by_file_rank;
    std::unordered_map<std::string, int> file_ranks;
    std::unordered_map<std::string, int> source_ranks;
    std::uint64_t version = 0;
    mutable std::shared_mutex mu;

    void rebuild_orders() {
        std::vector<std::string> sb;
        for (const auto& c : codecs)
            if (c->kind_ == Kind::single_byte) sb.push_back(c->name_);
        std::sort(sb.begin(), sb.end());
        std::vector<std::string> sb_order;
        for (const char* head : kFileRankHead) {
            auto it = std::find(sb.begin(), sb.end(), head);
            if (it != sb.end()) {
                sb_order.push_back(*it);
                sb.erase(it);
            }
        }
        sb_order.insert(sb_order.end(), sb.begin(), sb.end());

        file_ranks.clear();
        int r = 0;
        for (const auto& n : sb_order) file_ranks[n] = r++;
        for (const char* n : kUtfFileOrder) file_ranks[n] = r++;

        source_ranks.clear();
        r = 0;
        for (const char* n : kUtfSourceOrder) source_ranks[n] = r++;
        for (const auto& n : sb_order) source_ranks[n] = r++;

        list_order.clear();
        for (const char* n : kUtfSourceOrder) list_order.emplace_back(n);
        list_order.insert(list_order.end(), sb_order.begin(), sb_order.end());

        sb_by_file_rank.clear();
        for (const auto& n : sb_order) sb_by_file_rank.push_back(by_name.at(n));
        ++version;
    }

    void add(std::unique_ptr<Codec> c) {
        by_name[c->name_] = c.get();
        codecs.push_back(std::move(c));
    }
};

bool single_byte_ascii_clean(const std::array<std::uint32_t, 256>& to_cp) {
    for (int b = 0; b < 0x80; ++b)
        if (to_cp[static_cast<std::size_t>(b)] != static_cast<std::uint32_t>(b))
            return false;
    for (int b = 0x80; b < 256; ++b) {
        const std::uint32_t cp = to_cp[static_cast<std::size_t>(b)];
        if (cp != kUndef && cp < 0x80) return false;
    }
    return true;
}

std::unique_ptr<Codec> make_single_byte(std::string name,
                                        const std::uint32_t* rows) {
    auto c = std::make_unique<Codec>();
    c->name_ = std::move(name);
    c->kind_ = Kind::single_byte;
    std::copy(rows, rows + 256, c->to_cp_.begin());
    for (int b = 0; b < 256; ++b) {
        const std::uint32_t cp = c->to_cp_[static_cast<std::size_t>(b)];
        if (cp != kUndef)
            c->to_byte_.emplace(static_cast<char32_t>(cp),
                                static_cast<std::uint8_t>(b));
    }
    c->ascii_clean_ = single_byte_ascii_clean(c->to_cp_);
    return c;
}

std::unique_ptr<Codec> make_utf(std::string name, UtfForm form) {
    auto c = std::make_unique<Codec>();
    c->name_ = std::move(name);
    c->kind_ = Kind::utf_family;
    c->form_ = form;
    c->ascii_clean_ = (form == UtfForm::utf_8);
    return c;
}

Registry& registry() {
    static Registry* reg = [] {
        auto* r = new Registry();
        for (std::size_t i = 0; i < k_single_byte_table_count; ++i)
            r->add(make_single_byte(k_single_byte_tables[i].name,
                                    k_single_byte_tables[i].cp));
        r->add(make_utf("utf_8", UtfForm::utf_8));
        r->add(make_utf("utf_8_sig", UtfForm::utf_8_sig));
        r->add(make_utf("utf_16", UtfForm::utf_16));
        r->add(make_utf("utf_16_le", UtfForm::utf_16_le));
        r->add(make_utf("utf_16_be", UtfForm::utf_16_be));
        r->add(make_utf("utf_32", UtfForm::utf_32));
        r->add(make_utf("utf_32_le", UtfForm::utf_32_le));
        r->add(make_utf("utf_32_be", UtfForm::utf_32_be));
        r->add(make_utf("utf_7", UtfForm::utf_7));
        r->rebuild_orders();
        return r;
    }();
    return *reg;
}

std::string normalize(std::string_view name) {
    std::string out;
    out.reserve(name.size());
    for (char ch : name)
        out.push_back(ch == '-' ? '_'
                                : static_cast<char>(std::tolower(
                                      static_cast<unsigned char>(ch))));
    return out;
}

// ------------------------------------------------------------- UTF helpers

DecodeResult decode_utf8(std::span<const std::uint8_t> bytes,
                         ErrorPolicy policy, bool strip_bom) {
    DecodeResult out;
    std::size_t i = 0;
    if (strip_bom && bytes.size() >= 3 && bytes[0] == 0xEF &&
        bytes[1] == 0xBB && bytes[2] == 0xBF)
        i = 3;
    out.text.reserve(bytes.size() - i);
    while (i < bytes.size()) {
        const char32_t cp = utf::next_utf8(bytes, i);
        if (cp == utf::kBad) {
            if (policy == ErrorPolicy::strict) return {{}, Status::failed};
            out.status = Status::lossy;
            if (policy == ErrorPolicy::replace) out.text.push_back(kReplacement);
        } else {
            out.text.push_back(cp);
        }
    }
    return out;
}

DecodeResult decode_utf16(std::span<const std::uint8_t> bytes, bool be,
                          ErrorPolicy policy) {
    DecodeResult out;
    out.text.reserve(bytes.size() / 2);
    std::size_t i = 0;
    auto unit = [&](std::size_t at) -> char32_t {
        return be ? (bytes[at] << 8) | bytes[at + 1]
                  : (bytes[at + 1] << 8) | bytes[at];
    };
    auto bad = [&](std::size_t advance) -> bool {
        if (policy == ErrorPolicy::strict) return true;
        out.status = Status::lossy;
        if (policy == ErrorPolicy::replace) out.text.push_back(kReplacement);
        i += advance;
        return false;
    };
    while (i < bytes.size()) {
        if (i + 2 > bytes.size()) {
            if (bad(bytes.size() - i)) return {{}, Status::failed};
            continue;
        }
        const char32_t u = unit(i);
        if (u >= 0xD800 && u <= 0xDBFF) {
            if (i + 4 > bytes.size()) {
                if (bad(2)) return {{}, Status::failed};
                continue;
            }
            const char32_t lo = unit(i + 2);
            if (lo < 0xDC00 || lo > 0xDFFF) {
                if (bad(2)) return {{}, Status::failed};
                continue;
            }
            out.text.push_back(0x10000 + ((u - 0xD800) << 10) + (lo - 0xDC00));
            i += 4;
        } else if (u >= 0xDC00 && u <= 0xDFFF) {
            if (bad(2)) return {{}, Status::failed};
        } else {
            out.text.push_back(u);
            i += 2;
        }
    }
    return out;
}

DecodeResult decode_utf32(std::span<const std::uint8_t> bytes, bool be,
                          ErrorPolicy policy) {
    DecodeResult out;
    out.text.reserve(bytes.size() / 4);
    std::size_t i = 0;
    while (i < bytes.size()) {
        bool ok = i + 4 <= bytes.size();
        char32_t cp = 0;
        if (ok) {
            cp = be ? (char32_t(bytes[i]) << 24) | (char32_t(bytes[i + 1]) << 16) |
                          (char32_t(bytes[i + 2]) << 8) | bytes[i + 3]
                    : (char32_t(bytes[i + 3]) << 24) |
                          (char32_t(bytes[i + 2]) << 16) |
                          (char32_t(bytes[i + 1]) << 8) | bytes[i];
            ok = utf::is_scalar(cp);
        }
        if (!ok) {
            if (policy == ErrorPolicy::strict) return {{}, Status::failed};
            out.status = Status::lossy;
            if (policy == ErrorPolicy::replace) out.text.push_back(kReplacement);
            i = std::min(bytes.size(), i + 4);
            continue;
        }
        out.text.push_back(cp);
        i += 4;
    }
    return out;
}

// RFC 2152 direct characters (set D plus whitespace).
bool utf7_direct(char32_t cp) {
    if ((cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z') ||
        (cp >= '0' && cp <= '9'))
        return true;
    switch (cp) {
        case '\'': case '(': case ')': case ',': case '-': case '.':
        case '/': case ':': case '?': case ' ': case '\t': case '\r':
        case '\n':
            return true;
        default:
            return false;
    }
}

constexpr char kBase64[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

int base64_value(std::uint8_t b) {
    if (b >= 'A' && b <= 'Z') return b - 'A';
    if (b >= 'a' && b <= 'z') return b - 'a' + 26;
    if (b >= '0' && b <= '9') return b - '0' + 52;
    if (b == '+') return 62;
    if (b == '/') return 63;
    return -1;
}

EncodeResult encode_utf7(std::u32string_view text) {
    EncodeResult out;
    std::vector<std::uint16_t> pending;
    auto flush = [&] {
        if (pending.empty()) return;
        out.bytes.push_back('+');
        std::uint32_t acc = 0;
        int bits = 0;
        for (std::uint16_t u : pending) {
            acc = (acc << 16) | u;
            bits += 16;
            while (bits >= 6) {
                bits -= 6;
                out.bytes.push_back(
                    static_cast<std::uint8_t>(kBase64[(acc >> bits) & 0x3F]));
            }
        }
        if (bits > 0)
            out.bytes.push_back(static_cast<std::uint8_t>(
                kBase64[(acc << (6 - bits)) & 0x3F]));
        out.bytes.push_back('-');
        pending.clear();
    };
    for (std::size_t idx = 0; idx < text.size(); ++idx) {
        const char32_t cp = text[idx];
        if (!utf::is_scalar(cp)) {
            flush();
            return {{}, Status::failed, idx};
        }
        if (cp == '+') {
            flush();
            out.bytes.push_back('+');
            out.bytes.push_back('-');
        } else if (utf7_direct(cp)) {
            flush();
            out.bytes.push_back(static_cast<std::uint8_t>(cp));
        } else if (cp < 0x10000) {
            pending.push_back(static_cast<std::uint16_t>(cp));
        } else {
            const char32_t v = cp - 0x10000;
            pending.push_back(static_cast<std::uint16_t>(0xD800 + (v >> 10)));
            pending.push_back(static_cast<std::uint16_t>(0xDC00 + (v & 0x3FF)));
        }
    }
    flush();
    return out;
}

DecodeResult decode_utf7(std::span<const std::uint8_t> bytes,
                         ErrorPolicy policy) {
    DecodeResult out;
    std::size_t i = 0;
    auto bad = [&]() -> bool {
        if (policy == ErrorPolicy::strict) return true;
        out.status = Status::lossy;
        if (policy == ErrorPolicy::replace) out.text.push_back(kReplacement);
        return false;
    };
    while (i < bytes.size()) {
        const std::uint8_t b = bytes[i];
        if (b >= 0x80) {
            ++i;
            if (bad()) return {{}, Status::failed};
            continue;
        }
        if (b != '+') {
            out.text.push_back(b);
            ++i;
            continue;
        }
        // shifted section
        ++i;
        if (i < bytes.size() && bytes[i] == '-') {
            out.text.push_back('+');
            ++i;
            continue;
        }
        std::uint32_t acc = 0;
        int bits = 0;
        char32_t high = 0;
        bool have_high = false;
        bool section_bad = false;
        while (i < bytes.size() && base64_value(bytes[i]) >= 0) {
            acc = (acc << 6) | static_cast<std::uint32_t>(base64_value(bytes[i]));
            bits += 6;
            ++i;
            if (bits >= 16) {
                bits -= 16;
                const char32_t u = (acc >> bits) & 0xFFFF;
                if (have_high) {
                    if (u >= 0xDC00 && u <= 0xDFFF) {
                        out.text.push_back(0x10000 + ((high - 0xD800) << 10) +
                                           (u - 0xDC00));
                        have_high = false;
                    } else {
                        section_bad = true;
                        break;
                    }
                } else if (u >= 0xD800 && u <= 0xDBFF) {
                    high = u;
                    have_high = true;
                } else if (u >= 0xDC00 && u <= 0xDFFF) {
                    section_bad = true;
                    break;
                } else {
                    out.text.push_back(u);
                }
            }
        }
        // residual bits must be zero padding and no surrogate may dangle
        if (!section_bad &&
            (have_high || (bits > 0 && (acc & ((1u << bits) - 1)) != 0)))
            section_bad = true;
        if (section_bad) {
            if (bad()) return {{}, Status::failed};
            // resync: skip the remainder of the base64 run
            while (i < bytes.size() && base64_value(bytes[i]) >= 0) ++i;
        }
        if (i < bytes.size() && bytes[i] == '-') ++i;
    }
    return out;
}

EncodeResult encode_utf16(std::u32string_view text, bool be, bool bom) {
    EncodeResult out;
    out.bytes.reserve(text.size() * 2 + 2);
    auto put = [&](std::uint16_t u) {
        if (be) {
            out.bytes.push_back(static_cast<std::uint8_t>(u >> 8));
            out.bytes.push_back(static_cast<std::uint8_t>(u & 0xFF));
        } else {
            out.bytes.push_back(static_cast<std::uint8_t>(u & 0xFF));
            out.bytes.push_back(static_cast<std::uint8_t>(u >> 8));
        }
    };
    if (bom) put(0xFEFF);
    for (std::size_t idx = 0; idx < text.size(); ++idx) {
        const char32_t cp = text[idx];
        if (!utf::is_scalar(cp)) return {{}, Status::failed, idx};
        if (cp < 0x10000) {
            put(static_cast<std::uint16_t>(cp));
        } else {
            const char32_t v = cp - 0x10000;
            put(static_cast<std::uint16_t>(0xD800 + (v >> 10)));
            put(static_cast<std::uint16_t>(0xDC00 + (v & 0x3FF)));
        }
    }
    return out;
}

EncodeResult encode_utf32(std::u32string_view text, bool be, bool bom) {
    EncodeResult out;
    out.bytes.reserve(text.size() * 4 + 4);
    auto put = [&](char32_t cp) {
        if (be) {
            out.bytes.push_back(static_cast<std::uint8_t>(cp >> 24));
            out.bytes.push_back(static_cast<std::uint8_t>((cp >> 16) & 0xFF));
            out.bytes.push_back(static_cast<std::uint8_t>((cp >> 8) & 0xFF));
            out.bytes.push_back(static_cast<std::uint8_t>(cp & 0xFF));
        } else {
            out.bytes.push_back(static_cast<std::uint8_t>(cp & 0xFF));
            out.bytes.push_back(static_cast<std::uint8_t>((cp >> 8) & 0xFF));
            out.bytes.push_back(static_cast<std::uint8_t>((cp >> 16) & 0xFF));
            out.bytes.push_back(static_cast<std::uint8_t>(cp >> 24));
        }
    };
    if (bom) put(0xFEFF);
    for (std::size_t idx = 0; idx < text.size(); ++idx) {
        if (!utf::is_scalar(text[idx])) return {{}, Status::failed, idx};
        put(text[idx]);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------- public

const Codec* find(std::string_view name) {
    const std::string canon = resolve_alias(name);
    auto& reg = registry();
    std::shared_lock lock(reg.mu);
    auto it = reg.by_name.find(canon);
    return it == reg.by_name.end() ? nullptr : it->second;
}

std::string_view name(const Codec& c) { return c.name_; }

Kind kind(const Codec& c) { return c.kind_; }

bool ascii_clean(const Codec& c) { return c.ascii_clean_; }

std::vector<std::string> list_codecs() {
    auto& reg = registry();
    std::shared_lock lock(reg.mu);
    return reg.list_order;
}

std::vector<std::string> unsupported_codecs() {
    return {std::begin(kUnsupported), std::end(kUnsupported)};
}

bool is_unsupported(std::string_view name) {
    const std::string canon = resolve_alias(name);
    for (const char* n : kUnsupported)
        if (canon == n) return true;
    return false;
}

std::string resolve_alias(std::string_view name) {
    std::string canon = normalize(name);
    for (const auto& [alias, target] : kAliases)
        if (canon == alias) return target;
    return canon;
}

DecodeResult decode_bytes(std::span<const std::uint8_t> bytes, const Codec& c,
                          ErrorPolicy policy) {
    if (c.kind_ == Kind::single_byte) {
        DecodeResult out;
        out.text.reserve(bytes.size());
        for (std::uint8_t b : bytes) {
            const std::uint32_t cp = c.to_cp_[b];
            if (cp == kUndef) {
                if (policy == ErrorPolicy::strict) return {{}, Status::failed};
                out.status = Status::lossy;
                if (policy == ErrorPolicy::replace)
                    out.text.push_back(kReplacement);
            } else {
                out.text.push_back(static_cast<char32_t>(cp));
            }
        }
        return out;
    }
    switch (c.form_) {
        case UtfForm::utf_8:
            return decode_utf8(bytes, policy, false);
        case UtfForm::utf_8_sig:
            return decode_utf8(bytes, policy, true);
        case UtfForm::utf_16_le:
            return decode_utf16(bytes, false, policy);
        case UtfForm::utf_16_be:
            return decode_utf16(bytes, true, policy);
        case UtfForm::utf_16:
            if (bytes.size() >= 2 && bytes[0] == 0xFF && bytes[1] == 0xFE)
                return decode_utf16(bytes.subspan(2), false, policy);
            if (bytes.size() >= 2 && bytes[0] == 0xFE && bytes[1] == 0xFF)
                return decode_utf16(bytes.subspan(2), true, policy);
            return decode_utf16(bytes, false, policy);
        case UtfForm::utf_32_le:
            return decode_utf32(bytes, false, policy);
        case UtfForm::utf_32_be:
            return decode_utf32(bytes, true, policy);
        case UtfForm::utf_32:
            if (bytes.size() >= 4 && bytes[0] == 0xFF && bytes[1] == 0xFE &&
                bytes[2] == 0x00 && bytes[3] == 0x00)
                return decode_utf32(bytes.subspan(4), false, policy);
            if (bytes.size() >= 4 && bytes[0] == 0x00 && bytes[1] == 0x00 &&
                bytes[2] == 0xFE && bytes[3] == 0xFF)
                return decode_utf32(bytes.subspan(4), true, policy);
            return decode_utf32(bytes, false, policy);
        case UtfForm::utf_7:
            return decode_utf7(bytes, policy);
    }
    return {{}, Status::failed};
}

EncodeResult encode_text(std::u32string_view text, const Codec& c,
                         ErrorPolicy policy) {
    if (c.kind_ == Kind::single_byte) {
        EncodeResult out;
        out.bytes.reserve(text.size());
        for (std::size_t idx = 0; idx < text.size(); ++idx) {
            auto it = c.to_byte_.find(text[idx]);
            if (it == c.to_byte_.end()) {
                if (policy == ErrorPolicy::strict)
                    return {{}, Status::failed, idx};
                out.status = Status::lossy;
                if (policy == ErrorPolicy::replace) out.bytes.push_back('?');
            } else {
                out.bytes.push_back(it->second);
            }
        }
        return out;
    }
    EncodeResult out;
    switch (c.form_) {
        case UtfForm::utf_8:
        case UtfForm::utf_8_sig: {
            if (c.form_ == UtfForm::utf_8_sig)
                out.bytes.assign({0xEF, 0xBB, 0xBF});
            for (std::size_t idx = 0; idx < text.size(); ++idx) {
                const char32_t cp = text[idx];
                if (!utf::is_scalar(cp)) {
                    if (policy == ErrorPolicy::strict)
                        return {{}, Status::failed, idx};
                    out.status = Status::lossy;
                    if (policy == ErrorPolicy::replace) out.bytes.push_back('?');
                    continue;
                }
                std::string tmp;
                utf::append_utf8(tmp, cp);
                out.bytes.insert(out.bytes.end(), tmp.begin(), tmp.end());
            }
            return out;
        }
        case UtfForm::utf_16_le:
            return encode_utf16(text, false, false);
        case UtfForm::utf_16_be:
            return encode_utf16(text, true, false);
        case UtfForm::utf_16:
            return encode_utf16(text, false, true);
        case UtfForm::utf_32_le:
            return encode_utf32(text, false, false);
        case UtfForm::utf_32_be:
            return encode_utf32(text, true, false);
        case UtfForm::utf_32:
            return encode_utf32(text, false, true);
        case UtfForm::utf_7:
            return encode_utf7(text);
    }
    return {{}, Status::failed};
}

DecodeResult transcode(std::u32string_view text, const Codec& via,
                       const Codec& as, ErrorPolicy policy) {
    const EncodeResult enc = encode_text(text, via, policy);
    if (enc.status == Status::failed) return {{}, Status::failed};
    DecodeResult dec = decode_bytes(enc.bytes, as, policy);
    if (dec.status == Status::clean && enc.status == Status::lossy)
        dec.status = Status::lossy;
    return dec;
}

bool load_codec_table(const std::string& path, std::string* error) {
    auto fail = [&](const std::string& msg) {
        if (error) *error = msg;
        return false;
    };
    std::ifstream in(path);
    if (!in) return fail("cannot open " + path);
    std::string line;
    std::string codec_name;
    std::array<std::uint32_t, 256> rows{};
    std::array<bool, 256> seen{};
    rows.fill(kUndef);
    int row_count = 0;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty()) continue;
        if (codec_name.empty()) {
            codec_name = normalize(line);
            continue;
        }
        std::istringstream row(line);
        std::string byte_s, cp_s;
        if (!(row >> byte_s >> cp_s)) return fail("malformed row: " + line);
        const long b = std::strtol(byte_s.c_str(), nullptr, 16);
        if (b < 0 || b > 255 || seen[static_cast<std::size_t>(b)])
            return fail("bad or repeated byte in row: " + line);
        seen[static_cast<std::size_t>(b)] = true;
        if (cp_s != "UNDEF") {
            const long cp = std::strtol(cp_s.c_str(), nullptr, 16);
            if (!utf::is_scalar(static_cast<char32_t>(cp)))
                return fail("codepoint out of range: " + line);
            rows[static_cast<std::size_t>(b)] = static_cast<std::uint32_t>(cp);
        }
        ++row_count;
    }
    if (codec_name.empty() || row_count != 256)
        return fail("expected a codec name and 256 rows, got " +
                    std::to_string(row_count));
    std::vector<std::uint32_t> defined;
    for (std::uint32_t cp : rows)
        if (cp != kUndef) defined.push_back(cp);
    std::sort(defined.begin(), defined.end());
    if (std::adjacent_find(defined.begin(), defined.end()) != defined.end())
        return fail("duplicate codepoint target in chart");
    auto& reg = registry();
    std::unique_lock lock(reg.mu);
    if (reg.by_name.count(codec_name))
        return fail("codec already registered: " + codec_name);
    reg.add(make_single_byte(codec_name, rows.data()));
    reg.rebuild_orders();
    return true;
}

int file_rank(std::string_view name) {
    auto& reg = registry();
    std::shared_lock lock(reg.mu);
    auto it = reg.file_ranks.find(resolve_alias(name));
    return it == reg.file_ranks.end() ? 1 << 20 : it->second;
}

int source_rank(std::string_view name) {
    auto& reg = registry();
    std::shared_lock lock(reg.mu);
    auto it = reg.source_ranks.find(resolve_alias(name));
    return it == reg.source_ranks.end() ? 1 << 20 : it->second;
}

std::uint64_t registry_version() {
    auto& reg = registry();
    std::shared_lock lock(reg.mu);
    return reg.version;
}

std::vector<const Codec*> single_byte_codecs() {
    auto& reg = registry();
    std::shared_lock lock(reg.mu);
    return reg.sb_by_file_rank;
}

}  // namespace demoji::codecs
