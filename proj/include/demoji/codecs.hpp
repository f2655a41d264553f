#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace demoji::codecs {

enum class Kind { single_byte, utf_family, multi_byte };

enum class ErrorPolicy { strict, replace, ignore };

// clean: exact conversion; lossy: substitutions applied (replace/ignore);
// failed: strict policy hit an unmappable unit, output is empty.
enum class Status { clean, lossy, failed };

struct Codec;

struct DecodeResult {
    std::u32string text;
    Status status = Status::clean;
};

struct EncodeResult {
    std::vector<std::uint8_t> bytes;
    Status status = Status::clean;
    // codepoint index of the first unmappable input unit when status is
    // failed (repair uses this for boundary-shrink retries)
    std::size_t fail_index = 0;
};

// Lookup by canonical name or alias; nullptr when unknown or unsupported.
const Codec* find(std::string_view name);

std::string_view name(const Codec& c);
Kind kind(const Codec& c);
// True when the chart maps every byte < 0x80 to itself and never maps a
// high byte into ASCII.  False for the EBCDIC pages and cp864, whose
// mojibake can garble ASCII too.
bool ascii_clean(const Codec& c);

// All supported codec names in fixed priority order: utf_8, utf_16_le,
// utf_16_be, utf_32_le, utf_32_be, utf_8_sig, utf_16, utf_32, utf_7, then
// single-byte codecs ranked cp1252, latin_1, cp1250, cp1251, cp1254,
// mac_roman, remainder alphabetically.
std::vector<std::string> list_codecs();

// Names recognized but not bundled (multi-byte East Asian codecs), sorted.
std::vector<std::string> unsupported_codecs();
bool is_unsupported(std::string_view name);

// Lowercases, maps '-' to '_', and resolves registered aliases
// (e.g. eur_jp -> euc_jp, iso8859_1 -> latin_1).
std::string resolve_alias(std::string_view name);

DecodeResult decode_bytes(std::span<const std::uint8_t> bytes, const Codec& c,
                          ErrorPolicy policy);
EncodeResult encode_text(std::u32string_view text, const Codec& c,
                         ErrorPolicy policy);

// encode with `via`, then decode those bytes with `as`.
DecodeResult transcode(std::u32string_view text, const Codec& via,
                       const Codec& as, ErrorPolicy policy);

// Registers an extra single-byte codec from a .tbl file (format documented
// in data/codecs/ and the README).  Call before any parallel work; names
// must not collide with existing codecs.
bool load_codec_table(const std::string& path, std::string* error = nullptr);

// Chain-priority ranks; lower sorts earlier.  Unknown names rank last.
int file_rank(std::string_view name);
int source_rank(std::string_view name);

// Bumped whenever load_codec_table adds a codec; lets callers cache
// codec-pointer snapshots.
std::uint64_t registry_version();

// Single-byte codec pointers in file-rank order.  Pointers stay valid for
// the process lifetime.
std::vector<const Codec*> single_byte_codecs();

}  // namespace demoji::codecs
