#pragma once

#include <cstddef>
#include <cstdint>

namespace demoji::codecs {

// Sentinel for bytes with no assigned codepoint in a single-byte chart.
inline constexpr std::uint32_t kUndef = 0xFFFFFFFFu;

struct SingleByteTable {
    const char* name;
    std::uint32_t cp[256];
};

// Generated from data/codecs/*.tbl by scripts/gen_codec_tables.py.
extern const SingleByteTable k_single_byte_tables[];
extern const std::size_t k_single_byte_table_count;

}  // namespace demoji::codecs
