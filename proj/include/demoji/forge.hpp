#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "demoji/codecs.hpp"
#include "demoji/record.hpp"
#include "demoji/repair.hpp"

namespace demoji::forge {

struct CorruptionSpec {
    repair::TranscodeChain chain;
    // strict refuses texts the chain cannot carry; replace substitutes and
    // produces deliberately lossy corruption
    codecs::ErrorPolicy policy = codecs::ErrorPolicy::strict;
};

// Manufactures mojibake: encode with the source codec, decode the bytes with
// the file codec (the inverse of repair).  nullopt when strict policy fails.
std::optional<std::u32string> corrupt(std::u32string_view text,
                                      const CorruptionSpec& spec);

// true when corruption under the chain round-trips exactly
bool is_lossless(std::u32string_view text, const repair::TranscodeChain& chain);

// deterministic per-record coin for rate-based corpus forging
bool forge_pick(std::uint64_t seed, std::string_view id, double rate);

enum class ForgeOutcome { corrupted, lossy, skipped, unchanged };

struct ManifestRow {
    std::string id;
    std::string chain;
    ForgeOutcome outcome = ForgeOutcome::unchanged;
};

const char* to_string(ForgeOutcome outcome);

struct ForgeResult {
    std::vector<Record> records;
    std::vector<ManifestRow> manifest;
};

// Corrupts roughly rate * records.size() entries, chosen by the seeded coin.
// Strict failures leave the record unchanged and are marked skipped.
ForgeResult forge_corpus(const std::vector<Record>& records,
                         const CorruptionSpec& spec, double rate,
                         std::uint64_t seed);

}  // namespace demoji::forge
