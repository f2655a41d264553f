#include "demoji/forge.hpp"

namespace demoji::forge {

namespace {

// splitmix64: stable across platforms, no std::hash variance
std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t record_hash(std::uint64_t seed, std::string_view id) {
    std::uint64_t h = mix(seed ^ 0xD6E8FEB86659FD93ull);
    for (unsigned char c : id) h = mix(h ^ c);
    return h;
}

}  // namespace

std::optional<std::u32string> corrupt(std::u32string_view text,
                                      const CorruptionSpec& spec) {
    const auto* source = codecs::find(spec.chain.source_encoding);
    const auto* file = codecs::find(spec.chain.file_encoding);
    if (!source || !file) return std::nullopt;
    auto enc = codecs::encode_text(text, *source, spec.policy);
    if (enc.status == codecs::Status::failed) return std::nullopt;
    auto dec = codecs::decode_bytes(enc.bytes, *file, spec.policy);
    if (dec.status == codecs::Status::failed) return std::nullopt;
    return std::move(dec.text);
}

bool is_lossless(std::u32string_view text, const repair::TranscodeChain& chain) {
    const auto* source = codecs::find(chain.source_encoding);
    const auto* file = codecs::find(chain.file_encoding);
    if (!source || !file) return false;
    auto enc = codecs::encode_text(text, *source, codecs::ErrorPolicy::strict);
    if (enc.status != codecs::Status::clean) return false;
    auto dec = codecs::decode_bytes(enc.bytes, *file, codecs::ErrorPolicy::strict);
    if (dec.status != codecs::Status::clean) return false;
    auto back = codecs::transcode(dec.text, *file, *source, codecs::ErrorPolicy::strict);
    return back.status == codecs::Status::clean && back.text == text;
}

bool forge_pick(std::uint64_t seed, std::string_view id, double rate) {
    if (rate <= 0.0) return false;
    if (rate >= 1.0) return true;
    const double u = static_cast<double>(record_hash(seed, id) >> 11) *
                     (1.0 / 9007199254740992.0);  // 53-bit uniform in [0,1)
    return u < rate;
}

const char* to_string(ForgeOutcome outcome) {
    switch (outcome) {
        case ForgeOutcome::corrupted: return "corrupted";
        case ForgeOutcome::lossy: return "lossy";
        case ForgeOutcome::skipped: return "skipped";
        case ForgeOutcome::unchanged: return "unchanged";
    }
    return "unchanged";
}

ForgeResult forge_corpus(const std::vector<Record>& records,
                         const CorruptionSpec& spec, double rate,
                         std::uint64_t seed) {
    ForgeResult out;
    out.records.reserve(records.size());
    out.manifest.reserve(records.size());
    const std::string chain_name = repair::to_string(spec.chain);
    for (const auto& rec : records) {
        ManifestRow row{rec.id, chain_name, ForgeOutcome::unchanged};
        Record forged = rec;
        if (forge_pick(seed, rec.id, rate)) {
            if (spec.policy == codecs::ErrorPolicy::strict &&
                !is_lossless(rec.text, spec.chain)) {
                row.outcome = ForgeOutcome::skipped;
            } else if (auto c = corrupt(rec.text, spec)) {
                // a fixed point (pure ascii under an ascii-clean chain) is
                // reported honestly rather than as a corruption
                if (*c != forged.text) {
                    forged.text = std::move(*c);
                    row.outcome = spec.policy == codecs::ErrorPolicy::strict
                                      ? ForgeOutcome::corrupted
                                      : ForgeOutcome::lossy;
                }
            } else {
                row.outcome = ForgeOutcome::skipped;
            }
        }
        out.records.push_back(std::move(forged));
        out.manifest.push_back(std::move(row));
    }
    return out;
}

}  // namespace demoji::forge
