#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "demoji/detect.hpp"

namespace demoji::codecs {
struct Codec;
}

namespace demoji::repair {

// (file encoding, source encoding): the stored bytes were produced in
// source_encoding but decoded as file_encoding.  Repair encodes with the
// file codec and decodes with the source codec.
struct TranscodeChain {
    std::string file_encoding;
    std::string source_encoding;
    bool operator==(const TranscodeChain&) const = default;
};

std::string to_string(const TranscodeChain& chain);            // "cp1252->utf_8"
std::optional<TranscodeChain> parse_chain(std::string_view s); // "FILE->SOURCE"

// All ordered pairs over the given codec names (file != source), sorted
// source-major by source rank, then by file rank.
std::vector<TranscodeChain> enumerate_chains(const std::vector<std::string>& codec_names);

// enumerate_chains over every supported codec
std::vector<TranscodeChain> default_chains();

// chains with their codecs resolved once, for reuse across many records
class ChainSet {
  public:
    struct Row {
        TranscodeChain chain;
        const codecs::Codec* file = nullptr;
        const codecs::Codec* source = nullptr;
    };

    // unknown codec names are dropped
    static ChainSet resolve(const std::vector<TranscodeChain>& chains);

    std::size_t size() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }
    const std::vector<Row>& rows() const { return rows_; }

  private:
    std::vector<Row> rows_;
};

struct RepairCandidate {
    TranscodeChain chain;
    std::u32string repaired;
    double score = 0.0;
    int emoji_gain = 0;
    double residual_suspicion = 0.0;
};

// One transcode attempt over the whole text: strict encode with the file
// codec, strict decode with the source codec; nullopt when either side
// fails.  The candidate is scored but not gated.
std::optional<RepairCandidate> apply_chain(std::u32string_view text,
                                           const TranscodeChain& chain,
                                           const detect::DetectorConfig& cfg = {});

// 3*emoji_gain + 2*suspicion_drop - 5*replacement_chars_introduced
// - 3*c1_introduced - 1*printable_ascii_lost
double score_candidate(std::u32string_view before, std::u32string_view after,
                       const detect::DetectorConfig& cfg = {});

struct SpanOutcome {
    RepairCandidate candidate;
    // codepoints dropped from the span edges when the winning encode only
    // succeeded after boundary shrinking (at most 2 total)
    std::size_t trim_front = 0;
    std::size_t trim_back = 0;
};

// Best qualifying candidate across the chain set, or nullopt.  A candidate
// qualifies when its score is positive and it either recovered emoji or
// silenced a suspicious span completely.  Ties keep the earlier chain.
std::optional<SpanOutcome> repair_span(std::u32string_view span_text,
                                       const ChainSet& chains,
                                       const detect::DetectorConfig& cfg = {});

struct SpanRepair {
    detect::GibberishSpan span;  // offsets in the text of the pass that found it
    TranscodeChain chain;
    std::u32string before;  // replaced codepoints (edge trims excluded)
    std::u32string after;
    double score = 0.0;
    int emoji_gain = 0;
    int pass = 0;
};

struct RepairResult {
    std::u32string text;
    std::vector<SpanRepair> repairs;
    std::size_t unrepaired_spans = 0;  // spans left suspicious after the last pass
};

// Detect-and-repair, depth passes at most (a pass that changes nothing ends
// the loop).  Text outside detected spans is never touched.
RepairResult repair_text(std::u32string_view text, const ChainSet& chains,
                         const detect::DetectorConfig& cfg = {}, int depth = 1);

// Modal chain across the sample's repaired spans when it explains at least
// `dominance` of them; nullopt otherwise.
std::optional<TranscodeChain> infer_corpus_chain(
    const std::vector<std::u32string>& sample, const ChainSet& chains,
    const detect::DetectorConfig& cfg = {}, double dominance = 0.9);

}  // namespace demoji::repair
