#include "demoji/repair.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>

#include "demoji/codecs.hpp"
#include "demoji/emoji.hpp"

namespace demoji::repair {

namespace {

struct TextProfile {
    std::size_t emoji = 0;
    std::size_t replacement = 0;
    std::size_t c1 = 0;
    std::size_t printable_ascii = 0;
};

TextProfile profile(std::u32string_view text) {
    TextProfile p;
    for (char32_t cp : text) {
        if (emoji::is_emoji_codepoint(cp)) ++p.emoji;
        if (cp == 0xFFFD) ++p.replacement;
        if (detect::is_c1_control(cp)) ++p.c1;
        if (cp >= 0x20 && cp <= 0x7E) ++p.printable_ascii;
    }
    return p;
}

double score_profiles(const TextProfile& before, double susp_before,
                      const TextProfile& after, double susp_after) {
    const auto gain = static_cast<double>(static_cast<long>(after.emoji) -
                                          static_cast<long>(before.emoji));
    const auto pos = [](long v) { return static_cast<double>(std::max(0L, v)); };
    return 3.0 * gain + 2.0 * (susp_before - susp_after) -
           5.0 * pos(static_cast<long>(after.replacement) -
                     static_cast<long>(before.replacement)) -
           3.0 * pos(static_cast<long>(after.c1) - static_cast<long>(before.c1)) -
           1.0 * pos(static_cast<long>(before.printable_ascii) -
                     static_cast<long>(after.printable_ascii));
}

bool all_emoji_or_modifier(std::u32string_view text) {
    if (text.empty()) return false;
    for (char32_t cp : text)
        if (!emoji::is_emoji_codepoint(cp) && !emoji::is_emoji_modifier(cp))
            return false;
    return true;
}

// one strict-encode attempt per file codec, boundary shrinks included
struct EncodeAttempt {
    bool ok = false;
    std::size_t trim_front = 0;
    std::size_t trim_back = 0;
    std::vector<std::uint8_t> bytes;
};

EncodeAttempt attempt_encode(std::u32string_view span_text, const codecs::Codec& file) {
    EncodeAttempt out;
    int retries = 0;
    while (true) {
        const std::size_t len = span_text.size() - out.trim_front - out.trim_back;
        if (len == 0) return out;
        const auto view = span_text.substr(out.trim_front, len);
        auto enc = codecs::encode_text(view, file, codecs::ErrorPolicy::strict);
        if (enc.status == codecs::Status::clean) {
            out.ok = true;
            out.bytes = std::move(enc.bytes);
            return out;
        }
        if (retries >= 2) return out;
        if (enc.fail_index == 0)
            ++out.trim_front;
        else if (enc.fail_index == view.size() - 1)
            ++out.trim_back;
        else
            return out;  // unmappable in the interior: give up on this codec
        ++retries;
    }
}

}  // namespace

std::string to_string(const TranscodeChain& chain) {
    return chain.file_encoding + "->" + chain.source_encoding;
}

std::optional<TranscodeChain> parse_chain(std::string_view s) {
    const auto pos = s.find("->");
    if (pos == std::string_view::npos) return std::nullopt;
    TranscodeChain chain{codecs::resolve_alias(s.substr(0, pos)),
                         codecs::resolve_alias(s.substr(pos + 2))};
    if (chain.file_encoding.empty() || chain.source_encoding.empty()) return std::nullopt;
    if (!codecs::find(chain.file_encoding) || !codecs::find(chain.source_encoding))
        return std::nullopt;
    if (chain.file_encoding == chain.source_encoding) return std::nullopt;
    return chain;
}

std::vector<TranscodeChain> enumerate_chains(const std::vector<std::string>& codec_names) {
    std::vector<std::string> names;
    for (const auto& n : codec_names) {
        const std::string canon = codecs::resolve_alias(n);
        if (codecs::find(canon) &&
            std::find(names.begin(), names.end(), canon) == names.end())
            names.push_back(canon);
    }
    std::vector<std::string> by_source = names;
    std::sort(by_source.begin(), by_source.end(), [](const auto& a, const auto& b) {
        const int ra = codecs::source_rank(a), rb = codecs::source_rank(b);
        return ra != rb ? ra < rb : a < b;
    });
    std::vector<std::string> by_file = names;
    std::sort(by_file.begin(), by_file.end(), [](const auto& a, const auto& b) {
        const int ra = codecs::file_rank(a), rb = codecs::file_rank(b);
        return ra != rb ? ra < rb : a < b;
    });
    std::vector<TranscodeChain> chains;
    chains.reserve(names.size() * (names.size() - 1));
    for (const auto& source : by_source)
        for (const auto& file : by_file)
            if (file != source) chains.push_back({file, source});
    return chains;
}

std::vector<TranscodeChain> default_chains() {
    return enumerate_chains(codecs::list_codecs());
}

ChainSet ChainSet::resolve(const std::vector<TranscodeChain>& chains) {
    ChainSet set;
    for (const auto& chain : chains) {
        Row row;
        row.chain.file_encoding = codecs::resolve_alias(chain.file_encoding);
        row.chain.source_encoding = codecs::resolve_alias(chain.source_encoding);
        row.file = codecs::find(row.chain.file_encoding);
        row.source = codecs::find(row.chain.source_encoding);
        if (row.file && row.source && row.file != row.source)
            set.rows_.push_back(std::move(row));
    }
    return set;
}

double score_candidate(std::u32string_view before, std::u32string_view after,
                       const detect::DetectorConfig& cfg) {
    return score_profiles(profile(before), detect::suspicion_score(before, cfg),
                          profile(after), detect::suspicion_score(after, cfg));
}

std::optional<RepairCandidate> apply_chain(std::u32string_view text,
                                           const TranscodeChain& chain,
                                           const detect::DetectorConfig& cfg) {
    const auto* file = codecs::find(chain.file_encoding);
    const auto* source = codecs::find(chain.source_encoding);
    if (!file || !source) return std::nullopt;
    auto enc = codecs::encode_text(text, *file, codecs::ErrorPolicy::strict);
    if (enc.status != codecs::Status::clean) return std::nullopt;
    auto dec = codecs::decode_bytes(enc.bytes, *source, codecs::ErrorPolicy::strict);
    if (dec.status != codecs::Status::clean) return std::nullopt;
    RepairCandidate cand;
    cand.chain = {codecs::resolve_alias(chain.file_encoding),
                  codecs::resolve_alias(chain.source_encoding)};
    cand.repaired = std::move(dec.text);
    const auto pb = profile(text);
    const auto pa = profile(cand.repaired);
    const double susp_a = detect::suspicion_score(cand.repaired, cfg);
    cand.score = score_profiles(pb, detect::suspicion_score(text, cfg), pa, susp_a);
    cand.emoji_gain = static_cast<int>(static_cast<long>(pa.emoji) -
                                       static_cast<long>(pb.emoji));
    cand.residual_suspicion = susp_a;
    return cand;
}

std::optional<SpanOutcome> repair_span(std::u32string_view span_text,
                                       const ChainSet& chains,
                                       const detect::DetectorConfig& cfg) {
    if (span_text.empty()) return std::nullopt;
    const double susp_full = detect::suspicion_score(span_text, cfg);
    const TextProfile profile_full = profile(span_text);

    // encode attempts depend only on the file codec: compute each once
    std::unordered_map<const codecs::Codec*, EncodeAttempt> encode_cache;
    encode_cache.reserve(80);

    std::optional<SpanOutcome> best;
    for (const auto& row : chains.rows()) {
        auto [it, fresh] = encode_cache.try_emplace(row.file);
        if (fresh) it->second = attempt_encode(span_text, *row.file);
        const EncodeAttempt& att = it->second;
        if (!att.ok) continue;

        auto dec = codecs::decode_bytes(att.bytes, *row.source,
                                        codecs::ErrorPolicy::strict);
        if (dec.status != codecs::Status::clean) continue;

        const bool trimmed = att.trim_front != 0 || att.trim_back != 0;
        const auto view = span_text.substr(
            att.trim_front, span_text.size() - att.trim_front - att.trim_back);
        if (dec.text == view) continue;  // identity transcode, nothing repaired

        const TextProfile pb = trimmed ? profile(view) : profile_full;
        const double susp_b = trimmed ? detect::suspicion_score(view, cfg) : susp_full;
        const TextProfile pa = profile(dec.text);
        const double susp_a = detect::suspicion_score(dec.text, cfg);
        const double score = score_profiles(pb, susp_b, pa, susp_a);

        const bool recovered_emoji = pa.emoji > 0;
        const bool silenced = susp_b >= cfg.threshold && susp_a == 0.0;
        if (score <= 0.0 || (!recovered_emoji && !silenced)) continue;

        if (!best || score > best->candidate.score) {
            SpanOutcome out;
            out.candidate.chain = row.chain;
            out.candidate.repaired = dec.text;
            out.candidate.score = score;
            out.candidate.emoji_gain = static_cast<int>(
                static_cast<long>(pa.emoji) - static_cast<long>(pb.emoji));
            out.candidate.residual_suspicion = susp_a;
            out.trim_front = att.trim_front;
            out.trim_back = att.trim_back;
            best = std::move(out);
            // a top-priority source decoding the span to nothing but emoji is
            // as good as a later candidate can get
            if (codecs::source_rank(row.chain.source_encoding) == 0 &&
                all_emoji_or_modifier(best->candidate.repaired))
                break;
        }
    }
    return best;
}

RepairResult repair_text(std::u32string_view text, const ChainSet& chains,
                         const detect::DetectorConfig& cfg, int depth) {
    RepairResult result;
    result.text.assign(text.begin(), text.end());
    for (int pass = 0; pass < std::max(1, depth); ++pass) {
        const auto spans = detect::detect_spans(result.text, cfg);
        if (spans.empty()) {
            result.unrepaired_spans = 0;
            break;
        }
        std::u32string next;
        next.reserve(result.text.size());
        std::size_t cursor = 0;
        std::size_t repaired_here = 0, unrepaired_here = 0;
        for (const auto& span : spans) {
            const auto span_view =
                std::u32string_view(result.text).substr(span.begin, span.end - span.begin);
            auto outcome = repair_span(span_view, chains, cfg);
            if (!outcome) {
                ++unrepaired_here;
                continue;
            }
            const std::size_t replace_begin = span.begin + outcome->trim_front;
            const std::size_t replace_end = span.end - outcome->trim_back;
            next.append(result.text, cursor, replace_begin - cursor);
            next.append(outcome->candidate.repaired);
            cursor = replace_end;

            SpanRepair record;
            record.span = span;
            record.chain = outcome->candidate.chain;
            record.before.assign(span_view.substr(
                outcome->trim_front, span_view.size() - outcome->trim_front -
                                         outcome->trim_back));
            record.after = outcome->candidate.repaired;
            record.score = outcome->candidate.score;
            record.emoji_gain = outcome->candidate.emoji_gain;
            record.pass = pass + 1;
            result.repairs.push_back(std::move(record));
            ++repaired_here;
        }
        next.append(result.text, cursor, result.text.size() - cursor);
        result.text = std::move(next);
        result.unrepaired_spans = unrepaired_here;
        if (repaired_here == 0) break;
    }
    return result;
}

std::optional<TranscodeChain> infer_corpus_chain(
    const std::vector<std::u32string>& sample, const ChainSet& chains,
    const detect::DetectorConfig& cfg, double dominance) {
    std::map<std::string, std::size_t> counts;
    std::unordered_map<std::string, TranscodeChain> by_key;
    std::size_t total = 0;
    for (const auto& text : sample) {
        const auto result = repair_text(text, chains, cfg);
        for (const auto& r : result.repairs) {
            const std::string key = to_string(r.chain);
            ++counts[key];
            by_key.emplace(key, r.chain);
            ++total;
        }
    }
    if (total == 0) return std::nullopt;
    const auto modal = std::max_element(
        counts.begin(), counts.end(),
        [](const auto& a, const auto& b) { return a.second < b.second; });
    if (static_cast<double>(modal->second) <
        dominance * static_cast<double>(total))
        return std::nullopt;
    return by_key.at(modal->first);
}

}  // namespace demoji::repair
