#include "demoji/detect.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "demoji/codecs.hpp"
#include "demoji/utf.hpp"

namespace demoji::detect {

namespace {

struct CodecSnapshot {
    std::uint64_t version = ~0ull;
    std::vector<const codecs::Codec*> single_byte;  // file-rank order
    std::vector<const codecs::Codec*> ascii_garbling;  // tier-2: not ascii_clean
};

const CodecSnapshot& snapshot() {
    thread_local CodecSnapshot snap;
    const std::uint64_t v = codecs::registry_version();
    if (snap.version != v) {
        snap.single_byte = codecs::single_byte_codecs();
        snap.ascii_garbling.clear();
        for (const auto* c : snap.single_byte)
            if (!codecs::ascii_clean(*c)) snap.ascii_garbling.push_back(c);
        snap.version = v;
    }
    return snap;
}

bool is_ascii(char32_t cp) { return cp < 0x80; }

// a maximal non-ASCII run re-encoded under some single-byte codec forms
// valid multi-byte UTF-8
bool run_reencodes_utf8(std::u32string_view run) {
    for (const auto* c : snapshot().single_byte) {
        auto enc = codecs::encode_text(run, *c, codecs::ErrorPolicy::strict);
        if (enc.status != codecs::Status::clean) continue;
        auto scan = utf::scan_utf8(enc.bytes);
        if (scan.valid && scan.has_multibyte) return true;
    }
    return false;
}

// whole-text hypothesis for codecs whose mojibake garbles ASCII as well
// (EBCDIC pages, cp864); requires at least one non-ASCII codepoint
bool text_reencodes_utf8(std::u32string_view text) {
    for (const auto* c : snapshot().ascii_garbling) {
        auto enc = codecs::encode_text(text, *c, codecs::ErrorPolicy::strict);
        if (enc.status != codecs::Status::clean) continue;
        auto scan = utf::scan_utf8(enc.bytes);
        if (scan.valid && scan.has_multibyte) return true;
    }
    return false;
}

struct Features {
    double score = 0.0;
    unsigned triggers = 0;
};

Features score_features(std::u32string_view text, const DetectorConfig& cfg) {
    Features out;
    const std::size_t n = text.size();
    bool any_non_ascii = false;
    bool c1 = false, fffd = false, lead_pair = false;
    std::size_t symbols = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const char32_t cp = text[i];
        if (!is_ascii(cp)) any_non_ascii = true;
        if (is_c1_control(cp)) c1 = true;
        if (cp == 0xFFFD) fffd = true;
        if (is_latin1_symbol(cp)) ++symbols;
        if (!lead_pair && is_utf8_lead_image(cp) && i + 1 < n &&
            is_utf8_tail_image(text[i + 1]))
            lead_pair = true;
    }
    if (!any_non_ascii) return out;

    if (c1) {
        out.score += cfg.w_c1_controls;
        out.triggers |= trig_c1_controls;
    }
    if (fffd) {
        out.score += cfg.w_replacement_char;
        out.triggers |= trig_replacement_char;
    }
    if (lead_pair) {
        out.score += cfg.w_lead_pair;
        out.triggers |= trig_lead_pair;
    }
    if (n > 0 && static_cast<double>(symbols) / static_cast<double>(n) > 0.10) {
        out.score += cfg.w_symbol_density;
        out.triggers |= trig_symbol_density;
    }

    bool reencodes = false;
    std::size_t i = 0;
    while (i < n && !reencodes) {
        if (is_ascii(text[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < n && !is_ascii(text[j])) ++j;
        reencodes = run_reencodes_utf8(text.substr(i, j - i));
        i = j;
    }
    if (!reencodes) reencodes = text_reencodes_utf8(text);
    if (reencodes) {
        out.score += cfg.w_reencode_utf8;
        out.triggers |= trig_reencode_utf8;
    }
    out.score = std::min(out.score, 1.0);
    return out;
}

}  // namespace

bool is_c1_control(char32_t cp) { return cp >= 0x80 && cp <= 0x9F; }

bool is_latin1_symbol(char32_t cp) {
    return (cp >= 0xA0 && cp <= 0xBF) || cp == 0xD7 || cp == 0xF7;
}

bool is_utf8_lead_image(char32_t cp) {
    // Latin-1 images of common UTF-8 lead bytes: Ã Â Å â ð Ÿ
    switch (cp) {
        case 0xC3:
        case 0xC2:
        case 0xC5:
        case 0xE2:
        case 0xF0:
        case 0x178:
            return true;
        default:
            return false;
    }
}

bool is_utf8_tail_image(char32_t cp) {
    // continuation bytes seen through latin_1 (0x80-0xBF) or cp1252
    if (cp >= 0x80 && cp <= 0xBF) return true;
    switch (cp) {
        case 0x20AC: case 0x201A: case 0x0192: case 0x201E: case 0x2026:
        case 0x2020: case 0x2021: case 0x02C6: case 0x2030: case 0x0160:
        case 0x2039: case 0x0152: case 0x017D: case 0x2018: case 0x2019:
        case 0x201C: case 0x201D: case 0x2022: case 0x2013: case 0x2014:
        case 0x02DC: case 0x2122: case 0x0161: case 0x203A: case 0x0153:
        case 0x017E: case 0x0178:
            return true;
        default:
            return false;
    }
}

double suspicion_score(std::u32string_view text, const DetectorConfig& cfg) {
    return score_features(text, cfg).score;
}

std::vector<GibberishSpan> detect_spans(std::u32string_view text,
                                        const DetectorConfig& cfg) {
    const std::size_t n = text.size();
    std::vector<std::pair<std::size_t, std::size_t>> cand;
    bool any_non_ascii = false;
    std::size_t i = 0;
    while (i < n) {
        if (is_ascii(text[i])) {
            ++i;
            continue;
        }
        any_non_ascii = true;
        std::size_t j = i;
        while (j < n && !is_ascii(text[j])) ++j;
        cand.emplace_back(i, j);
        i = j;
    }
    if (!any_non_ascii) return {};

    // whole-text windows for ASCII-garbling codecs, identity bytes trimmed
    // from both ends so untouched prefixes/suffixes stay out of the span
    for (const auto* c : snapshot().ascii_garbling) {
        auto enc = codecs::encode_text(text, *c, codecs::ErrorPolicy::strict);
        if (enc.status != codecs::Status::clean) continue;
        auto scan = utf::scan_utf8(enc.bytes);
        if (!scan.valid || !scan.has_multibyte) continue;
        std::size_t b = 0, e = n;
        while (b < e && is_ascii(text[b]) &&
               enc.bytes[b] == static_cast<std::uint8_t>(text[b]))
            ++b;
        while (e > b && is_ascii(text[e - 1]) &&
               enc.bytes[e - 1] == static_cast<std::uint8_t>(text[e - 1]))
            --e;
        if (b < e) cand.emplace_back(b, e);
    }

    std::sort(cand.begin(), cand.end());
    std::vector<std::pair<std::size_t, std::size_t>> merged;
    for (const auto& c : cand) {
        if (!merged.empty() && c.first <= merged.back().second)
            merged.back().second = std::max(merged.back().second, c.second);
        else
            merged.push_back(c);
    }

    std::vector<GibberishSpan> spans;
    for (const auto& m : merged) {
        Features f = score_features(text.substr(m.first, m.second - m.first), cfg);
        if (f.score >= cfg.threshold)
            spans.push_back({m.first, m.second, f.score, f.triggers});
    }
    return spans;
}

bool set_option(DetectorConfig& cfg, std::string_view key, std::string_view value) {
    double* slot = nullptr;
    if (key == "threshold") slot = &cfg.threshold;
    else if (key == "weight.c1_controls") slot = &cfg.w_c1_controls;
    else if (key == "weight.replacement_char") slot = &cfg.w_replacement_char;
    else if (key == "weight.lead_pair") slot = &cfg.w_lead_pair;
    else if (key == "weight.symbol_density") slot = &cfg.w_symbol_density;
    else if (key == "weight.reencode_utf8") slot = &cfg.w_reencode_utf8;
    if (!slot) return false;
    const std::string buf(value);
    char* end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (end == buf.c_str() || *end != '\0') return false;
    *slot = v;
    return true;
}

}  // namespace demoji::detect
