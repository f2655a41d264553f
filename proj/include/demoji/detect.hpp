#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace demoji::detect {

struct DetectorConfig {
    double threshold = 0.5;
    double w_c1_controls = 0.5;
    double w_replacement_char = 0.4;
    double w_lead_pair = 0.4;
    double w_symbol_density = 0.2;
    double w_reencode_utf8 = 0.6;
};

// feature bits recorded on spans
enum Trigger : unsigned {
    trig_c1_controls = 1u << 0,
    trig_replacement_char = 1u << 1,
    trig_lead_pair = 1u << 2,
    trig_symbol_density = 1u << 3,
    trig_reencode_utf8 = 1u << 4,
};

struct GibberishSpan {
    std::size_t begin = 0;  // codepoint offsets, half-open
    std::size_t end = 0;
    double score = 0.0;
    unsigned triggers = 0;
};

// Sum of fired feature weights, capped at 1.0.  Pure ASCII scores 0.
double suspicion_score(std::u32string_view text, const DetectorConfig& cfg = {});

// Maximal suspicious regions, each scoring at least cfg.threshold.
std::vector<GibberishSpan> detect_spans(std::u32string_view text,
                                        const DetectorConfig& cfg = {});

// character classes used by the features (shared with repair scoring)
bool is_c1_control(char32_t cp);
bool is_latin1_symbol(char32_t cp);
bool is_utf8_lead_image(char32_t cp);
bool is_utf8_tail_image(char32_t cp);

// Applies one "key = value" config entry (threshold, weight.c1_controls,
// weight.replacement_char, weight.lead_pair, weight.symbol_density,
// weight.reencode_utf8).  Returns false for unknown keys or bad numbers.
bool set_option(DetectorConfig& cfg, std::string_view key, std::string_view value);

}  // namespace demoji::detect
