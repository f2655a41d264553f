#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>

namespace demoji::readability {

struct TextStats {
    std::size_t sentences = 0;
    std::size_t words = 0;
    std::size_t letters = 0;
    std::size_t digits = 0;
    std::size_t characters = 0;  // letters + digits
    std::size_t syllables = 0;
    std::size_t difficult_words = 0;
    std::size_t codepoints = 0;  // everything, emoji and whitespace included
};

// Tokenization: a word is a maximal run of word characters.  Word characters
// are ASCII letters, ASCII digits, the apostrophe, and any codepoint at or
// above U+0080 that is neither an emoji, an emoji modifier, nor whitespace
// (so a garbled emoji counts as a short pseudo-word, the way a reader meets
// it on the page).  Sentences are runs of . ! ? followed by whitespace or
// end of text; any text with words has at least one sentence.
TextStats analyze(std::u32string_view text);

// heuristic syllable count for one word, minimum 1
std::size_t count_syllables(std::u32string_view word);

// bundled common-word check; suffix-stripped variants (s, es, ed, ing, ly)
// of listed words are familiar too, as are pure numbers
bool is_familiar(std::u32string_view word);
const std::unordered_set<std::string>& familiar_words();

double flesch_reading_ease(const TextStats& s);
double flesch_kincaid_grade(const TextStats& s);
double coleman_liau_index(const TextStats& s);
double automated_readability_index(const TextStats& s);
double dale_chall_score(const TextStats& s);

// seconds at a fixed per-codepoint rate
double reading_time_seconds(const TextStats& s);

int fre_to_grade(double fre);
int dale_chall_to_grade(double dc);

struct Report {
    TextStats stats;
    std::optional<double> flesch_reading_ease;
    std::optional<double> flesch_kincaid_grade;
    std::optional<double> coleman_liau_index;
    std::optional<double> automated_readability_index;
    std::optional<double> dale_chall;
    std::optional<int> text_standard;  // consensus grade
    double reading_time = 0.0;
};

// null metrics when the text has no words; reading_time always present
Report report(std::u32string_view text);

}  // namespace demoji::readability
