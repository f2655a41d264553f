#include "demoji/readability.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "demoji/emoji.hpp"
#include "demoji/familiar_word_data.hpp"

namespace demoji::readability {

namespace {

bool is_ascii_alpha(char32_t cp) {
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
}

bool is_ascii_digit(char32_t cp) { return cp >= '0' && cp <= '9'; }

bool is_space(char32_t cp) {
    switch (cp) {
        case ' ': case '\t': case '\n': case '\r': case '\f': case '\v':
        case 0xA0: case 0x1680: case 0x2028: case 0x2029: case 0x202F:
        case 0x205F: case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

bool is_word_char(char32_t cp) {
    if (is_ascii_alpha(cp) || is_ascii_digit(cp) || cp == '\'') return true;
    if (cp < 0x80) return false;
    return !emoji::is_emoji_codepoint(cp) && !emoji::is_emoji_modifier(cp) &&
           !is_space(cp);
}

bool is_vowel(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

// lowercase ASCII letters; anything else becomes a group-breaking '#'
std::string fold_word(std::u32string_view word) {
    std::string out;
    out.reserve(word.size());
    for (char32_t cp : word) {
        if (is_ascii_alpha(cp))
            out.push_back(static_cast<char>(cp >= 'A' && cp <= 'Z' ? cp + 32 : cp));
        else if (cp == '\'')
            continue;
        else
            out.push_back('#');
    }
    return out;
}

}  // namespace

std::size_t count_syllables(std::u32string_view word) {
    const std::string w = fold_word(word);
    std::size_t groups = 0;
    bool in_group = false;
    for (char c : w) {
        const bool v = is_vowel(c);
        if (v && !in_group) ++groups;
        in_group = v;
    }
    const std::size_t n = w.size();
    if (n >= 2 && w[n - 1] == 'e' && groups > 1 && !is_vowel(w[n - 2])) {
        // silent final e, except a consonant-le ending ("table")
        const bool consonant_le = w[n - 2] == 'l' && n >= 3 && !is_vowel(w[n - 3]);
        if (!consonant_le) --groups;
    }
    return std::max<std::size_t>(1, groups);
}

const std::unordered_set<std::string>& familiar_words() {
    static const auto* set = [] {
        auto* s = new std::unordered_set<std::string>();
        std::istringstream in(k_familiar_words_raw);
        std::string word;
        while (std::getline(in, word))
            if (!word.empty()) s->insert(word);
        return s;
    }();
    return *set;
}

bool is_familiar(std::u32string_view word) {
    std::string w;
    w.reserve(word.size());
    bool all_digits = !word.empty();
    for (char32_t cp : word) {
        if (!is_ascii_digit(cp)) all_digits = false;
        if (cp >= 0x80) return false;  // list is plain ASCII
        char c = static_cast<char>(cp);
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + 32);
        w.push_back(c);
    }
    if (all_digits) return true;
    const auto& list = familiar_words();
    if (list.count(w)) return true;
    static const char* kSuffixes[] = {"s", "es", "ed", "ing", "ly"};
    for (const char* suf : kSuffixes) {
        const std::size_t len = std::char_traits<char>::length(suf);
        if (w.size() > len && w.compare(w.size() - len, len, suf) == 0 &&
            list.count(w.substr(0, w.size() - len)))
            return true;
    }
    return false;
}

TextStats analyze(std::u32string_view text) {
    TextStats s;
    s.codepoints = text.size();
    const std::size_t n = text.size();
    std::u32string word;
    auto flush_word = [&] {
        if (word.empty()) return;
        ++s.words;
        for (char32_t cp : word) {
            if (is_ascii_digit(cp))
                ++s.digits;
            else if (cp != '\'')
                ++s.letters;  // ASCII letters and every non-ASCII word char
        }
        s.syllables += count_syllables(word);
        if (!is_familiar(word)) ++s.difficult_words;
        word.clear();
    };
    for (std::size_t i = 0; i < n; ++i) {
        const char32_t cp = text[i];
        if (is_word_char(cp)) {
            word.push_back(cp);
            continue;
        }
        flush_word();
        if (cp == '.' || cp == '!' || cp == '?') {
            std::size_t j = i;
            while (j < n && (text[j] == '.' || text[j] == '!' || text[j] == '?')) ++j;
            if (j >= n || is_space(text[j])) ++s.sentences;
            i = j - 1;
        }
    }
    flush_word();
    if (s.sentences == 0 && s.words > 0) s.sentences = 1;
    s.characters = s.letters + s.digits;
    return s;
}

double flesch_reading_ease(const TextStats& s) {
    const double w = static_cast<double>(s.words);
    return 206.835 - 1.015 * (w / static_cast<double>(s.sentences)) -
           84.6 * (static_cast<double>(s.syllables) / w);
}

double flesch_kincaid_grade(const TextStats& s) {
    const double w = static_cast<double>(s.words);
    return 0.39 * (w / static_cast<double>(s.sentences)) +
           11.8 * (static_cast<double>(s.syllables) / w) - 15.59;
}

double coleman_liau_index(const TextStats& s) {
    const double w = static_cast<double>(s.words);
    const double chars_per_100 = 100.0 * static_cast<double>(s.characters) / w;
    const double sents_per_100 = 100.0 * static_cast<double>(s.sentences) / w;
    return 0.0588 * chars_per_100 - 0.296 * sents_per_100 - 15.8;
}

double automated_readability_index(const TextStats& s) {
    const double w = static_cast<double>(s.words);
    return 4.71 * (static_cast<double>(s.characters) / w) +
           0.5 * (w / static_cast<double>(s.sentences)) - 21.43;
}

double dale_chall_score(const TextStats& s) {
    const double w = static_cast<double>(s.words);
    const double difficult_share = static_cast<double>(s.difficult_words) / w;
    double score = 0.1579 * (100.0 * difficult_share) +
                   0.0496 * (w / static_cast<double>(s.sentences));
    if (difficult_share > 0.05) score += 3.6365;
    return score;
}

double reading_time_seconds(const TextStats& s) {
    return static_cast<double>(s.codepoints) * 0.01469;
}

int fre_to_grade(double fre) {
    if (fre >= 90.0) return 5;
    if (fre >= 80.0) return 6;
    if (fre >= 70.0) return 7;
    if (fre >= 60.0) return 8;
    if (fre >= 50.0) return 10;
    if (fre >= 30.0) return 12;
    return 16;
}

int dale_chall_to_grade(double dc) {
    if (dc < 5.0) return 4;
    if (dc < 6.0) return 5;
    if (dc < 7.0) return 7;
    if (dc < 8.0) return 9;
    if (dc < 9.0) return 11;
    if (dc < 10.0) return 13;
    return 16;
}

Report report(std::u32string_view text) {
    Report r;
    r.stats = analyze(text);
    r.reading_time = reading_time_seconds(r.stats);
    if (r.stats.words == 0) return r;
    r.flesch_reading_ease = flesch_reading_ease(r.stats);
    r.flesch_kincaid_grade = flesch_kincaid_grade(r.stats);
    r.coleman_liau_index = coleman_liau_index(r.stats);
    r.automated_readability_index = automated_readability_index(r.stats);
    r.dale_chall = dale_chall_score(r.stats);

    const std::vector<int> grades = {
        static_cast<int>(std::llround(*r.flesch_kincaid_grade)),
        static_cast<int>(std::llround(*r.automated_readability_index)),
        static_cast<int>(std::llround(*r.coleman_liau_index)),
        dale_chall_to_grade(*r.dale_chall),
        fre_to_grade(*r.flesch_reading_ease),
    };
    int best_grade = grades[0];
    std::size_t best_count = 0;
    for (int g : grades) {
        const std::size_t c = static_cast<std::size_t>(
            std::count(grades.begin(), grades.end(), g));
        if (c > best_count || (c == best_count && g < best_grade)) {
            best_count = c;
            best_grade = g;
        }
    }
    r.text_standard = best_grade;
    return r;
}

}  // namespace demoji::readability
