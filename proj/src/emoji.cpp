#include "demoji/emoji.hpp"

#include <algorithm>
#include <cstdio>

#include "demoji/emoji_name_data.hpp"

namespace demoji::emoji {

namespace {

struct U32Hash {
    std::size_t operator()(const std::u32string& s) const {
        std::size_t h = 1469598103934665603ull;
        for (char32_t c : s) {
            h ^= static_cast<std::size_t>(c);
            h *= 1099511628211ull;
        }
        return h;
    }
};

const std::unordered_map<std::u32string, std::string, U32Hash>& name_map() {
    static const auto* map = [] {
        auto* m = new std::unordered_map<std::u32string, std::string, U32Hash>();
        for (std::size_t i = 0; i < k_emoji_name_row_count; ++i) {
            const auto& row = k_emoji_name_rows[i];
            std::u32string seq;
            for (int j = 0; j < 8 && row.seq[j] != 0; ++j) seq.push_back(row.seq[j]);
            m->emplace(std::move(seq), row.name);
        }
        return m;
    }();
    return *map;
}

std::string hex_key(std::u32string_view seq) {
    std::string key = "u";
    char buf[16];
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) key.push_back('_');
        std::snprintf(buf, sizeof buf, "%x", static_cast<unsigned>(seq[i]));
        key += buf;
    }
    return key;
}

constexpr char32_t kZwj = 0x200D;
constexpr char32_t kVs16 = 0xFE0F;

}  // namespace

bool is_skin_tone(char32_t cp) { return cp >= 0x1F3FB && cp <= 0x1F3FF; }

bool is_regional_indicator(char32_t cp) { return cp >= 0x1F1E6 && cp <= 0x1F1FF; }

bool is_emoji_modifier(char32_t cp) { return cp == kZwj || cp == kVs16 || is_skin_tone(cp); }

bool is_emoji_codepoint(char32_t cp) {
    if (is_emoji_modifier(cp)) return false;
    return (cp >= 0x1F300 && cp <= 0x1F5FF) || (cp >= 0x1F600 && cp <= 0x1F64F) ||
           (cp >= 0x1F680 && cp <= 0x1F6FF) || (cp >= 0x1F900 && cp <= 0x1F9FF) ||
           (cp >= 0x1FA70 && cp <= 0x1FAFF) || (cp >= 0x2600 && cp <= 0x26FF) ||
           (cp >= 0x2700 && cp <= 0x27BF) || is_regional_indicator(cp);
}

std::string shortname(std::u32string_view sequence) {
    if (sequence.empty()) return hex_key(sequence);
    const auto& names = name_map();
    auto it = names.find(std::u32string(sequence));
    if (it != names.end()) return it->second;
    // retry without appearance modifiers
    std::u32string stripped;
    for (char32_t cp : sequence)
        if (!is_emoji_modifier(cp)) stripped.push_back(cp);
    if (stripped.size() != sequence.size() && !stripped.empty()) {
        it = names.find(stripped);
        if (it != names.end()) return it->second;
    }
    // bare base codepoint
    if (sequence.size() > 1) {
        it = names.find(std::u32string(1, sequence[0]));
        if (it != names.end()) return it->second;
    }
    return hex_key(sequence);
}

std::vector<Occurrence> extract_emojis(std::u32string_view text, ExtractionMode mode) {
    std::vector<Occurrence> out;
    const std::size_t n = text.size();
    std::size_t i = 0;
    while (i < n) {
        char32_t cp = text[i];
        if (!is_emoji_codepoint(cp)) {
            ++i;  // plain text or orphan modifier
            continue;
        }
        Occurrence occ;
        occ.offset = i;
        if (mode == ExtractionMode::codepoint) {
            occ.sequence.push_back(cp);
            ++i;
            // skin tones stay with their base; ZWJ and VS-16 are consumed
            while (i < n) {
                if (is_skin_tone(text[i])) {
                    occ.sequence.push_back(text[i]);
                    ++i;
                } else if (text[i] == kVs16) {
                    ++i;
                } else {
                    break;
                }
            }
            if (i < n && text[i] == kZwj) ++i;  // next base starts a new occurrence
        } else {
            occ.sequence.push_back(cp);
            ++i;
            if (is_regional_indicator(cp) && i < n && is_regional_indicator(text[i])) {
                occ.sequence.push_back(text[i]);
                ++i;
            } else {
                while (i < n) {
                    if (is_skin_tone(text[i]) || text[i] == kVs16) {
                        occ.sequence.push_back(text[i]);
                        ++i;
                    } else if (text[i] == kZwj && i + 1 < n && is_emoji_codepoint(text[i + 1])) {
                        occ.sequence.push_back(text[i]);
                        occ.sequence.push_back(text[i + 1]);
                        i += 2;
                    } else {
                        break;
                    }
                }
            }
        }
        occ.shortname = shortname(occ.sequence);
        out.push_back(std::move(occ));
    }
    return out;
}

std::size_t count_emojis(std::u32string_view text) {
    std::size_t n = 0;
    for (char32_t cp : text)
        if (is_emoji_codepoint(cp)) ++n;
    return n;
}

void FrequencyTable::add(const std::string& name, std::uint64_t n) { counts_[name] += n; }

void FrequencyTable::merge(const FrequencyTable& other) {
    for (const auto& [name, n] : other.counts_) counts_[name] += n;
}

std::uint64_t FrequencyTable::total() const {
    std::uint64_t t = 0;
    for (const auto& [name, n] : counts_) t += n;
    return t;
}

std::size_t FrequencyTable::distinct() const { return counts_.size(); }

std::vector<std::pair<std::string, std::uint64_t>> FrequencyTable::entries() const {
    std::vector<std::pair<std::string, std::uint64_t>> rows(counts_.begin(), counts_.end());
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return rows;
}

FrequencyTable frequency_table(const std::vector<Occurrence>& occurrences) {
    FrequencyTable table;
    for (const auto& occ : occurrences) table.add(occ.shortname);
    return table;
}

}  // namespace demoji::emoji
