#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace demoji::emoji {

// base pictograph blocks recognized by the toolkit
bool is_emoji_codepoint(char32_t cp);

// joiners and appearance modifiers: ZWJ, variation selector 16, skin tones
bool is_emoji_modifier(char32_t cp);

bool is_skin_tone(char32_t cp);
bool is_regional_indicator(char32_t cp);

enum class ExtractionMode {
    codepoint,  // split joined sequences, attach skin tones to their base
    cluster,    // keep ZWJ sequences and flag pairs whole
};

struct Occurrence {
    std::u32string sequence;  // extracted codepoints (joiners kept in cluster mode)
    std::size_t offset = 0;   // codepoint offset of the first codepoint in the text
    std::string shortname;
};

std::vector<Occurrence> extract_emojis(std::u32string_view text,
                                       ExtractionMode mode = ExtractionMode::codepoint);

// shortname lookup: exact sequence, then the sequence with modifiers stripped,
// then the bare first codepoint; unknown sequences get a stable hex key such
// as "u1fae0" or "u1f937_1f3fb"
std::string shortname(std::u32string_view sequence);

// number of emoji bases in the text (modifiers and joiners not counted)
std::size_t count_emojis(std::u32string_view text);

class FrequencyTable {
  public:
    void add(const std::string& name, std::uint64_t n = 1);
    void merge(const FrequencyTable& other);
    std::uint64_t total() const;
    std::size_t distinct() const;

    // rows ordered by count descending, then name ascending
    std::vector<std::pair<std::string, std::uint64_t>> entries() const;

  private:
    std::unordered_map<std::string, std::uint64_t> counts_;
};

FrequencyTable frequency_table(const std::vector<Occurrence>& occurrences);

}  // namespace demoji::emoji
