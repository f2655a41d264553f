#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "demoji/emoji.hpp"

using namespace demoji;
using emoji::ExtractionMode;

TEST_CASE("base pictograph blocks are recognized") {
    CHECK(emoji::is_emoji_codepoint(U'\U0001F602'));  // faces
    CHECK(emoji::is_emoji_codepoint(U'\U0001F300'));  // symbols and pictographs
    CHECK(emoji::is_emoji_codepoint(U'\U0001F680'));  // transport
    CHECK(emoji::is_emoji_codepoint(U'\U0001F9A0'));  // supplemental
    CHECK(emoji::is_emoji_codepoint(U'\U0001FAE0'));  // extended-A
    CHECK(emoji::is_emoji_codepoint(U'☀'));      // misc symbols
    CHECK(emoji::is_emoji_codepoint(U'✌'));      // dingbats
    CHECK(emoji::is_emoji_codepoint(U'♀'));      // gender signs live in misc symbols
    CHECK(emoji::is_emoji_codepoint(U'\U0001F1E6'));  // regional indicators
    // modifiers and plain text are not bases
    CHECK_FALSE(emoji::is_emoji_codepoint(U'‍'));
    CHECK_FALSE(emoji::is_emoji_codepoint(U'️'));
    CHECK_FALSE(emoji::is_emoji_codepoint(U'\U0001F3FB'));
    CHECK_FALSE(emoji::is_emoji_codepoint(U'a'));
    CHECK_FALSE(emoji::is_emoji_codepoint(U'é'));
    CHECK_FALSE(emoji::is_emoji_codepoint(U'◿'));   // just below the block
    CHECK(emoji::is_emoji_modifier(U'‍'));
    CHECK(emoji::is_emoji_modifier(U'️'));
    CHECK(emoji::is_emoji_modifier(U'\U0001F3FD'));
    CHECK_FALSE(emoji::is_emoji_modifier(U'\U0001F602'));
    CHECK(emoji::is_skin_tone(U'\U0001F3FB'));
    CHECK(emoji::is_skin_tone(U'\U0001F3FF'));
    CHECK_FALSE(emoji::is_skin_tone(U'\U0001F3FA'));
    CHECK(emoji::is_regional_indicator(U'\U0001F1E6'));
    CHECK(emoji::is_regional_indicator(U'\U0001F1FF'));
    CHECK_FALSE(emoji::is_regional_indicator(U'\U0001F200'));
}

TEST_CASE("extraction finds bases at codepoint offsets") {
    auto occ = emoji::extract_emojis(U"hi \U0001F602 there \U0001F914");
    REQUIRE(occ.size() == 2);
    CHECK(occ[0].sequence == U"\U0001F602");
    CHECK(occ[0].offset == 3);
    CHECK(occ[0].shortname == "joy");
    CHECK(occ[1].sequence == U"\U0001F914");
    CHECK(occ[1].offset == 11);
    CHECK(occ[1].shortname == "thinking");
    CHECK(emoji::extract_emojis(U"no emoji here").empty());
    CHECK(emoji::extract_emojis(U"").empty());
}

TEST_CASE("skin tones stay attached to their base") {
    auto occ = emoji::extract_emojis(U"\U0001F44D\U0001F3FD ok");
    REQUIRE(occ.size() == 1);
    CHECK(occ[0].sequence == std::u32string(U"\U0001F44D\U0001F3FD"));
    CHECK(occ[0].shortname == "thumbsup");  // named via the stripped base
    // an orphan skin tone is not an occurrence
    CHECK(emoji::extract_emojis(U"x\U0001F3FDy").empty());
}

TEST_CASE("codepoint mode splits joined sequences") {
    // woman shrugging: shrug ZWJ female-sign VS-16
    const std::u32string woman_shrug = U"\U0001F937‍♀️";
    auto split = emoji::extract_emojis(woman_shrug, ExtractionMode::codepoint);
    REQUIRE(split.size() == 2);
    CHECK(split[0].sequence == U"\U0001F937");
    CHECK(split[0].shortname == "shrug");
    CHECK(split[1].sequence == U"♀");
    CHECK(split[1].shortname == "female_sign");
    auto whole = emoji::extract_emojis(woman_shrug, ExtractionMode::cluster);
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].sequence == woman_shrug);
    CHECK(whole[0].shortname == "woman_shrugging");
}

TEST_CASE("cluster mode keeps flag pairs whole") {
    const std::u32string flag = U"\U0001F1E9\U0001F1EA";
    auto whole = emoji::extract_emojis(flag, ExtractionMode::cluster);
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].sequence == flag);
    CHECK(whole[0].shortname == "de");
    auto split = emoji::extract_emojis(flag, ExtractionMode::codepoint);
    REQUIRE(split.size() == 2);
    CHECK(split[0].shortname == "u1f1e9");  // unnamed singleton falls back to hex
    CHECK(split[1].shortname == "u1f1ea");
}

TEST_CASE("shortname lookup walks its fallbacks") {
    CHECK(emoji::shortname(U"\U0001F602") == "joy");
    CHECK(emoji::shortname(U"\U0001F62D") == "sob");
    CHECK(emoji::shortname(U"\U0001F923") == "rofl");
    CHECK(emoji::shortname(U"\U0001F9A0") == "microbe");
    CHECK(emoji::shortname(U"\U0001FAE0") == "melting_face");
    CHECK(emoji::shortname(U"\U0001F4AF") == "100");
    // exact multi-codepoint entries
    CHECK(emoji::shortname(U"\U0001F937‍♂️") == "man_shrugging");
    CHECK(emoji::shortname(U"❤️‍\U0001F525") == "heart_on_fire");
    CHECK(emoji::shortname(U"\U0001F3F3️‍\U0001F308") == "rainbow_flag");
    // modifier stripping finds the base entry
    CHECK(emoji::shortname(U"\U0001F937\U0001F3FB") == "shrug");
    CHECK(emoji::shortname(U"❤️") == "heart");
    // the bare first codepoint is the last named fallback
    CHECK(emoji::shortname(U"\U0001F937‍\U0001F680") == "shrug");
    // sequences with an unnamed head get a stable hex key
    CHECK(emoji::shortname(U"\U0001F1E9") == "u1f1e9");
    CHECK(emoji::shortname(U"\U0001F1E9\U0001F3FB") == "u1f1e9_1f3fb");
}

TEST_CASE("count_emojis counts bases only") {
    CHECK(emoji::count_emojis(U"") == 0);
    CHECK(emoji::count_emojis(U"plain text") == 0);
    CHECK(emoji::count_emojis(U"\U0001F602") == 1);
    // shrug ZWJ female VS-16: two bases, two modifiers
    CHECK(emoji::count_emojis(U"\U0001F937‍♀️") == 2);
    // thumbs up with skin tone: one base
    CHECK(emoji::count_emojis(U"\U0001F44D\U0001F3FD") == 1);
    CHECK(emoji::count_emojis(U"a\U0001F602b\U0001F62Dc") == 2);
}

TEST_CASE("frequency table orders by count then name") {
    emoji::FrequencyTable t;
    t.add("sob", 3);
    t.add("joy");
    t.add("joy", 2);
    t.add("rofl");
    auto rows = t.entries();
    REQUIRE(rows.size() == 3);
    // joy and sob tie at 3; the tie breaks alphabetically
    CHECK(rows[0].first == "joy");
    CHECK(rows[0].second == 3);
    CHECK(rows[1].first == "sob");
    CHECK(rows[1].second == 3);
    CHECK(rows[2].first == "rofl");
    CHECK(rows[2].second == 1);
    CHECK(t.total() == 7);
    CHECK(t.distinct() == 3);
}

TEST_CASE("frequency merge is order independent") {
    emoji::FrequencyTable a, b, ab, ba;
    a.add("joy", 2);
    a.add("sob", 1);
    b.add("joy", 1);
    b.add("rofl", 4);
    ab.merge(a);
    ab.merge(b);
    ba.merge(b);
    ba.merge(a);
    CHECK(ab.entries() == ba.entries());
    CHECK(ab.total() == 8);
    auto rows = ab.entries();
    CHECK(rows[0].first == "rofl");
    CHECK(rows[1].first == "joy");
    CHECK(rows[1].second == 3);
}

TEST_CASE("frequency_table aggregates occurrences") {
    auto occ = emoji::extract_emojis(U"\U0001F602\U0001F602 \U0001F62D");
    auto t = emoji::frequency_table(occ);
    auto rows = t.entries();
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::pair<std::string, std::uint64_t>{"joy", 2});
    CHECK(rows[1] == std::pair<std::string, std::uint64_t>{"sob", 1});
}
