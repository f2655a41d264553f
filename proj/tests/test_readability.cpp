#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>

#include "demoji/readability.hpp"

using namespace demoji;
using readability::analyze;

TEST_CASE("counting walks words sentences and letters") {
    auto s = analyze(U"The cat sat.");
    CHECK(s.words == 3);
    CHECK(s.sentences == 1);
    CHECK(s.letters == 9);
    CHECK(s.digits == 0);
    CHECK(s.characters == 9);
    CHECK(s.syllables == 3);
    CHECK(s.codepoints == 12);
    auto two = analyze(U"One two? Three four!");
    CHECK(two.sentences == 2);
    CHECK(two.words == 4);
    // terminal runs collapse into one boundary
    CHECK(analyze(U"What?! Really...").sentences == 2);
    // text with words but no terminator still reads as one sentence
    CHECK(analyze(U"no full stop here").sentences == 1);
    CHECK(analyze(U"").sentences == 0);
    // a bare terminator run still marks one boundary
    CHECK(analyze(U"...").sentences == 1);
    CHECK(analyze(U"").words == 0);
}

TEST_CASE("apostrophes and digits stay inside words") {
    auto s = analyze(U"Don't count 42 apples.");
    CHECK(s.words == 4);
    CHECK(s.digits == 2);
    CHECK(s.letters == 15);    // apostrophe is neither letter nor digit
    CHECK(s.characters == 17);
    // accented letters are word characters too
    CHECK(analyze(U"café naïve").words == 2);
}

TEST_CASE("emoji are codepoints but never words") {
    auto s = analyze(U"So funny \U0001F602\U0001F602.");
    CHECK(s.words == 2);
    CHECK(s.codepoints == 12);
    // a garbled emoji, though, reads as a pseudo-word
    auto g = analyze(U"So funny ðŸ˜‚.");
    CHECK(g.words == 3);
}

TEST_CASE("syllable heuristic handles silent endings") {
    CHECK(readability::count_syllables(U"cat") == 1);
    CHECK(readability::count_syllables(U"table") == 2);   // consonant+le keeps the e
    CHECK(readability::count_syllables(U"cake") == 1);    // silent final e
    CHECK(readability::count_syllables(U"whale") == 1);
    CHECK(readability::count_syllables(U"see") == 1);
    CHECK(readability::count_syllables(U"audio") == 2);
    CHECK(readability::count_syllables(U"beautiful") == 3);
    CHECK(readability::count_syllables(U"gym") == 1);     // y as the only vowel
    CHECK(readability::count_syllables(U"syllable") == 3);
    CHECK(readability::count_syllables(U"x") == 1);       // never below one
    CHECK(readability::count_syllables(U"") == 1);
}

TEST_CASE("familiar word lookup strips common suffixes") {
    CHECK(readability::is_familiar(U"the"));
    CHECK(readability::is_familiar(U"The"));
    CHECK(readability::is_familiar(U"cat"));
    CHECK(readability::is_familiar(U"cats"));      // plural of a listed word
    CHECK(readability::is_familiar(U"jumped"));    // -ed
    CHECK(readability::is_familiar(U"jumping"));   // -ing
    CHECK(readability::is_familiar(U"quickly"));   // -ly
    CHECK(readability::is_familiar(U"boxes"));     // -es
    CHECK(readability::is_familiar(U"1984"));      // pure numbers are familiar
    CHECK_FALSE(readability::is_familiar(U"zeitgeist"));
    CHECK_FALSE(readability::is_familiar(U"café"));  // non-ascii is unfamiliar
    CHECK(readability::familiar_words().size() > 2000);
}

TEST_CASE("formula values match hand calculations") {
    // "The cat sat.": 3 words, 1 sentence, 3 syllables, 9 characters
    auto s = analyze(U"The cat sat.");
    CHECK(readability::flesch_reading_ease(s) == doctest::Approx(119.19).epsilon(1e-9));
    CHECK(readability::flesch_kincaid_grade(s) == doctest::Approx(-2.62).epsilon(1e-9));
    CHECK(readability::automated_readability_index(s) ==
          doctest::Approx(-5.8).epsilon(1e-9));
    CHECK(readability::coleman_liau_index(s) ==
          doctest::Approx(-8.026666666666667).epsilon(1e-9));
    // all three words are familiar: no difficult-word surcharge
    CHECK(readability::dale_chall_score(s) ==
          doctest::Approx(0.1488).epsilon(1e-9));
}

TEST_CASE("formula values match on the fox sentence") {
    // 9 words, 1 sentence, 11 syllables, 35 characters, 0 difficult
    auto s = analyze(U"The quick brown fox jumps over the lazy dog.");
    CHECK(s.words == 9);
    CHECK(s.syllables == 11);
    CHECK(s.characters == 35);
    CHECK(s.difficult_words == 0);
    CHECK(readability::flesch_reading_ease(s) ==
          doctest::Approx(94.3).epsilon(1e-9));
    CHECK(readability::dale_chall_score(s) == doctest::Approx(0.4464).epsilon(1e-9));
}

TEST_CASE("difficult words push dale chall into the surcharge") {
    // 2 of 6 words unfamiliar: 33% difficult, well over the 5% line
    auto s = analyze(U"The obsequious sycophant praised the boss.");
    CHECK(s.words == 6);
    CHECK(s.difficult_words >= 2);
    const double share =
        static_cast<double>(s.difficult_words) / static_cast<double>(s.words);
    const double expected =
        0.1579 * (share * 100.0) + 0.0496 * 6.0 + 3.6365;
    CHECK(readability::dale_chall_score(s) == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("reading time scales with codepoints") {
    auto s = analyze(U"The cat sat.");
    CHECK(readability::reading_time_seconds(s) ==
          doctest::Approx(12 * 0.01469).epsilon(1e-12));
    CHECK(readability::reading_time_seconds(analyze(U"")) == 0.0);
}

TEST_CASE("grade bands bucket the scale scores") {
    CHECK(readability::fre_to_grade(95.0) == 5);
    CHECK(readability::fre_to_grade(85.0) == 6);
    CHECK(readability::fre_to_grade(75.0) == 7);
    CHECK(readability::fre_to_grade(65.0) == 8);
    CHECK(readability::fre_to_grade(55.0) == 10);
    CHECK(readability::fre_to_grade(35.0) == 12);
    CHECK(readability::fre_to_grade(10.0) == 16);
    CHECK(readability::dale_chall_to_grade(4.9) == 4);
    CHECK(readability::dale_chall_to_grade(5.5) == 5);
    CHECK(readability::dale_chall_to_grade(6.5) == 7);
    CHECK(readability::dale_chall_to_grade(7.5) == 9);
    CHECK(readability::dale_chall_to_grade(8.5) == 11);
    CHECK(readability::dale_chall_to_grade(9.5) == 13);
    CHECK(readability::dale_chall_to_grade(10.5) == 16);
}

TEST_CASE("report aggregates metrics and consensus") {
    auto r = readability::report(U"The cat sat on the mat. The dog ran to the cat.");
    REQUIRE(r.flesch_reading_ease.has_value());
    REQUIRE(r.flesch_kincaid_grade.has_value());
    REQUIRE(r.coleman_liau_index.has_value());
    REQUIRE(r.automated_readability_index.has_value());
    REQUIRE(r.dale_chall.has_value());
    REQUIRE(r.text_standard.has_value());
    CHECK(r.reading_time > 0.0);
    CHECK(r.stats.words == 12);
    // wordless text reports no metrics but still a reading time
    auto empty = readability::report(U"\U0001F602\U0001F602");
    CHECK_FALSE(empty.flesch_reading_ease.has_value());
    CHECK_FALSE(empty.text_standard.has_value());
    CHECK(empty.reading_time == doctest::Approx(2 * 0.01469));
}

TEST_CASE("text standard takes the modal grade with low ties") {
    // single-word texts have degenerate metrics but still produce a grade
    auto r = readability::report(U"Go now. Go now. Go now.");
    REQUIRE(r.text_standard.has_value());
    // hand check: the consensus never falls outside the candidate grades
    const int grades[] = {
        static_cast<int>(std::lround(*r.flesch_kincaid_grade)),
        static_cast<int>(std::lround(*r.automated_readability_index)),
        static_cast<int>(std::lround(*r.coleman_liau_index)),
        readability::dale_chall_to_grade(*r.dale_chall),
        readability::fre_to_grade(*r.flesch_reading_ease),
    };
    bool found = false;
    for (int g : grades)
        if (g == *r.text_standard) found = true;
    CHECK(found);
}
