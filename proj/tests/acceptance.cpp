// Acceptance gate for the mojibake repair toolkit: nine end-to-end criteria,
// one verdict line each, nonzero exit when any of them fails.
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "demoji/codecs.hpp"
#include "demoji/detect.hpp"
#include "demoji/emoji.hpp"
#include "demoji/forge.hpp"
#include "demoji/pipeline.hpp"
#include "demoji/readability.hpp"
#include "demoji/repair.hpp"
#include "demoji/utf.hpp"

using namespace demoji;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void verdict(int n, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", n, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// lowercase word pool; short words keep the char/word ratio low so garbled
// pseudo-words push index scores up, not down.  The letters c/h/j/y are
// deliberately absent: the EBCDIC code pages in the registry disagree about
// them, so a corruption through one page could be explained equally well by a
// sibling page and the repair would be ambiguous by construction.
const std::vector<std::u32string>& word_pool() {
    static const std::vector<std::u32string> pool = {
        U"fox", U"ran", U"out", U"over", U"blue", U"and",  U"sun", U"sea",
        U"warm", U"air", U"low", U"tide", U"long", U"wind", U"soft", U"rain",
        U"old", U"oak", U"red", U"fern", U"wet", U"moss", U"sand", U"dusk"};
    return pool;
}

// emoji whose four utf_8 bytes all sit above 0x7F, so any single-byte
// misreading leaves visible non-ascii (or garbles the ascii around it).
// Byte three and four further avoid values that the ISO-8859 variants map to
// shared letters at different positions (the S-caron/Z-caron family), which
// would again make the corruption ambiguous between sibling charts.
const std::vector<char32_t>& recovery_emoji() {
    static const std::vector<char32_t> pool = {
        0x1F602, 0x1F914, 0x1F62D, 0x1F923, 0x1F970, 0x1F680, 0x1F30A,
        0x1F355, 0x1F389, 0x1F643, 0x1F440, 0x1F4AF, 0x1F525, 0x1F637,
        0x1F92F, 0x1F976, 0x1F9FF, 0x1FA90, 0x1F607, 0x1F916, 0x1F600,
        0x1F605, 0x1F4AA, 0x1F4DA};
    return pool;
}

// subset whose utf_8 bytes avoid the five cp1252 holes, so the cp1252 chain
// is lossless over any text built from them
const std::vector<char32_t>& cp1252_safe_emoji() {
    static const std::vector<char32_t> pool = {
        0x1F602, 0x1F914, 0x1F62D, 0x1F644, 0x1F629, 0x1F937, 0x1F480,
        0x1F440, 0x1F489, 0x1F637, 0x1F612, 0x1F447, 0x1F6A8, 0x1F62C,
        0x1F606, 0x1F605, 0x1F4AB, 0x1F609, 0x1F4AF, 0x1F643, 0x1F9A0,
        0x1F62B, 0x1F928, 0x1F631, 0x1F92A};
    return pool;
}

std::u32string sentence(std::mt19937& rng, int words) {
    const auto& pool = word_pool();
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::u32string out;
    for (int i = 0; i < words; ++i) {
        if (!out.empty()) out += U' ';
        out += pool[pick(rng)];
    }
    out += U'.';
    return out;
}

// a text of roughly `target` codepoints with `emoji_count` emoji inside
std::u32string emoji_text(std::mt19937& rng, std::size_t target, int emoji_count,
                          const std::vector<char32_t>& emoji_pool) {
    std::uniform_int_distribution<int> words(6, 10);
    std::uniform_int_distribution<std::size_t> pick(0, emoji_pool.size() - 1);
    std::u32string out;
    while (out.size() + 10 < target) {
        if (!out.empty()) out += U' ';
        out += sentence(rng, words(rng));
    }
    for (int i = 0; i < emoji_count; ++i) {
        // splice each emoji after some space
        std::vector<std::size_t> gaps;
        for (std::size_t p = 0; p < out.size(); ++p)
            if (out[p] == U' ') gaps.push_back(p);
        if (gaps.empty()) break;
        std::uniform_int_distribution<std::size_t> gpick(0, gaps.size() - 1);
        const std::size_t at = gaps[gpick(rng)];
        std::u32string ins;
        ins += emoji_pool[pick(rng)];
        ins += U' ';
        out.insert(at + 1, ins);
    }
    return out;
}

struct RepairedPair {
    std::u32string garbled;
    std::u32string repaired;
};

}  // namespace

// ---------------------------------------------------------------- criterion 1
// every lossless (single-byte codec, utf_8) corruption of the bundled texts
// repairs back to the original, byte for byte, inside the time budget
static std::vector<RepairedPair> criterion_1(const repair::ChainSet& chains) {
    const auto t0 = Clock::now();
    std::mt19937 rng(811);
    std::vector<std::u32string> texts;
    for (int i = 0; i < 120; ++i) {
        const std::size_t target = 40 + (static_cast<std::size_t>(i) % 5) * 15;
        texts.push_back(emoji_text(rng, target, 1 + i % 3, recovery_emoji()));
    }

    std::vector<RepairedPair> witnessed;
    std::size_t tested = 0, exact = 0, flagged = 0;
    for (const auto* codec : codecs::single_byte_codecs()) {
        const repair::TranscodeChain chain{std::string(codecs::name(*codec)),
                                           "utf_8"};
        for (const auto& text : texts) {
            if (!forge::is_lossless(text, chain)) continue;
            auto garbled = forge::corrupt(text, {chain});
            if (!garbled) continue;
            ++tested;
            if (!detect::detect_spans(*garbled).empty()) ++flagged;
            auto repaired = repair::repair_text(*garbled, chains);
            if (repaired.text == text) ++exact;
            if (witnessed.size() < 4000)
                witnessed.push_back({*garbled, repaired.text});
        }
    }
    const double elapsed = seconds_since(t0);
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "exact recovery %zu/%zu lossless corruptions across %zu "
                  "single-byte codecs, %.1f s",
                  exact, tested, codecs::single_byte_codecs().size(), elapsed);
    verdict(1, tested >= 3000 && exact == tested && elapsed < 60.0, buf);
    if (flagged != tested)
        std::printf("  note: only %zu/%zu corruptions were flagged\n", flagged,
                    tested);
    return witnessed;
}

// ---------------------------------------------------------------- criterion 2
static void criterion_2(const repair::ChainSet& chains) {
    auto first = repair::repair_text(U"ðŸ˜‚", chains);
    const bool ok1 = first.text == U"\U0001F602" && first.repairs.size() == 1 &&
                     first.repairs[0].chain ==
                         repair::TranscodeChain{"cp1252", "utf_8"};
    auto second = repair::repair_text(U"ð", chains);
    const bool ok2 = second.text == U"\U0001F602" && second.repairs.size() == 1 &&
                     second.repairs[0].chain ==
                         repair::TranscodeChain{"latin_1", "utf_8"};
    verdict(2, ok1 && ok2,
            "canonical fixtures repair byte-exact through cp1252 and latin_1");
}

// ---------------------------------------------------------------- criterion 3
static void criterion_3() {
    // independent reference chart: identity outside 0x80-0x9F, hand-written
    // inside it, five holes
    std::map<int, char32_t> c1_block = {
        {0x80, 0x20AC}, {0x82, 0x201A}, {0x83, 0x0192}, {0x84, 0x201E},
        {0x85, 0x2026}, {0x86, 0x2020}, {0x87, 0x2021}, {0x88, 0x02C6},
        {0x89, 0x2030}, {0x8A, 0x0160}, {0x8B, 0x2039}, {0x8C, 0x0152},
        {0x8E, 0x017D}, {0x91, 0x2018}, {0x92, 0x2019}, {0x93, 0x201C},
        {0x94, 0x201D}, {0x95, 0x2022}, {0x96, 0x2013}, {0x97, 0x2014},
        {0x98, 0x02DC}, {0x99, 0x2122}, {0x9A, 0x0161}, {0x9B, 0x203A},
        {0x9C, 0x0153}, {0x9E, 0x017E}, {0x9F, 0x0178}};
    const std::array<int, 5> holes = {0x81, 0x8D, 0x8F, 0x90, 0x9D};

    const auto* cp1252 = codecs::find("cp1252");
    const auto* latin = codecs::find("latin_1");
    bool ok = cp1252 && latin;
    std::size_t checked = 0;
    for (int b = 0; ok && b < 256; ++b) {
        const std::uint8_t byte = static_cast<std::uint8_t>(b);
        auto dec = codecs::decode_bytes({&byte, 1}, *cp1252,
                                        codecs::ErrorPolicy::strict);
        const bool hole = std::find(holes.begin(), holes.end(), b) != holes.end();
        if (hole) {
            ok = dec.status == codecs::Status::failed;
            continue;
        }
        char32_t expect;
        if (b < 0x80 || b >= 0xA0)
            expect = static_cast<char32_t>(b);
        else
            expect = c1_block.at(b);
        ok = dec.status == codecs::Status::clean && dec.text.size() == 1 &&
             dec.text[0] == expect;
        ++checked;
    }
    for (int b = 0; ok && b < 256; ++b) {
        const std::uint8_t byte = static_cast<std::uint8_t>(b);
        auto dec =
            codecs::decode_bytes({&byte, 1}, *latin, codecs::ErrorPolicy::strict);
        ok = dec.status == codecs::Status::clean && dec.text.size() == 1 &&
             dec.text[0] == static_cast<char32_t>(b);
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "cp1252 matches the reference chart at %zu defined bytes with "
                  "5 holes; latin_1 is the identity",
                  checked);
    verdict(3, ok && checked == 251, buf);
}

// ---------------------------------------------------------------- criterion 4
static void criterion_4() {
    const auto cat = readability::analyze(U"The cat sat.");
    const auto fox = readability::analyze(U"The quick brown fox jumps over the lazy dog.");
    struct Case {
        double got, want;
    };
    const Case cases[] = {
        {readability::flesch_reading_ease(cat), 119.19},
        {readability::flesch_kincaid_grade(cat), -2.62},
        {readability::automated_readability_index(cat), -5.8},
        {readability::coleman_liau_index(cat), -8.026666666666667},
        {readability::dale_chall_score(cat), 0.1488},
        {readability::flesch_reading_ease(fox), 94.3},
        {readability::dale_chall_score(fox), 0.4464},
    };
    bool ok = true;
    for (const auto& c : cases)
        if (std::fabs(c.got - c.want) > 1e-9) ok = false;
    verdict(4, ok, "7 hand-computed readability values match within 1e-9");
}

// ------------------------------------------------------- criteria 5, 7b and 8b
// one forged 10k corpus feeds three criteria: directional group means, the
// flagging rate, and report determinism across worker counts
struct ForgedCorpus {
    std::string text;          // garbled txt corpus, one record per line
    std::size_t records = 0;
};

static ForgedCorpus build_forged_corpus() {
    std::mt19937 rng(905);
    ForgedCorpus corpus;
    const struct {
        std::size_t lo, hi;
    } bands[] = {{45, 65}, {80, 135}, {150, 205}, {220, 270}};
    for (const auto& band : bands) {
        std::uniform_int_distribution<std::size_t> len(band.lo, band.hi);
        std::uniform_int_distribution<int> emojis(1, 3);
        for (int i = 0; i < 2500; ++i) {
            auto clean = emoji_text(rng, len(rng), emojis(rng), cp1252_safe_emoji());
            auto garbled = forge::corrupt(clean, {{"cp1252", "utf_8"}});
            if (!garbled) continue;  // never expected: the pool is cp1252-safe
            corpus.text += utf::to_utf8(*garbled);
            corpus.text += '\n';
            ++corpus.records;
        }
    }
    return corpus;
}

static nlohmann::ordered_json run_corpus(const ForgedCorpus& corpus, int workers) {
    std::istringstream in(corpus.text);
    pipeline::PipelineConfig cfg;
    cfg.workers = workers;
    return pipeline::run_pipeline(in, nullptr, nullptr, cfg).report;
}

static void criterion_5(const nlohmann::ordered_json& report,
                        std::size_t records) {
    bool ok = report["counts"]["records"] == records;
    double prev_time = -1.0;
    std::string detail = "per-group means: ";
    for (int g = 1; g <= 4 && ok; ++g) {
        const auto& grp = report["groups"]["G" + std::to_string(g)];
        ok = grp["records"].get<std::size_t>() > 0;
        if (!ok) break;
        const double ari_before = grp["before"]["automated_readability_index"].get<double>();
        const double ari_after = grp["after"]["automated_readability_index"].get<double>();
        const double time_before = grp["before"]["reading_time"].get<double>();
        const double time_after = grp["after"]["reading_time"].get<double>();
        ok = ari_after < ari_before && time_after < time_before &&
             time_after > prev_time;
        prev_time = time_after;
        char buf[96];
        std::snprintf(buf, sizeof buf, "G%d ari %.2f->%.2f time %.3f->%.3f ", g,
                      ari_before, ari_after, time_before, time_after);
        detail += buf;
    }
    verdict(5, ok, detail + "(all decreasing, reading time monotone G1..G4)");
}

// ---------------------------------------------------------------- criterion 6
static void criterion_6() {
    const std::vector<std::pair<std::string, std::uint64_t>> expected = {
        {"joy", 113},      {"sob", 91},      {"rofl", 67}, {"thinking", 42},
        {"facepalm", 30},  {"male_sign", 27}, {"eyes", 12}, {"mask", 12}};
    const std::map<std::string, char32_t> cps = {
        {"joy", 0x1F602},      {"sob", 0x1F62D},       {"rofl", 0x1F923},
        {"thinking", 0x1F914}, {"facepalm", 0x1F926},  {"male_sign", 0x2642},
        {"eyes", 0x1F440},     {"mask", 0x1F637}};

    // spread the planned counts over a few hundred short records
    std::mt19937 rng(1108);
    std::vector<std::u32string> slots;
    for (const auto& [name, count] : expected)
        for (std::uint64_t i = 0; i < count; ++i)
            slots.push_back(std::u32string(1, cps.at(name)));
    std::shuffle(slots.begin(), slots.end(), rng);
    std::string corpus;
    std::u32string line;
    std::uniform_int_distribution<int> per_line(1, 4);
    std::size_t i = 0;
    while (i < slots.size()) {
        line = sentence(rng, 5);
        const int n = per_line(rng);
        for (int k = 0; k < n && i < slots.size(); ++k, ++i) {
            line += U' ';
            line += slots[i];
        }
        corpus += utf::to_utf8(line);
        corpus += '\n';
    }

    std::istringstream in(corpus);
    pipeline::PipelineConfig cfg;
    auto result = pipeline::run_pipeline(in, nullptr, nullptr, cfg);
    const auto rows = result.frequency.entries();
    bool ok = rows.size() == expected.size();
    for (std::size_t k = 0; ok && k < rows.size(); ++k)
        ok = rows[k].first == expected[k].first && rows[k].second == expected[k].second;
    // the report's top-n listing must agree, order included
    const auto& top = result.report["frequency_top"];
    ok = ok && top.size() == expected.size();
    for (std::size_t k = 0; ok && k < expected.size(); ++k)
        ok = top[k]["name"] == expected[k].first &&
             top[k]["count"] == expected[k].second;
    verdict(6, ok,
            "seeded counts come back exactly: joy 113, sob 91, rofl 67, ... "
            "ties alphabetical");
}

// ---------------------------------------------------------------- criterion 7
static void criterion_7(const nlohmann::ordered_json& forged_report,
                        std::size_t forged_records) {
    // ascii corpus: 10,000 lines of plain text
    std::mt19937 rng(1203);
    std::size_t ascii_spans = 0;
    for (int i = 0; i < 10000; ++i) {
        std::u32string line = sentence(rng, 8 + i % 6);
        if (i % 3 == 0) line += U" 12345 !?";
        ascii_spans += detect::detect_spans(line).size();
    }
    // accented prose: 1,000 lines of clean western european text
    const std::vector<std::u32string> accented = {
        U"café", U"naïve",  U"résumé", U"über",
        U"señor", U"déjà", U"piñata",  U"crème",
        U"brûlée", U"straße", U"müller", U"élève"};
    std::uniform_int_distribution<std::size_t> pick(0, accented.size() - 1);
    std::size_t accent_spans = 0;
    for (int i = 0; i < 1000; ++i) {
        std::u32string line = sentence(rng, 6);
        line += U' ';
        line += accented[pick(rng)];
        line += U' ';
        line += accented[pick(rng)];
        line += sentence(rng, 4);
        accent_spans += detect::detect_spans(line).size();
    }
    const auto flagged =
        forged_report["counts"]["records_with_gibberish"].get<std::size_t>();
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "0 spans on 10k ascii lines (%zu), 0 on 1k accented lines "
                  "(%zu), %zu/%zu forged records flagged",
                  ascii_spans, accent_spans, flagged, forged_records);
    verdict(7, ascii_spans == 0 && accent_spans == 0 && flagged == forged_records,
            buf);
}

// ---------------------------------------------------------------- criterion 8
static void criterion_8(const std::vector<RepairedPair>& witnessed,
                        const ForgedCorpus& corpus,
                        const nlohmann::ordered_json& report1) {
    const auto chains = repair::ChainSet::resolve(repair::default_chains());
    bool idempotent = true;
    for (const auto& pair : witnessed) {
        auto again = repair::repair_text(pair.repaired, chains);
        if (again.text != pair.repaired || !again.repairs.empty()) {
            idempotent = false;
            break;
        }
    }
    const auto report4 = run_corpus(corpus, 4);
    const auto report8 = run_corpus(corpus, 8);
    const bool deterministic =
        report1.dump() == report4.dump() && report1.dump() == report8.dump();
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "repair is idempotent on %zu repaired texts; reports are "
                  "identical for workers 1, 4, 8",
                  witnessed.size());
    verdict(8, idempotent && deterministic, buf);
}

// ---------------------------------------------------------------- criterion 9
static void criterion_9() {
    // clean throughput: 200-character ascii records through the full pipeline
    std::mt19937 rng(1490);
    std::string clean_corpus;
    for (int i = 0; i < 20000; ++i) {
        std::u32string line;
        while (line.size() < 200) {
            if (!line.empty()) line += U' ';
            line += sentence(rng, 8);
        }
        line.resize(200);
        clean_corpus += utf::to_utf8(line);
        clean_corpus += '\n';
    }
    const auto t0 = Clock::now();
    {
        std::istringstream in(clean_corpus);
        pipeline::PipelineConfig cfg;
        pipeline::run_pipeline(in, nullptr, nullptr, cfg);
    }
    const double clean_rate = 20000.0 / (seconds_since(t0) / 60.0);

    // forged throughput with a pinned chain
    std::string forged_corpus;
    std::uniform_int_distribution<std::size_t> len(80, 120);
    std::uniform_int_distribution<int> emojis(1, 2);
    for (int i = 0; i < 5000; ++i) {
        auto text = emoji_text(rng, len(rng), emojis(rng), cp1252_safe_emoji());
        auto garbled = forge::corrupt(text, {{"cp1252", "utf_8"}});
        forged_corpus += utf::to_utf8(*garbled);
        forged_corpus += '\n';
    }
    const auto t1 = Clock::now();
    {
        std::istringstream in(forged_corpus);
        pipeline::PipelineConfig cfg;
        cfg.pinned_chain = repair::TranscodeChain{"cp1252", "utf_8"};
        pipeline::run_pipeline(in, nullptr, nullptr, cfg);
    }
    const double forged_rate = 5000.0 / (seconds_since(t1) / 60.0);

    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "single core: %.0f clean records/min (floor 100000), %.0f "
                  "pinned forged records/min (floor 20000)",
                  clean_rate, forged_rate);
    verdict(9, clean_rate >= 100000.0 && forged_rate >= 20000.0, buf);
}

int main() {
    const auto chains = repair::ChainSet::resolve(repair::default_chains());

    const auto witnessed = criterion_1(chains);
    criterion_2(chains);
    criterion_3();
    criterion_4();

    const auto corpus = build_forged_corpus();
    const auto report1 = run_corpus(corpus, 1);
    criterion_5(report1, corpus.records);
    criterion_6();
    criterion_7(report1, corpus.records);
    criterion_8(witnessed, corpus, report1);
    criterion_9();

    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
