#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "demoji/forge.hpp"
#include "demoji/pipeline.hpp"
#include "demoji/utf.hpp"

using namespace demoji;
using pipeline::Format;
using pipeline::PipelineConfig;
using pipeline::Reader;
using pipeline::ReadOptions;

namespace {

std::vector<Reader::Item> read_all(const std::string& data, const ReadOptions& opts) {
    std::istringstream in(data);
    Reader reader(in, opts);
    std::vector<Reader::Item> items;
    while (auto item = reader.next()) items.push_back(std::move(*item));
    return items;
}

ReadOptions csv_opts() {
    ReadOptions o;
    o.format = Format::csv;
    return o;
}

}  // namespace

TEST_CASE("format names parse") {
    CHECK(pipeline::parse_format("csv") == Format::csv);
    CHECK(pipeline::parse_format("jsonl") == Format::jsonl);
    CHECK(pipeline::parse_format("txt") == Format::txt);
    CHECK_FALSE(pipeline::parse_format("xml").has_value());
    CHECK(std::string(pipeline::to_string(Format::csv)) == "csv");
}

TEST_CASE("txt reader yields one record per line") {
    ReadOptions opts;
    auto items = read_all("first line\nsecond line\n\nfourth\n", opts);
    REQUIRE(items.size() == 4);
    CHECK(items[0].work.record.id == "R1");
    CHECK(items[0].work.record.text == U"first line");
    CHECK(items[2].work.record.text == U"");  // blank lines are records in txt
    CHECK(items[3].work.record.id == "R4");
}

TEST_CASE("csv reader handles quoting and embedded newlines") {
    const std::string data =
        "id,text,lang\n"
        "a,plain text,en\n"
        "b,\"comma, inside\",en\n"
        "c,\"multi\nline \"\"quoted\"\" field\",fr\n";
    auto items = read_all(data, csv_opts());
    REQUIRE(items.size() == 3);
    CHECK(items[0].ok);
    CHECK(items[0].work.record.id == "a");
    CHECK(items[0].work.record.text == U"plain text");
    CHECK(items[1].work.record.text == U"comma, inside");
    CHECK(items[2].work.record.text == U"multi\nline \"quoted\" field");
    CHECK(items[2].work.csv_fields.size() == 3);
    CHECK(items[2].work.text_column == 1);
}

TEST_CASE("csv reader recovers from bad rows with line numbers") {
    const std::string data =
        "id,text\n"
        "a,fine\n"
        "b,\"oops\"trailing\n"
        "c,also fine\n";
    auto items = read_all(data, csv_opts());
    REQUIRE(items.size() == 3);
    CHECK(items[0].ok);
    CHECK_FALSE(items[1].ok);
    CHECK(items[1].error.line == 3);
    CHECK(items[1].error.message.find("closing quote") != std::string::npos);
    CHECK(items[2].ok);
    CHECK(items[2].work.record.id == "c");
}

TEST_CASE("csv reader reports an unterminated quote") {
    const std::string data =
        "id,text\n"
        "a,\"never closed\n"
        "rest of file\n";
    auto items = read_all(data, csv_opts());
    REQUIRE(items.size() == 1);
    CHECK_FALSE(items[0].ok);
    CHECK(items[0].error.line == 2);
    CHECK(items[0].error.message.find("unterminated") != std::string::npos);
}

TEST_CASE("csv reader requires the text column") {
    auto items = read_all("id,body\na,hello\n", csv_opts());
    REQUIRE(items.size() == 1);
    CHECK_FALSE(items[0].ok);
    CHECK(items[0].error.message.find("text") != std::string::npos);
    // a custom text field name is honored
    ReadOptions opts = csv_opts();
    opts.text_field = "body";
    auto ok = read_all("id,body\na,hello\n", opts);
    REQUIRE(ok.size() == 1);
    CHECK(ok[0].ok);
    CHECK(ok[0].work.record.text == U"hello");
}

TEST_CASE("csv ids fall back to row numbers") {
    auto items = read_all("text\nhello\nworld\n", csv_opts());
    REQUIRE(items.size() == 2);
    CHECK(items[0].work.record.id == "R1");
    CHECK(items[1].work.record.id == "R2");
}

TEST_CASE("jsonl reader pulls fields and skips bad lines") {
    ReadOptions opts;
    opts.format = Format::jsonl;
    const std::string data =
        "{\"id\": \"a\", \"text\": \"hello\", \"extra\": 1}\n"
        "{\"id\": 7, \"text\": \"numeric id\"}\n"
        "not json at all\n"
        "{\"id\": \"d\"}\n"
        "{\"id\": \"e\", \"text\": 42}\n"
        "\n"
        "{\"text\": \"no id\"}\n";
    auto items = read_all(data, opts);
    REQUIRE(items.size() == 6);  // the blank line is skipped
    CHECK(items[0].ok);
    CHECK(items[0].work.record.id == "a");
    CHECK(items[0].work.record.text == U"hello");
    CHECK(items[1].ok);
    CHECK(items[1].work.record.id == "7");
    CHECK_FALSE(items[2].ok);
    CHECK(items[2].error.line == 3);
    CHECK_FALSE(items[3].ok);  // missing text
    CHECK_FALSE(items[4].ok);  // text is not a string
    CHECK(items[5].ok);
    // generated ids number the records that parsed, not raw lines
    CHECK(items[5].work.record.id == "R3");
}

TEST_CASE("csv escaping quotes only when needed") {
    CHECK(pipeline::csv_escape("plain") == "plain");
    CHECK(pipeline::csv_escape("with, comma") == "\"with, comma\"");
    CHECK(pipeline::csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(pipeline::csv_escape("two\nlines") == "\"two\nlines\"");
    CHECK(pipeline::csv_escape("") == "");
    CHECK(pipeline::render_csv_header({"id", "a,b"}) == "id,\"a,b\"");
}

TEST_CASE("render_record reassembles each format") {
    // csv: replaced text lands in the right column
    auto csv_items = read_all("id,text,n\nx,old words,5\n", csv_opts());
    REQUIRE(csv_items.size() == 1);
    CHECK(pipeline::render_record(csv_items[0].work, csv_opts(), U"new, words") ==
          "x,\"new, words\",5");
    // jsonl: other keys and their order survive
    ReadOptions jopts;
    jopts.format = Format::jsonl;
    auto j_items = read_all("{\"id\": \"a\", \"text\": \"old\", \"n\": 3}\n", jopts);
    REQUIRE(j_items.size() == 1);
    CHECK(pipeline::render_record(j_items[0].work, jopts, U"new") ==
          "{\"id\":\"a\",\"text\":\"new\",\"n\":3}");
    // txt: the text is the record
    ReadOptions topts;
    auto t_items = read_all("old\n", topts);
    CHECK(pipeline::render_record(t_items[0].work, topts, U"new") == "new");
}

TEST_CASE("group bounds are half open") {
    const std::array<std::size_t, 3> bounds{71, 141, 211};
    CHECK(pipeline::assign_group(0, bounds) == 0);
    CHECK(pipeline::assign_group(70, bounds) == 0);
    CHECK(pipeline::assign_group(71, bounds) == 1);
    CHECK(pipeline::assign_group(140, bounds) == 1);
    CHECK(pipeline::assign_group(141, bounds) == 2);
    CHECK(pipeline::assign_group(210, bounds) == 2);
    CHECK(pipeline::assign_group(211, bounds) == 3);
    CHECK(pipeline::assign_group(10000, bounds) == 3);
}

TEST_CASE("pipeline repairs a small corpus and reports counts") {
    auto garbled = forge::corrupt(U"so funny \U0001F602 today", {{"cp1252", "utf_8"}});
    REQUIRE(garbled.has_value());
    std::string input = utf::to_utf8(*garbled) + "\nplain ascii line\n";
    std::istringstream in(input);
    std::ostringstream out, log;
    PipelineConfig cfg;
    auto result = pipeline::run_pipeline(in, &out, &log, cfg);
    CHECK(result.failed_records == 0);
    const auto& counts = result.report["counts"];
    CHECK(counts["records"] == 2);
    CHECK(counts["records_with_gibberish"] == 1);
    CHECK(counts["repaired_spans"] == 1);
    CHECK(counts["unrepaired_spans"] == 0);
    CHECK(counts["emojis_recovered"] == 1);
    CHECK(out.str() == "so funny \xF0\x9F\x98\x82 today\nplain ascii line\n");
    // frequency covers the recovered emoji
    const auto& freq = result.report["frequency_top"];
    REQUIRE(freq.size() == 1);
    CHECK(freq[0]["name"] == "joy");
    CHECK(freq[0]["count"] == 1);
    // no pinned or inferred chain: null in the report
    CHECK(result.report["chain"].is_null());
    // both records are short: group G1 holds them
    CHECK(result.report["groups"]["G1"]["records"] == 2);
    CHECK(result.report["groups"]["G4"]["records"] == 0);
}

TEST_CASE("analyze mode detects but does not touch text") {
    auto garbled = forge::corrupt(U"look \U0001F602 here", {{"cp1252", "utf_8"}});
    std::istringstream in(utf::to_utf8(*garbled) + "\n");
    std::ostringstream out;
    PipelineConfig cfg;
    cfg.do_repair = false;
    auto result = pipeline::run_pipeline(in, &out, nullptr, cfg);
    CHECK(result.report["counts"]["records_with_gibberish"] == 1);
    CHECK(result.report["counts"]["repaired_spans"] == 0);
    CHECK(result.report["counts"]["emojis_recovered"] == 0);
    CHECK(out.str() == utf::to_utf8(*garbled) + "\n");
}

TEST_CASE("ingest errors are counted and logged") {
    ReadOptions read;
    read.format = Format::jsonl;
    PipelineConfig cfg;
    cfg.read = read;
    std::istringstream in(
        "{\"id\": \"a\", \"text\": \"ok\"}\n"
        "broken line\n");
    std::ostringstream out, log;
    auto result = pipeline::run_pipeline(in, &out, &log, cfg);
    CHECK(result.failed_records == 1);
    CHECK(result.report["counts"]["records"] == 1);
    CHECK(result.report["counts"]["failed_records"] == 1);
    CHECK(log.str().find("line 2") != std::string::npos);
}

TEST_CASE("pinned chains skip enumeration but bind the repair") {
    // latin_1 style garble cannot be fixed by a cp1252 pin
    std::string line1 =
        utf::to_utf8(*forge::corrupt(U"ha \U0001F602", {{"cp1252", "utf_8"}}));
    std::string line2 =
        utf::to_utf8(*forge::corrupt(U"ha \U0001F602", {{"latin_1", "utf_8"}}));
    std::istringstream in(line1 + "\n" + line2 + "\n");
    std::ostringstream out;
    PipelineConfig cfg;
    cfg.pinned_chain = repair::TranscodeChain{"cp1252", "utf_8"};
    auto result = pipeline::run_pipeline(in, &out, nullptr, cfg);
    CHECK(result.report["chain"] == "cp1252->utf_8");
    CHECK(result.report["counts"]["repaired_spans"] == 1);
    CHECK(result.report["counts"]["unrepaired_spans"] == 1);
    const std::string expect1 = "ha \xF0\x9F\x98\x82\n";
    CHECK(out.str() == expect1 + line2 + "\n");
}

TEST_CASE("chain inference pins the modal chain") {
    std::string input;
    for (int i = 0; i < 8; ++i) {
        auto g = forge::corrupt(U"report \U0001F602 number", {{"cp1252", "utf_8"}});
        input += utf::to_utf8(*g) + "\n";
    }
    std::istringstream in(input);
    std::ostringstream out;
    PipelineConfig cfg;
    cfg.infer_chain = true;
    auto result = pipeline::run_pipeline(in, &out, nullptr, cfg);
    CHECK(result.report["chain"] == "cp1252->utf_8");
    CHECK(result.report["counts"]["repaired_spans"] == 8);
}

TEST_CASE("reports are identical across worker counts") {
    // enough records to span several chunks
    std::string input;
    for (int i = 0; i < 700; ++i) {
        switch (i % 4) {
            case 0: {
                auto g = forge::corrupt(U"item \U0001F602 goes here",
                                        {{"cp1252", "utf_8"}});
                input += utf::to_utf8(*g);
                break;
            }
            case 1: input += "plain ascii record " + std::to_string(i); break;
            case 2: input += "caf\xC3\xA9 au lait " + std::to_string(i); break;
            case 3: {
                auto g = forge::corrupt(U"sad \U0001F62D day", {{"latin_1", "utf_8"}});
                input += utf::to_utf8(*g);
                break;
            }
        }
        input += "\n";
    }
    std::string report1, report4, out1, out4, freq1, freq4;
    for (int workers : {1, 4}) {
        std::istringstream in(input);
        std::ostringstream out;
        PipelineConfig cfg;
        cfg.workers = workers;
        auto result = pipeline::run_pipeline(in, &out, nullptr, cfg);
        std::ostringstream freq;
        pipeline::write_frequency_csv(freq, result.frequency);
        if (workers == 1) {
            report1 = result.report.dump();
            out1 = out.str();
            freq1 = freq.str();
        } else {
            report4 = result.report.dump();
            out4 = out.str();
            freq4 = freq.str();
        }
    }
    CHECK(report1 == report4);
    CHECK(out1 == out4);
    CHECK(freq1 == freq4);
}

TEST_CASE("frequency csv lists name and count rows") {
    emoji::FrequencyTable t;
    t.add("joy", 3);
    t.add("sob", 1);
    std::ostringstream out;
    pipeline::write_frequency_csv(out, t);
    CHECK(out.str() == "name,count\njoy,3\nsob,1\n");
}

TEST_CASE("empty input still produces a well formed report") {
    std::istringstream in("");
    PipelineConfig cfg;
    auto result = pipeline::run_pipeline(in, nullptr, nullptr, cfg);
    CHECK(result.report["counts"]["records"] == 0);
    CHECK(result.report["groups"]["G1"]["records"] == 0);
    CHECK(result.report["groups"]["G1"]["before"]["flesch_reading_ease"].is_null());
    CHECK(result.report["frequency_top"].empty());
    CHECK(result.report["chain"].is_null());
}

TEST_CASE("csv output keeps the header and untouched columns") {
    auto garbled = forge::corrupt(U"wow \U0001F602", {{"cp1252", "utf_8"}});
    std::string input = "id,text,lang\nr1," + utf::to_utf8(*garbled) + ",en\n";
    std::istringstream in(input);
    std::ostringstream out;
    PipelineConfig cfg;
    cfg.read.format = Format::csv;
    auto result = pipeline::run_pipeline(in, &out, nullptr, cfg);
    CHECK(out.str() == "id,text,lang\nr1,wow \xF0\x9F\x98\x82,en\n");
    CHECK(result.report["counts"]["repaired_spans"] == 1);
}
