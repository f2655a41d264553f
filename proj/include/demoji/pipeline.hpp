#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "demoji/detect.hpp"
#include "demoji/emoji.hpp"
#include "demoji/record.hpp"
#include "demoji/repair.hpp"

namespace demoji::pipeline {

enum class Format { csv, jsonl, txt };

std::optional<Format> parse_format(std::string_view name);
const char* to_string(Format format);

struct ReadOptions {
    Format format = Format::txt;
    std::string text_field = "text";  // csv column / jsonl key holding the text
    std::string id_field = "id";      // optional; row number otherwise
};

struct IngestError {
    std::size_t line = 0;  // 1-based line where the record starts
    std::string message;
};

// a parsed record plus whatever the output writer needs to re-emit it
struct WorkItem {
    Record record;
    std::size_t line = 0;
    std::vector<std::string> csv_fields;
    std::size_t text_column = 0;
    nlohmann::ordered_json json;
};

// Streaming reader over csv / jsonl / txt.  Bad records come back as error
// items with line numbers; reading continues past them.
class Reader {
  public:
    Reader(std::istream& in, const ReadOptions& opts);

    struct Item {
        bool ok = false;
        WorkItem work;
        IngestError error;
    };

    std::optional<Item> next();  // nullopt at end of input

    const std::vector<std::string>& csv_header() const { return header_; }

  private:
    std::optional<Item> next_csv();
    std::optional<Item> next_jsonl();
    std::optional<Item> next_txt();

    std::istream& in_;
    ReadOptions opts_;
    std::vector<std::string> header_;
    bool header_done_ = false;
    bool csv_fatal_ = false;
    std::size_t line_ = 0;  // lines fully consumed so far
    std::size_t row_ = 0;   // data records seen, for generated ids
    std::ptrdiff_t text_col_ = -1;
    std::ptrdiff_t id_col_ = -1;
};

// RFC-4180-style escaping: quotes a field when it contains comma, quote, or
// a line break
std::string csv_escape(std::string_view field);
std::string render_csv_header(const std::vector<std::string>& header);

// serialize one record, with its text replaced, in its original format
std::string render_record(const WorkItem& item, const ReadOptions& opts,
                          std::u32string_view text);

// 0-based group for a codepoint length under ascending bounds
std::size_t assign_group(std::size_t codepoints,
                         const std::array<std::size_t, 3>& bounds);

struct PipelineConfig {
    ReadOptions read;
    int workers = 1;
    int depth = 1;
    std::size_t top_n = 40;
    std::array<std::size_t, 3> group_bounds{71, 141, 211};
    bool do_repair = true;
    std::optional<repair::TranscodeChain> pinned_chain;
    bool infer_chain = false;       // pre-pass chain inference over a sample
    std::size_t infer_sample = 200;
    detect::DetectorConfig detector;
};

struct PipelineResult {
    nlohmann::ordered_json report;
    std::size_t failed_records = 0;
    emoji::FrequencyTable frequency;
};

// Streams records from `in`; writes the repaired corpus to `out` (optional)
// and per-record ingest errors to `log` (optional).  Deterministic for any
// worker count: chunks are merged in input order.
PipelineResult run_pipeline(std::istream& in, std::ostream* out,
                            std::ostream* log, const PipelineConfig& cfg);

// full frequency table as "name,count" rows, most frequent first
void write_frequency_csv(std::ostream& out, const emoji::FrequencyTable& table);

}  // namespace demoji::pipeline
