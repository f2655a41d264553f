#include "demoji/pipeline.hpp"

#include <algorithm>
#include <condition_variable>
#include <deque>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

#include "demoji/readability.hpp"
#include "demoji/utf.hpp"

namespace demoji::pipeline {

namespace {

constexpr std::size_t kChunkSize = 256;

// Reads one raw CSV record, which may span physical lines inside quotes.
// Returns false at end of input; a malformed record sets err and consumes
// through the end of its line so reading can continue.
bool read_csv_fields(std::istream& in, std::vector<std::string>& fields,
                     std::size_t& lines_consumed, std::string& err) {
    fields.clear();
    err.clear();
    lines_consumed = 0;
    int c = in.get();
    if (c == std::istream::traits_type::eof()) return false;

    std::string field;
    bool in_quotes = false;
    bool field_quoted = false;  // the current field started with a quote
    bool after_quote = false;   // just closed a quoted field

    auto end_field = [&] {
        fields.push_back(std::move(field));
        field.clear();
        field_quoted = false;
        after_quote = false;
    };
    auto skip_line = [&] {  // error recovery: drop the rest of the line
        while (c != std::istream::traits_type::eof()) {
            if (c == '\n') {
                ++lines_consumed;
                return;
            }
            c = in.get();
        }
        ++lines_consumed;
    };

    for (;;) {
        if (c == std::istream::traits_type::eof()) {
            if (in_quotes) {
                err = "unterminated quoted field";
                ++lines_consumed;
                return true;
            }
            end_field();
            ++lines_consumed;
            return true;
        }
        const char ch = static_cast<char>(c);
        if (in_quotes) {
            if (ch == '"') {
                if (in.peek() == '"') {
                    in.get();
                    field.push_back('"');
                } else {
                    in_quotes = false;
                    after_quote = true;
                }
            } else {
                if (ch == '\n') ++lines_consumed;
                field.push_back(ch);
            }
        } else if (ch == ',') {
            end_field();
        } else if (ch == '\n') {
            end_field();
            ++lines_consumed;
            return true;
        } else if (ch == '\r') {
            if (in.peek() == '\n') in.get();
            end_field();
            ++lines_consumed;
            return true;
        } else if (after_quote) {
            err = "unexpected character after closing quote";
            skip_line();
            return true;
        } else if (ch == '"' && field.empty() && !field_quoted) {
            in_quotes = true;
            field_quoted = true;
        } else {
            field.push_back(ch);
        }
        c = in.get();
    }
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
    if (name == "csv") return Format::csv;
    if (name == "jsonl") return Format::jsonl;
    if (name == "txt") return Format::txt;
    return std::nullopt;
}

const char* to_string(Format format) {
    switch (format) {
        case Format::csv: return "csv";
        case Format::jsonl: return "jsonl";
        case Format::txt: return "txt";
    }
    return "txt";
}

Reader::Reader(std::istream& in, const ReadOptions& opts) : in_(in), opts_(opts) {}

std::optional<Reader::Item> Reader::next() {
    switch (opts_.format) {
        case Format::csv: return next_csv();
        case Format::jsonl: return next_jsonl();
        case Format::txt: return next_txt();
    }
    return std::nullopt;
}

std::optional<Reader::Item> Reader::next_csv() {
    if (csv_fatal_) return std::nullopt;
    std::vector<std::string> fields;
    std::size_t consumed = 0;
    std::string err;
    if (!header_done_) {
        if (!read_csv_fields(in_, fields, consumed, err)) return std::nullopt;
        const std::size_t start = line_ + 1;
        line_ += consumed;
        header_done_ = true;
        if (!err.empty()) {
            csv_fatal_ = true;
            return Item{false, {}, {start, "header: " + err}};
        }
        header_ = fields;
        for (std::size_t i = 0; i < header_.size(); ++i) {
            if (header_[i] == opts_.text_field) text_col_ = static_cast<std::ptrdiff_t>(i);
            if (header_[i] == opts_.id_field) id_col_ = static_cast<std::ptrdiff_t>(i);
        }
        if (text_col_ < 0) {
            csv_fatal_ = true;
            return Item{false, {}, {start, "header has no '" + opts_.text_field + "' column"}};
        }
    }
    for (;;) {
        if (!read_csv_fields(in_, fields, consumed, err)) return std::nullopt;
        const std::size_t start = line_ + 1;
        line_ += consumed;
        if (!err.empty()) return Item{false, {}, {start, err}};
        if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
        if (fields.size() != header_.size())
            return Item{false, {},
                        {start, "expected " + std::to_string(header_.size()) +
                                    " fields, got " + std::to_string(fields.size())}};
        ++row_;
        Item item;
        item.ok = true;
        item.work.line = start;
        item.work.text_column = static_cast<std::size_t>(text_col_);
        item.work.record.id = id_col_ >= 0 && !fields[static_cast<std::size_t>(id_col_)].empty()
                                  ? fields[static_cast<std::size_t>(id_col_)]
                                  : "R" + std::to_string(row_);
        item.work.record.text =
            utf::from_utf8_lossy(fields[static_cast<std::size_t>(text_col_)]);
        item.work.csv_fields = std::move(fields);
        return item;
    }
}

std::optional<Reader::Item> Reader::next_jsonl() {
    std::string line;
    for (;;) {
        if (!std::getline(in_, line)) return std::nullopt;
        ++line_;
        line = strip_cr(line);
        if (!line.empty()) break;
    }
    const std::size_t start = line_;
    auto parsed = nlohmann::ordered_json::parse(line, nullptr, false);
    if (parsed.is_discarded()) return Item{false, {}, {start, "invalid JSON"}};
    if (!parsed.is_object()) return Item{false, {}, {start, "not a JSON object"}};
    auto text_it = parsed.find(opts_.text_field);
    if (text_it == parsed.end())
        return Item{false, {}, {start, "missing field '" + opts_.text_field + "'"}};
    if (!text_it->is_string())
        return Item{false, {}, {start, "field '" + opts_.text_field + "' is not a string"}};
    ++row_;
    Item item;
    item.ok = true;
    item.work.line = start;
    auto id_it = parsed.find(opts_.id_field);
    if (id_it != parsed.end() && id_it->is_string())
        item.work.record.id = id_it->get<std::string>();
    else if (id_it != parsed.end() && id_it->is_number())
        item.work.record.id = id_it->dump();
    else
        item.work.record.id = "R" + std::to_string(row_);
    item.work.record.text = utf::from_utf8_lossy(text_it->get<std::string>());
    item.work.json = std::move(parsed);
    return item;
}

std::optional<Reader::Item> Reader::next_txt() {
    std::string line;
    if (!std::getline(in_, line)) return std::nullopt;
    ++line_;
    ++row_;
    Item item;
    item.ok = true;
    item.work.line = line_;
    item.work.record.id = "R" + std::to_string(row_);
    item.work.record.text = utf::from_utf8_lossy(strip_cr(std::move(line)));
    return item;
}

std::string csv_escape(std::string_view field) {
    const bool needs_quotes =
        field.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs_quotes) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string render_csv_header(const std::vector<std::string>& header) {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out.push_back(',');
        out += csv_escape(header[i]);
    }
    return out;
}

std::string render_record(const WorkItem& item, const ReadOptions& opts,
                          std::u32string_view text) {
    switch (opts.format) {
        case Format::csv: {
            std::string out;
            for (std::size_t i = 0; i < item.csv_fields.size(); ++i) {
                if (i) out.push_back(',');
                out += csv_escape(i == item.text_column ? utf::to_utf8(text)
                                                        : item.csv_fields[i]);
            }
            return out;
        }
        case Format::jsonl: {
            nlohmann::ordered_json j = item.json;
            j[opts.text_field] = utf::to_utf8(text);
            return j.dump();
        }
        case Format::txt:
            return utf::to_utf8(text);
    }
    return {};
}

std::size_t assign_group(std::size_t codepoints,
                         const std::array<std::size_t, 3>& bounds) {
    if (codepoints < bounds[0]) return 0;
    if (codepoints < bounds[1]) return 1;
    if (codepoints < bounds[2]) return 2;
    return 3;
}

namespace {

struct MetricSums {
    double fre = 0, fkg = 0, cli = 0, ari = 0, dc = 0;
    double reading_time = 0;
    std::size_t scored = 0;

    void add(const readability::Report& r) {
        reading_time += r.reading_time;
        if (r.flesch_reading_ease) {
            fre += *r.flesch_reading_ease;
            fkg += *r.flesch_kincaid_grade;
            cli += *r.coleman_liau_index;
            ari += *r.automated_readability_index;
            dc += *r.dale_chall;
            ++scored;
        }
    }
    void merge(const MetricSums& o) {
        fre += o.fre;
        fkg += o.fkg;
        cli += o.cli;
        ari += o.ari;
        dc += o.dc;
        reading_time += o.reading_time;
        scored += o.scored;
    }
};

struct GroupAgg {
    std::size_t records = 0;
    MetricSums before, after;

    void merge(const GroupAgg& o) {
        records += o.records;
        before.merge(o.before);
        after.merge(o.after);
    }
};

struct Agg {
    std::array<GroupAgg, 4> groups{};
    std::size_t records = 0;
    std::size_t with_gibberish = 0;
    std::size_t repaired_spans = 0;
    std::size_t unrepaired_spans = 0;
    std::uint64_t emojis_recovered = 0;
    emoji::FrequencyTable freq;

    void merge(const Agg& o) {
        for (std::size_t i = 0; i < groups.size(); ++i) groups[i].merge(o.groups[i]);
        records += o.records;
        with_gibberish += o.with_gibberish;
        repaired_spans += o.repaired_spans;
        unrepaired_spans += o.unrepaired_spans;
        emojis_recovered += o.emojis_recovered;
        freq.merge(o.freq);
    }
};

struct Chunk {
    std::size_t index = 0;
    std::vector<WorkItem> items;
};

struct ChunkOut {
    std::string lines;
    Agg agg;
};

ChunkOut process_chunk(const std::vector<WorkItem>& items,
                       const PipelineConfig& cfg,
                       const repair::ChainSet* chains, bool want_output) {
    ChunkOut out;
    for (const auto& item : items) {
        const std::u32string& input = item.record.text;
        const readability::Report before = readability::report(input);

        std::u32string repaired_text;
        const std::u32string* final_text = &input;
        std::size_t repaired = 0, unrepaired = 0;
        std::uint64_t recovered = 0;
        bool had_spans = false;
        if (cfg.do_repair && chains && !chains->empty()) {
            auto res = repair::repair_text(input, *chains, cfg.detector, cfg.depth);
            repaired = res.repairs.size();
            unrepaired = res.unrepaired_spans;
            had_spans = repaired > 0 || unrepaired > 0;
            for (const auto& r : res.repairs)
                recovered += static_cast<std::uint64_t>(std::max(0, r.emoji_gain));
            repaired_text = std::move(res.text);
            final_text = &repaired_text;
        } else {
            had_spans = !detect::detect_spans(input, cfg.detector).empty();
        }
        const readability::Report after =
            cfg.do_repair ? readability::report(*final_text) : before;

        const std::size_t g = assign_group(final_text->size(), cfg.group_bounds);
        auto& group = out.agg.groups[g];
        ++group.records;
        group.before.add(before);
        group.after.add(after);

        ++out.agg.records;
        if (had_spans) ++out.agg.with_gibberish;
        out.agg.repaired_spans += repaired;
        out.agg.unrepaired_spans += unrepaired;
        out.agg.emojis_recovered += recovered;
        for (const auto& occ : emoji::extract_emojis(*final_text))
            out.agg.freq.add(occ.shortname);

        if (want_output) {
            out.lines += render_record(item, cfg.read, *final_text);
            out.lines.push_back('\n');
        }
    }
    return out;
}

nlohmann::ordered_json metrics_json(const MetricSums& ms, std::size_t records) {
    nlohmann::ordered_json j;
    auto mean = [&](double sum) {
        return ms.scored ? nlohmann::ordered_json(sum / static_cast<double>(ms.scored))
                         : nlohmann::ordered_json(nullptr);
    };
    j["scored_records"] = ms.scored;
    j["flesch_reading_ease"] = mean(ms.fre);
    j["flesch_kincaid_grade"] = mean(ms.fkg);
    j["coleman_liau_index"] = mean(ms.cli);
    j["automated_readability_index"] = mean(ms.ari);
    j["dale_chall"] = mean(ms.dc);
    j["reading_time"] = records
                            ? nlohmann::ordered_json(ms.reading_time /
                                                     static_cast<double>(records))
                            : nlohmann::ordered_json(nullptr);
    return j;
}

}  // namespace

PipelineResult run_pipeline(std::istream& in, std::ostream* out,
                            std::ostream* log, const PipelineConfig& cfg) {
    Reader reader(in, cfg.read);
    PipelineResult result;

    // chain selection; inference buffers a sample of the input first
    repair::ChainSet chains;
    std::optional<repair::TranscodeChain> chain_used;
    std::deque<Reader::Item> pending;
    if (cfg.do_repair) {
        if (cfg.pinned_chain) {
            chains = repair::ChainSet::resolve({*cfg.pinned_chain});
            if (!chains.empty()) chain_used = chains.rows().front().chain;
        } else {
            auto everything = repair::ChainSet::resolve(repair::default_chains());
            if (cfg.infer_chain) {
                std::vector<std::u32string> sample;
                while (sample.size() < cfg.infer_sample) {
                    auto item = reader.next();
                    if (!item) break;
                    if (item->ok) sample.push_back(item->work.record.text);
                    pending.push_back(std::move(*item));
                }
                auto found =
                    repair::infer_corpus_chain(sample, everything, cfg.detector);
                if (found) {
                    chain_used = found;
                    chains = repair::ChainSet::resolve({*found});
                } else {
                    chains = std::move(everything);
                }
            } else {
                chains = std::move(everything);
            }
        }
    }

    auto next_item = [&]() -> std::optional<Reader::Item> {
        if (!pending.empty()) {
            auto item = std::move(pending.front());
            pending.pop_front();
            return item;
        }
        return reader.next();
    };

    const bool csv_out = out && cfg.read.format == Format::csv;
    bool header_written = false;
    auto write_csv_header_once = [&] {
        if (csv_out && !header_written) {
            *out << render_csv_header(reader.csv_header()) << '\n';
            header_written = true;
        }
    };

    Agg total;
    const int workers = std::max(1, cfg.workers);

    if (workers == 1) {
        Chunk chunk;
        auto flush = [&] {
            if (chunk.items.empty()) return;
            ChunkOut co = process_chunk(chunk.items, cfg, &chains, out != nullptr);
            write_csv_header_once();
            if (out) *out << co.lines;
            total.merge(co.agg);
            chunk.items.clear();
        };
        while (auto item = next_item()) {
            if (!item->ok) {
                if (log)
                    *log << "line " << item->error.line << ": " << item->error.message
                         << '\n';
                ++result.failed_records;
                continue;
            }
            chunk.items.push_back(std::move(item->work));
            if (chunk.items.size() >= kChunkSize) flush();
        }
        flush();
    } else {
        std::mutex m;
        std::condition_variable cv_work, cv_space, cv_done;
        std::deque<Chunk> queue;
        std::map<std::size_t, ChunkOut> done;
        bool eof = false;
        const std::size_t max_queue = static_cast<std::size_t>(workers) * 4;

        auto worker_fn = [&] {
            for (;;) {
                Chunk chunk;
                {
                    std::unique_lock lock(m);
                    cv_work.wait(lock, [&] { return eof || !queue.empty(); });
                    if (queue.empty()) return;
                    chunk = std::move(queue.front());
                    queue.pop_front();
                }
                cv_space.notify_one();
                ChunkOut co = process_chunk(chunk.items, cfg, &chains, out != nullptr);
                {
                    std::lock_guard lock(m);
                    done[chunk.index] = std::move(co);
                }
                cv_done.notify_all();
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker_fn);

        std::size_t next_index = 0;
        std::size_t next_write = 0;
        auto drain_ready = [&] {
            // merge finished chunks strictly in input order
            for (;;) {
                ChunkOut co;
                {
                    std::lock_guard lock(m);
                    auto it = done.find(next_write);
                    if (it == done.end()) return;
                    co = std::move(it->second);
                    done.erase(it);
                }
                write_csv_header_once();
                if (out) *out << co.lines;
                total.merge(co.agg);
                ++next_write;
            }
        };

        Chunk chunk;
        auto enqueue = [&] {
            if (chunk.items.empty()) return;
            chunk.index = next_index++;
            {
                std::unique_lock lock(m);
                cv_space.wait(lock, [&] { return queue.size() < max_queue; });
                queue.push_back(std::move(chunk));
            }
            cv_work.notify_one();
            chunk = Chunk{};
            drain_ready();
        };
        while (auto item = next_item()) {
            if (!item->ok) {
                if (log)
                    *log << "line " << item->error.line << ": " << item->error.message
                         << '\n';
                ++result.failed_records;
                continue;
            }
            chunk.items.push_back(std::move(item->work));
            if (chunk.items.size() >= kChunkSize) enqueue();
        }
        enqueue();
        {
            std::lock_guard lock(m);
            eof = true;
        }
        cv_work.notify_all();
        for (auto& t : pool) t.join();
        drain_ready();
    }

    // a csv input with no data rows still deserves its header back
    if (csv_out && !reader.csv_header().empty()) write_csv_header_once();

    nlohmann::ordered_json report;
    {
        nlohmann::ordered_json counts;
        counts["records"] = total.records;
        counts["failed_records"] = result.failed_records;
        counts["records_with_gibberish"] = total.with_gibberish;
        counts["repaired_spans"] = total.repaired_spans;
        counts["unrepaired_spans"] = total.unrepaired_spans;
        counts["emojis_recovered"] = total.emojis_recovered;
        report["counts"] = std::move(counts);
    }
    {
        nlohmann::ordered_json groups;
        for (std::size_t i = 0; i < total.groups.size(); ++i) {
            nlohmann::ordered_json g;
            g["records"] = total.groups[i].records;
            g["before"] = metrics_json(total.groups[i].before, total.groups[i].records);
            g["after"] = metrics_json(total.groups[i].after, total.groups[i].records);
            groups["G" + std::to_string(i + 1)] = std::move(g);
        }
        report["groups"] = std::move(groups);
    }
    {
        nlohmann::ordered_json freq = nlohmann::ordered_json::array();
        const auto rows = total.freq.entries();
        for (std::size_t i = 0; i < rows.size() && i < cfg.top_n; ++i) {
            nlohmann::ordered_json row;
            row["name"] = rows[i].first;
            row["count"] = rows[i].second;
            freq.push_back(std::move(row));
        }
        report["frequency_top"] = std::move(freq);
    }
    report["chain"] = chain_used ? nlohmann::ordered_json(repair::to_string(*chain_used))
                                 : nlohmann::ordered_json(nullptr);

    result.report = std::move(report);
    result.frequency = std::move(total.freq);
    return result;
}

void write_frequency_csv(std::ostream& out, const emoji::FrequencyTable& table) {
    out << "name,count\n";
    for (const auto& [name, count] : table.entries())
        out << csv_escape(name) << ',' << count << '\n';
}

}  // namespace demoji::pipeline
