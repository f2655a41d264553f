// demojibake: detect and repair mojibake in text corpora, with tooling to
// analyze readability, forge test corpora, and inspect the codec registry.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "demoji/codecs.hpp"
#include "demoji/detect.hpp"
#include "demoji/forge.hpp"
#include "demoji/pipeline.hpp"
#include "demoji/readability.hpp"
#include "demoji/repair.hpp"
#include "demoji/utf.hpp"

namespace {

struct Options {
    std::string input;
    std::string format = "txt";
    std::string text_field = "text";
    std::string id_field = "id";
    std::string out_path;
    std::string report_path;
    std::string freq_path;
    std::string chain;
    std::string config_path;
    std::string group_bounds = "71,141,211";
    std::string policy = "strict";
    bool infer_chain = false;
    int workers = 1;
    int depth = 1;
    std::size_t top_n = 40;
    double rate = 1.0;
    std::uint64_t seed = 42;
    demoji::detect::DetectorConfig detector;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// config file: one "key = value" per line, '#' comments
bool load_config(const std::string& path, Options& opt, std::string& err) {
    std::ifstream in(path);
    if (!in) {
        err = "cannot open config file: " + path;
        return false;
    }
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            err = path + ":" + std::to_string(line_no) + ": expected key = value";
            return false;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (demoji::detect::set_option(opt.detector, key, value)) continue;
        try {
            if (key == "chain") opt.chain = value;
            else if (key == "format") opt.format = value;
            else if (key == "text_field") opt.text_field = value;
            else if (key == "id_field") opt.id_field = value;
            else if (key == "depth") opt.depth = std::stoi(value);
            else if (key == "workers") opt.workers = std::stoi(value);
            else if (key == "top_n") opt.top_n = static_cast<std::size_t>(std::stoul(value));
            else if (key == "group_bounds") opt.group_bounds = value;
            else if (key == "rate") opt.rate = std::stod(value);
            else if (key == "seed") opt.seed = std::stoull(value);
            else {
                err = path + ":" + std::to_string(line_no) + ": unknown key '" + key + "'";
                return false;
            }
        } catch (const std::exception&) {
            err = path + ":" + std::to_string(line_no) + ": bad value for '" + key + "'";
            return false;
        }
    }
    return true;
}

bool parse_bounds(const std::string& s, std::array<std::size_t, 3>& bounds,
                  std::string& err) {
    std::array<std::size_t, 3> out{};
    std::istringstream in(s);
    std::string part;
    std::size_t i = 0;
    while (std::getline(in, part, ',')) {
        if (i >= 3) {
            err = "group bounds need exactly three values";
            return false;
        }
        try {
            out[i++] = static_cast<std::size_t>(std::stoul(trim(part)));
        } catch (const std::exception&) {
            err = "bad group bound: " + part;
            return false;
        }
    }
    if (i != 3 || out[0] >= out[1] || out[1] >= out[2]) {
        err = "group bounds must be three ascending values";
        return false;
    }
    bounds = out;
    return true;
}

int run_pipeline_command(const Options& opt, bool do_repair) {
    demoji::pipeline::PipelineConfig cfg;
    const auto format = demoji::pipeline::parse_format(opt.format);
    if (!format) {
        std::cerr << "error: unknown format '" << opt.format << "'\n";
        return 1;
    }
    cfg.read.format = *format;
    cfg.read.text_field = opt.text_field;
    cfg.read.id_field = opt.id_field;
    cfg.workers = opt.workers;
    cfg.depth = opt.depth;
    cfg.top_n = opt.top_n;
    cfg.do_repair = do_repair;
    cfg.infer_chain = opt.infer_chain;
    cfg.detector = opt.detector;
    std::string err;
    if (!parse_bounds(opt.group_bounds, cfg.group_bounds, err)) {
        std::cerr << "error: " << err << "\n";
        return 1;
    }
    if (!opt.chain.empty()) {
        auto chain = demoji::repair::parse_chain(opt.chain);
        if (!chain) {
            std::cerr << "error: bad chain '" << opt.chain
                      << "' (want FILE->SOURCE over supported codecs)\n";
            return 1;
        }
        cfg.pinned_chain = *chain;
    }

    std::ifstream file_in;
    std::istream* in = &std::cin;
    if (opt.input != "-") {
        file_in.open(opt.input, std::ios::binary);
        if (!file_in) {
            std::cerr << "error: cannot open input: " << opt.input << "\n";
            return 1;
        }
        in = &file_in;
    }
    std::ofstream file_out;
    std::ostream* out = nullptr;
    const bool out_is_stdout = opt.out_path == "-";
    if (out_is_stdout) {
        out = &std::cout;
    } else if (!opt.out_path.empty()) {
        file_out.open(opt.out_path, std::ios::binary);
        if (!file_out) {
            std::cerr << "error: cannot open output: " << opt.out_path << "\n";
            return 1;
        }
        out = &file_out;
    }

    auto result = demoji::pipeline::run_pipeline(*in, out, &std::cerr, cfg);

    if (!opt.report_path.empty()) {
        std::ofstream rep(opt.report_path, std::ios::binary);
        if (!rep) {
            std::cerr << "error: cannot open report path: " << opt.report_path << "\n";
            return 1;
        }
        rep << result.report.dump(2) << "\n";
    } else if (!out_is_stdout) {
        std::cout << result.report.dump(2) << "\n";
    }
    if (!opt.freq_path.empty()) {
        std::ofstream freq(opt.freq_path, std::ios::binary);
        if (!freq) {
            std::cerr << "error: cannot open frequency path: " << opt.freq_path << "\n";
            return 1;
        }
        demoji::pipeline::write_frequency_csv(freq, result.frequency);
    }
    return result.failed_records > 0 ? 2 : 0;
}

int run_forge(const Options& opt) {
    const auto format = demoji::pipeline::parse_format(opt.format);
    if (!format) {
        std::cerr << "error: unknown format '" << opt.format << "'\n";
        return 1;
    }
    auto chain = demoji::repair::parse_chain(opt.chain);
    if (!chain) {
        std::cerr << "error: forge needs --chain FILE->SOURCE over supported codecs\n";
        return 1;
    }
    demoji::forge::CorruptionSpec spec;
    spec.chain = *chain;
    if (opt.policy == "strict") {
        spec.policy = demoji::codecs::ErrorPolicy::strict;
    } else if (opt.policy == "replace") {
        spec.policy = demoji::codecs::ErrorPolicy::replace;
    } else {
        std::cerr << "error: policy must be strict or replace\n";
        return 1;
    }

    std::ifstream file_in;
    std::istream* in = &std::cin;
    if (opt.input != "-") {
        file_in.open(opt.input, std::ios::binary);
        if (!file_in) {
            std::cerr << "error: cannot open input: " << opt.input << "\n";
            return 1;
        }
        in = &file_in;
    }
    std::ofstream file_out;
    std::ostream* out = &std::cout;
    if (!opt.out_path.empty() && opt.out_path != "-") {
        file_out.open(opt.out_path, std::ios::binary);
        if (!file_out) {
            std::cerr << "error: cannot open output: " << opt.out_path << "\n";
            return 1;
        }
        out = &file_out;
    }
    std::ofstream manifest;
    if (!opt.report_path.empty()) {
        manifest.open(opt.report_path, std::ios::binary);
        if (!manifest) {
            std::cerr << "error: cannot open manifest path: " << opt.report_path << "\n";
            return 1;
        }
        manifest << "id,chain,outcome\n";
    }

    demoji::pipeline::ReadOptions read;
    read.format = *format;
    read.text_field = opt.text_field;
    read.id_field = opt.id_field;
    demoji::pipeline::Reader reader(*in, read);
    const std::string chain_name = demoji::repair::to_string(spec.chain);
    std::size_t failed = 0;
    bool wrote_header = false;
    while (auto item = reader.next()) {
        if (!item->ok) {
            std::cerr << "line " << item->error.line << ": " << item->error.message
                      << "\n";
            ++failed;
            continue;
        }
        if (*format == demoji::pipeline::Format::csv && !wrote_header) {
            *out << demoji::pipeline::render_csv_header(reader.csv_header()) << '\n';
            wrote_header = true;
        }
        const auto& text = item->work.record.text;
        auto outcome = demoji::forge::ForgeOutcome::unchanged;
        std::u32string forged = text;
        if (demoji::forge::forge_pick(opt.seed, item->work.record.id, opt.rate)) {
            if (spec.policy == demoji::codecs::ErrorPolicy::strict &&
                !demoji::forge::is_lossless(text, spec.chain)) {
                outcome = demoji::forge::ForgeOutcome::skipped;
            } else if (auto corrupted = demoji::forge::corrupt(text, spec)) {
                // fixed points (pure ascii under an ascii-clean chain) are
                // reported honestly rather than as corruptions
                if (*corrupted != forged) {
                    forged = std::move(*corrupted);
                    outcome = spec.policy == demoji::codecs::ErrorPolicy::strict
                                  ? demoji::forge::ForgeOutcome::corrupted
                                  : demoji::forge::ForgeOutcome::lossy;
                }
            } else {
                outcome = demoji::forge::ForgeOutcome::skipped;
            }
        }
        *out << demoji::pipeline::render_record(item->work, read, forged) << '\n';
        if (manifest.is_open())
            manifest << demoji::pipeline::csv_escape(item->work.record.id) << ','
                     << chain_name << ',' << demoji::forge::to_string(outcome) << '\n';
    }
    return failed > 0 ? 2 : 0;
}

int run_codecs(bool unsupported) {
    if (unsupported) {
        for (const auto& name : demoji::codecs::unsupported_codecs())
            std::cout << name << '\n';
        return 0;
    }
    for (const auto& name : demoji::codecs::list_codecs()) {
        const auto* codec = demoji::codecs::find(name);
        const char* kind = "";
        switch (demoji::codecs::kind(*codec)) {
            case demoji::codecs::Kind::single_byte: kind = "single-byte"; break;
            case demoji::codecs::Kind::utf_family: kind = "utf"; break;
            case demoji::codecs::Kind::multi_byte: kind = "multi-byte"; break;
        }
        std::cout << name << '\t' << kind
                  << (demoji::codecs::ascii_clean(*codec) ? "" : "\tgarbles-ascii")
                  << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mojibake detection and repair for text corpora"};
    app.require_subcommand(1);

    Options opt;

    auto add_io = [&](CLI::App* cmd, bool with_out) {
        cmd->add_option("input", opt.input, "input file, or - for stdin")->required();
        cmd->add_option("--format", opt.format, "csv, jsonl, or txt");
        cmd->add_option("--text-field", opt.text_field, "csv column / jsonl key with the text");
        cmd->add_option("--id-field", opt.id_field, "csv column / jsonl key with the id");
        cmd->add_option("--config", opt.config_path, "key = value config file");
        if (with_out) cmd->add_option("--out", opt.out_path, "write the processed corpus here (- for stdout)");
    };

    auto* repair_cmd = app.add_subcommand("repair", "detect and repair garbled records");
    add_io(repair_cmd, true);
    repair_cmd->add_option("--chain", opt.chain, "pin one FILE->SOURCE transcode chain");
    repair_cmd->add_flag("--infer-chain", opt.infer_chain, "infer the corpus chain from a sample");
    repair_cmd->add_option("--report", opt.report_path, "write the JSON report here");
    repair_cmd->add_option("--freq", opt.freq_path, "write the full emoji frequency CSV here");
    repair_cmd->add_option("--workers", opt.workers, "worker threads")->check(CLI::Range(1, 256));
    repair_cmd->add_option("--depth", opt.depth, "repair passes")->check(CLI::Range(1, 4));
    repair_cmd->add_option("--group-bounds", opt.group_bounds, "length-group bounds, e.g. 71,141,211");
    repair_cmd->add_option("--top-n", opt.top_n, "frequency entries in the report");
    repair_cmd->add_option("--threshold", opt.detector.threshold, "suspicion threshold");

    auto* analyze_cmd = app.add_subcommand("analyze", "metrics and emoji frequency, no repair");
    add_io(analyze_cmd, false);
    analyze_cmd->add_option("--report", opt.report_path, "write the JSON report here");
    analyze_cmd->add_option("--freq", opt.freq_path, "write the full emoji frequency CSV here");
    analyze_cmd->add_option("--workers", opt.workers, "worker threads")->check(CLI::Range(1, 256));
    analyze_cmd->add_option("--group-bounds", opt.group_bounds, "length-group bounds");
    analyze_cmd->add_option("--top-n", opt.top_n, "frequency entries in the report");
    analyze_cmd->add_option("--threshold", opt.detector.threshold, "suspicion threshold");

    auto* forge_cmd = app.add_subcommand("forge", "manufacture mojibake with a known chain");
    add_io(forge_cmd, true);
    forge_cmd->add_option("--chain", opt.chain, "FILE->SOURCE chain to corrupt with")->required();
    forge_cmd->add_option("--rate", opt.rate, "fraction of records to corrupt");
    forge_cmd->add_option("--seed", opt.seed, "seed for the per-record coin");
    forge_cmd->add_option("--policy", opt.policy, "strict or replace");
    forge_cmd->add_option("--manifest", opt.report_path, "write the id,chain,outcome manifest here");

    auto* codecs_cmd = app.add_subcommand("codecs", "print the codec registry");
    bool unsupported = false;
    codecs_cmd->add_flag("--unsupported", unsupported, "list recognized but unsupported codecs");

    CLI11_PARSE(app, argc, argv);

    // config file first, explicit flags win
    if (!opt.config_path.empty()) {
        Options file_opt;
        std::string err;
        if (!load_config(opt.config_path, file_opt, err)) {
            std::cerr << "error: " << err << "\n";
            return 1;
        }
        CLI::App* active = app.get_subcommands().front();
        auto keep_if_set = [&](const char* flag, auto& cli_value, auto& file_value) {
            auto* o = active->get_option_no_throw(flag);
            if (!o || o->count() == 0) cli_value = file_value;
        };
        keep_if_set("--format", opt.format, file_opt.format);
        keep_if_set("--text-field", opt.text_field, file_opt.text_field);
        keep_if_set("--id-field", opt.id_field, file_opt.id_field);
        keep_if_set("--chain", opt.chain, file_opt.chain);
        keep_if_set("--workers", opt.workers, file_opt.workers);
        keep_if_set("--depth", opt.depth, file_opt.depth);
        keep_if_set("--group-bounds", opt.group_bounds, file_opt.group_bounds);
        keep_if_set("--top-n", opt.top_n, file_opt.top_n);
        keep_if_set("--rate", opt.rate, file_opt.rate);
        keep_if_set("--seed", opt.seed, file_opt.seed);
        auto* thr = active->get_option_no_throw("--threshold");
        if (!thr || thr->count() == 0) opt.detector = file_opt.detector;
        else {
            const double keep = opt.detector.threshold;
            opt.detector = file_opt.detector;
            opt.detector.threshold = keep;
        }
    }

    if (repair_cmd->parsed()) return run_pipeline_command(opt, true);
    if (analyze_cmd->parsed()) return run_pipeline_command(opt, false);
    if (forge_cmd->parsed()) return run_forge(opt);
    if (codecs_cmd->parsed()) return run_codecs(unsupported);
    return 1;
}
