// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <vector>

#include "sus/every_query.hpp"
#include "sus/index_io.hpp"
#include "sus/oracle.hpp"
#include "sus/single_query.hpp"
#include "sus/suffix_structures.hpp"

namespace sus::cli {
namespace {

class OutOfRange : public Error {
public:
    using Error::Error;
};

std::string read_input(const RunConfig& config, std::istream& in) {
    std::string text;
    if (config.input == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        if (in.bad()) throw IoError("failed to read standard input");
    } else {
        std::ifstream file(config.input, std::ios::binary);
        if (!file) throw IoError("cannot open '" + config.input + "'");
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
        if (file.bad()) throw IoError("failed to read '" + config.input + "'");
    }
    if (config.strip_trailing_newline && !text.empty() && text.back() == '\n') {
        text.pop_back();
        if (!text.empty() && text.back() == '\r') text.pop_back();
    }
    if (text.empty()) throw IoError("input is empty");
    return text;
}

SuffixContext load_context(const RunConfig& config, std::string text) {
    if (config.index_in) return read_index_file(*config.index_in, std::move(text));
    return SuffixContext::build(std::move(text));
}

// Buffered TSV writer; formatting millions of rows through operator<< is slow.
class RowWriter {
public:
    RowWriter(std::ostream& out, std::string_view text, bool show_text)
        : out_(out), text_(text), show_text_(show_text) {
        buf_.reserve(kFlushAt + 256);
    }
    ~RowWriter() { flush(); }

    void header() {
        buf_ += show_text_ ? "position\tstart\tlength\ttext\n" : "position\tstart\tlength\n";
    }

    void row(Index k, const Interval& iv) {
        append_number(k);
        buf_ += '\t';
        append_number(iv.start);
        buf_ += '\t';
        append_number(iv.length);
        if (show_text_) {
            buf_ += '\t';
            buf_.append(text_.substr(iv.start - 1, iv.length));
        }
        buf_ += '\n';
        if (buf_.size() >= kFlushAt) flush();
    }

    void flush() {
        out_.write(buf_.data(), static_cast<std::streamsize>(buf_.size()));
        buf_.clear();
    }

private:
    static constexpr std::size_t kFlushAt = 1 << 16;

    void append_number(Index v) {
        char tmp[16];
        const auto res = std::to_chars(tmp, tmp + sizeof tmp, v);
        buf_.append(tmp, res.ptr);
    }

    std::ostream& out_;
    std::string_view text_;
    bool show_text_;
    std::string buf_;
};

Index checked_position(const RunConfig& config, Index n) {
    const long long k = config.position.value_or(0);
    if (k < 1 || static_cast<unsigned long long>(k) > n) {
        throw OutOfRange("position " + std::to_string(k) + " is outside [1, " + std::to_string(n) + "]");
    }
    return static_cast<Index>(k);
}

int run_query(const RunConfig& config, std::istream& in, std::ostream& out) {
    std::string text = read_input(config, in);
    if (config.oracle) {
        const Index k = checked_position(config, static_cast<Index>(text.size()));
        const auto tied = oracle::all_sus_at_naive(text, k);
        RowWriter writer(out, text, config.show_text);
        if (config.header) writer.header();
        if (config.all) {
            for (const auto& iv : tied) writer.row(k, iv);
        } else {
            writer.row(k, tied.front());
        }
        return kOk;
    }

    const SuffixContext ctx = load_context(config, std::move(text));
    const Index k = checked_position(config, ctx.size());
    if (config.index_out) write_index_file(*config.index_out, ctx);
    RowWriter writer(out, ctx.text(), config.show_text);
    if (config.header) writer.header();
    if (config.all) {
        for (const auto& iv : all_sus_at(ctx, k)) writer.row(k, iv);
    } else {
        writer.row(k, sus_at(ctx, k));
    }
    return kOk;
}

int run_every(const RunConfig& config, std::istream& in, std::ostream& out) {
    std::string text = read_input(config, in);
    if (config.oracle) {
        RowWriter writer(out, text, config.show_text);
        if (config.header) writer.header();
        const Index n = static_cast<Index>(text.size());
        for (Index k = 1; k <= n; ++k) {
            const auto tied = oracle::all_sus_at_naive(text, k);
            if (config.all) {
                for (const auto& iv : tied) writer.row(k, iv);
            } else {
                writer.row(k, tied.front());
            }
        }
        return kOk;
    }

    const SuffixContext ctx = load_context(config, std::move(text));
    if (config.index_out) write_index_file(*config.index_out, ctx);
    RowWriter writer(out, ctx.text(), config.show_text);
    if (config.header) writer.header();
    if (config.all) {
        for_each_all_sus(ctx, [&](Index k, std::span<const Interval> tied) {
            for (const auto& iv : tied) writer.row(k, iv);
        });
    } else {
        for_each_sus(ctx, [&](Index k, const Interval& iv) { writer.row(k, iv); });
    }
    return kOk;
}

int run_build(const RunConfig& config, std::istream& in, std::ostream& out) {
    if (!config.index_out) throw CLI::RequiredError("--index-out");
    const SuffixContext ctx = SuffixContext::build(read_input(config, in));
    write_index_file(*config.index_out, ctx);
    out << "indexed " << ctx.size() << " bytes into " << *config.index_out << '\n';
    return kOk;
}

int run_bench(const RunConfig& config, std::istream& in, std::ostream& out) {
    using Clock = std::chrono::steady_clock;
    std::string text = read_input(config, in);

    const auto t0 = Clock::now();
    const SuffixContext ctx = load_context(config, std::move(text));
    const auto t1 = Clock::now();
    std::uint64_t checksum = 0;
    const WalkStats stats = for_each_sus(ctx, [&](Index, const Interval& iv) {
        checksum = checksum * 1000003u + iv.start * 31u + iv.length;
    });
    const auto t2 = Clock::now();

    const double build_s = std::chrono::duration<double>(t1 - t0).count();
    const double every_s = std::chrono::duration<double>(t2 - t1).count();
    const double total_s = build_s + every_s;

    std::ostringstream report;
    report << "bytes\t" << ctx.size() << '\n'
           << "checksum\t" << checksum << '\n'
           << "peak_nodes\t" << stats.peak_nodes << '\n'
           << "node_capacity\t" << stats.node_capacity << '\n'
           << "appended_nodes\t" << stats.appended_count << '\n'
           << "merge_count\t" << stats.merge_count << '\n'
           << "index_seconds\t" << build_s << '\n'
           << "sus_every_seconds\t" << every_s << '\n'
           << "bytes_per_second\t" << (total_s > 0 ? ctx.size() / total_s : 0.0) << '\n';
    out << report.str();
    return kOk;
}

} // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
        case Command::build: return run_build(config, in, out);
        case Command::query: return run_query(config, in, out);
        case Command::every: return run_every(config, in, out);
        case Command::bench: return run_bench(config, in, out);
        }
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const OutOfRange& e) {
        err << "error: " << e.what() << '\n';
        return kOutOfRange;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return kIo;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    }
    return kUsage;
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Shortest unique substrings covering text positions"};
    app.name("sus");
    app.require_subcommand(1);

    RunConfig config;
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", config.input, "Input file, or - for standard input")->required();
        sub->add_flag("--strip-trailing-newline", config.strip_trailing_newline,
                      "Drop one trailing newline from the input");
    };
    auto add_output_flags = [&](CLI::App* sub) {
        sub->add_flag("--all", config.all, "Report every tied SUS, one row each");
        sub->add_flag("--show-text", config.show_text, "Append the raw substring as a fourth column");
        sub->add_flag("--header", config.header, "Print a header row");
        sub->add_flag("--oracle", config.oracle, "Use the brute-force reference (small inputs)")->group("");
        sub->add_option("--index-in", config.index_in, "Load a prebuilt index instead of building one");
        sub->add_option("--index-out", config.index_out, "Also save the index to this path");
    };

    auto* build = app.add_subcommand("build", "Build and save the suffix index");
    add_input(build);
    build->add_option("--index-out", config.index_out, "Index output path")->required();

    auto* query = app.add_subcommand("query", "SUS covering one position");
    add_input(query);
    add_output_flags(query);
    query->add_option("-k", config.position, "1-based position")->required();

    auto* every = app.add_subcommand("every", "SUS covering every position");
    add_input(every);
    add_output_flags(every);

    auto* bench = app.add_subcommand("bench", "Time index construction and the full pass");
    add_input(bench);
    bench->add_option("--index-in", config.index_in, "Load a prebuilt index instead of building one");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    if (build->parsed()) config.command = Command::build;
    else if (query->parsed()) config.command = Command::query;
    else if (every->parsed()) config.command = Command::every;
    else config.command = Command::bench;

    return run(config, in, out, err);
}

} // namespace sus::cli
