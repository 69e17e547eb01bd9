// Copyright 2026 The Suffixient Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "suffixient/builder.hpp"
#include "suffixient/error.hpp"
#include "suffixient/index_build.hpp"
#include "suffixient/ingest.hpp"
#include "suffixient/oracle.hpp"
#include "suffixient/stream.hpp"
#include "suffixient/trace.hpp"

namespace suffixient::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitSizeLimit = 3;

enum class InputFormat { Raw, Fasta };
enum class OutputFormat { Text, Json, Binary };

struct Options {
    std::string input;
    InputFormat format = InputFormat::Raw;
    SentinelPolicy sentinel = SentinelPolicy::Append;
    OutputFormat output = OutputFormat::Text;
    bool zero_based = false;
    std::size_t verify_cap = 2000;
    std::size_t min_cap = 14;
    bool require_minimality = false;
    std::optional<std::string> dump_arrays;
    std::optional<std::string> candidate;
    std::size_t trace_cap = 64;
};

inline std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline Text load_input(const Options& opts) {
    const auto bytes = read_file(opts.input);
    if (opts.format == InputFormat::Fasta) {
        if (bytes.empty()) throw Error(ErrorKind::EmptyInput, "input contains no symbols");
        if (bytes.front() != '>') throw Error(ErrorKind::Io, opts.input + " does not start with a FASTA header");
        return load_fasta(bytes, opts.sentinel);
    }
    return load_text(bytes, opts.sentinel);
}

/// ingest -> index_build -> stream -> builder.
struct Pipeline {
    Text text;
    IndexArrays arrays;
    BuildResult result;
};

inline Pipeline run_pipeline(Text text, const std::optional<std::string>& dump_arrays = std::nullopt) {
    Pipeline p;
    p.text = std::move(text);
    p.arrays = build_index(reverse_text(p.text));
    if (dump_arrays) {
        std::ofstream out(*dump_arrays);
        if (!out) throw Error(ErrorKind::Io, "cannot write " + *dump_arrays);
        write_arrays(out, p.arrays);
    }
    TripleStream stream(p.arrays);
    p.result = build_suffixient(stream);
    return p;
}

inline nlohmann::ordered_json stats_json(const RunStats& s) {
    return {{"n", s.n},
            {"sigma", s.sigma},
            {"chi", s.chi},
            {"stack_pushes", s.stack_pushes},
            {"stack_pops", s.stack_pops},
            {"stack_max_depth", s.stack_max_depth},
            {"rowlist_insertions", s.rowlist_insertions},
            {"rowlist_ejections", s.rowlist_ejections},
            {"rowlist_supersessions", s.rowlist_supersessions},
            {"rowlist_max_size", s.rowlist_max_size},
            {"stream_advances", s.stream_advances},
            {"wall_time_ms", s.wall_time_ms}};
}

inline void put_u64(std::ostream& out, std::uint64_t v) {
    char bytes[8];
    for (int k = 0; k < 8; ++k) bytes[k] = static_cast<char>((v >> (8 * k)) & 0xff);
    out.write(bytes, 8);
}

/// "SFXA", then n, sigma, chi and the chi positions, all u64 little-endian.
inline void write_binary(std::ostream& out, const SuffixientArray& sa, bool zero_based) {
    out.write("SFXA", 4);
    put_u64(out, sa.n);
    put_u64(out, sa.sigma);
    put_u64(out, sa.chi());
    for (auto p : sa.positions) put_u64(out, zero_based ? p - 1 : p);
}

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        switch (e.kind()) {
            case ErrorKind::SizeLimit: return kExitSizeLimit;
            case ErrorKind::EmptyInput:
            case ErrorKind::SentinelViolation:
            case ErrorKind::UnaryAlphabet:
            case ErrorKind::Io: return kExitInputError;
            default: return kExitVerifyFailed;
        }
    }
}

inline int cmd_build(const Options& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Pipeline p = run_pipeline(load_input(opts), opts.dump_arrays);
        const auto& sa = p.result.array;
        const std::uint64_t shift = opts.zero_based ? 1 : 0;
        switch (opts.output) {
            case OutputFormat::Text:
                if (opts.zero_based) out << "# positions are 0-based\n";
                for (auto pos : sa.positions) out << pos - shift << '\n';
                break;
            case OutputFormat::Json: {
                nlohmann::json doc;
                doc["base"] = opts.zero_based ? 0 : 1;
                doc["positions"] = nlohmann::json::array();
                for (auto pos : sa.positions) doc["positions"].push_back(pos - shift);
                doc["per_char_groups"] = nlohmann::json::array();
                for (std::size_t c = 0; c < sa.groups.size(); ++c) {
                    nlohmann::json group;
                    group["rank"] = c;
                    group["symbol"] = symbol_label(p.text, static_cast<int>(c));
                    group["positions"] = nlohmann::json::array();
                    for (auto pos : sa.groups[c]) group["positions"].push_back(pos - shift);
                    doc["per_char_groups"].push_back(group);
                }
                doc["stats"] = nlohmann::json(stats_json(p.result.stats));
                out << doc.dump(2) << '\n';
                break;
            }
            case OutputFormat::Binary: write_binary(out, sa, opts.zero_based); break;
        }
        return kExitOk;
    });
}

inline std::vector<std::uint64_t> read_candidate(const std::string& path, bool zero_based) {
    const auto bytes = read_file(path);
    std::istringstream in(std::string(bytes.begin(), bytes.end()));
    std::vector<std::uint64_t> out;
    std::string token;
    while (in >> token) {
        if (token.front() == '#') {
            std::getline(in, token);
            continue;
        }
        out.push_back(std::stoull(token) + (zero_based ? 1 : 0));
    }
    return out;
}

struct VerifyReport {
    bool suffixient = false;
    bool equals_full_l = false;
    bool colex_sorted = false;
    std::optional<bool> minimum;  // unset when skipped
    std::optional<std::size_t> exhaustive_minimum;

    [[nodiscard]] bool passed() const { return suffixient && equals_full_l && colex_sorted && minimum.value_or(true); }
};

/// Runs the oracle suite against `positions`. Throws SizeLimit when the
/// input is above the caps.
inline VerifyReport verify_positions(const Text& text, const std::vector<std::uint64_t>& positions,
                                     const Options& opts) {
    if (text.size() > opts.verify_cap)
        throw Error(ErrorKind::SizeLimit, "n = " + std::to_string(text.size()) + " exceeds --verify-cap " +
                                              std::to_string(opts.verify_cap));
    const bool run_min = text.size() <= opts.min_cap;
    if (opts.require_minimality && !run_min)
        throw Error(ErrorKind::SizeLimit, "n = " + std::to_string(text.size()) + " exceeds --min-cap " +
                                              std::to_string(opts.min_cap));
    VerifyReport report;
    const oracle::Context ctx = oracle::make_context(text);
    report.suffixient = oracle::verify_suffixient(text, positions);
    report.equals_full_l = positions == oracle::naive_full_l(ctx);
    report.colex_sorted = oracle::is_colex_sorted(text, positions);
    if (run_min) {
        report.exhaustive_minimum = oracle::exhaustive_min_size(text, opts.min_cap);
        report.minimum = positions.size() == *report.exhaustive_minimum;
    }
    return report;
}

inline int cmd_verify(const Options& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        Text text = load_input(opts);
        std::vector<std::uint64_t> positions;
        if (opts.candidate) {
            positions = read_candidate(*opts.candidate, opts.zero_based);
        } else {
            positions = run_pipeline(text, opts.dump_arrays).result.array.positions;
        }
        const VerifyReport r = verify_positions(text, positions, opts);
        auto verdict = [](bool ok) { return ok ? "pass" : "fail"; };
        if (opts.output == OutputFormat::Json) {
            nlohmann::json doc{{"n", text.size()},
                               {"chi", positions.size()},
                               {"suffixient", r.suffixient},
                               {"equals_full_l", r.equals_full_l},
                               {"colex_sorted", r.colex_sorted},
                               {"passed", r.passed()}};
            doc["minimum"] = r.minimum ? nlohmann::json(*r.minimum) : nlohmann::json(nullptr);
            out << doc.dump(2) << '\n';
        } else {
            out << "n: " << text.size() << '\n';
            out << "chi: " << positions.size() << '\n';
            out << "suffixient: " << verdict(r.suffixient) << '\n';
            out << "equals_full_l: " << verdict(r.equals_full_l) << '\n';
            out << "colex_sorted: " << verdict(r.colex_sorted) << '\n';
            out << "minimum: " << (r.minimum ? verdict(*r.minimum) : "skipped") << '\n';
            out << (r.passed() ? "PASS" : "FAIL") << '\n';
        }
        return r.passed() ? kExitOk : kExitVerifyFailed;
    });
}

inline int cmd_stats(const Options& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Pipeline p = run_pipeline(load_input(opts), opts.dump_arrays);
        nlohmann::ordered_json doc = stats_json(p.result.stats);
        if (p.text.size() <= opts.verify_cap) {
            const std::size_t h = oracle::suffix_tree_height(reverse_text(p.text), opts.verify_cap);
            doc["suffix_tree_height"] = h;
            doc["stack_bound_ok"] = p.result.stats.stack_max_depth <= h + 1;
        }
        if (opts.output == OutputFormat::Json) {
            out << doc.dump(2) << '\n';
        } else {
            for (const auto& [key, value] : doc.items()) out << key << ": " << value.dump() << '\n';
        }
        return kExitOk;
    });
}

inline nlohmann::json trace_json(const Text& text, const Trace& trace) {
    nlohmann::json cols = nlohmann::json::array();
    auto label = [&](int r) { return symbol_label(text, r); };
    for (const auto& c : trace.columns) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& t : c.row_list) rows.push_back({t.p_text, label(t.ch), t.weight});
        nlohmann::json results = nlohmann::json::object();
        for (std::size_t s = 0; s < c.results.size(); ++s) results[label(static_cast<int>(s))] = c.results[s];
        cols.push_back({{"i", c.i},
                        {"T", label(c.text_symbol)},
                        {"Trev", label(c.rev_symbol)},
                        {"lcp", c.triple.lcp},
                        {"bwt", label(c.triple.bwt)},
                        {"w", c.w},
                        {"sa", c.triple.sa},
                        {"p_text", c.p_text},
                        {"curr_b", c.curr_b},
                        {"candidate", verdict_label(c.verdict)},
                        {"row_list", rows},
                        {"results", results}});
    }
    nlohmann::json final_results = nlohmann::json::object();
    for (std::size_t s = 0; s < trace.final_results.size(); ++s)
        final_results[label(static_cast<int>(s))] = trace.final_results[s];
    return {{"columns", cols}, {"final_results", final_results}, {"positions", trace.result.array.positions}};
}

inline int cmd_trace(const Options& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Text text = load_input(opts);
        const Trace trace = trace_build(text, opts.trace_cap);
        if (opts.output == OutputFormat::Json) out << trace_json(text, trace).dump(2) << '\n';
        else write_trace(out, text, trace);
        return kExitOk;
    });
}

}  // namespace suffixient::cli
