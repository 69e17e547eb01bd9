// Copyright 2026 The Suffixient Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "suffixient/builder.hpp"
#include "suffixient/error.hpp"
#include "suffixient/index_build.hpp"
#include "suffixient/ingest.hpp"
#include "suffixient/stream.hpp"

namespace suffixient {

/// One column of the execution trace.
///
/// `row_list` is the list after Step 2 of iteration i. `results` holds the
/// result lists after Step 1 of iteration i+1, i.e. after the ejections
/// triggered by LCP[i+1]; for i = n it is the state after the last
/// iteration. The final flush is recorded separately in Trace::final_results.
struct TraceColumn {
    std::size_t i = 0;
    Rank text_symbol = 0;
    Rank rev_symbol = 0;
    IndexTriple triple;
    std::int64_t w = -1;
    std::uint64_t p_text = 0;
    std::size_t curr_b = 1;
    Verdict verdict = Verdict::NotWeighted;
    std::vector<RowTriple> row_list;
    std::vector<std::vector<std::uint64_t>> results;
};

struct Trace {
    std::vector<TraceColumn> columns;
    std::vector<std::vector<std::uint64_t>> final_results;
    BuildResult result;
};

namespace detail {

struct TraceRecorder {
    const Text* text;
    const ReversedText* rev;
    std::vector<TraceColumn> columns;

    void on_step1(std::size_t, const std::vector<Ejection>&, const SuffixientBuilder& builder) {
        columns.back().results = builder.results();
    }

    void on_iteration(const IterationRecord& rec, const SuffixientBuilder& builder) {
        TraceColumn col;
        col.i = rec.triple.i;
        col.text_symbol = text->at(col.i);
        col.rev_symbol = rev->at(col.i);
        col.triple = rec.triple;
        col.w = rec.w;
        col.p_text = builder.size() - rec.triple.sa + 1;
        col.curr_b = rec.curr_b;
        col.verdict = rec.verdict;
        col.row_list = builder.row_list().snapshot();
        col.results = builder.results();
        columns.push_back(std::move(col));
    }
};

}  // namespace detail

inline Trace trace_build(const Text& text, std::size_t cap = 64) {
    if (text.size() > cap)
        throw Error(ErrorKind::SizeLimit, "trace is limited to n <= " + std::to_string(cap));
    const ReversedText rev = reverse_text(text);
    const IndexArrays arrays = build_index(rev);
    TripleStream stream(arrays);
    detail::TraceRecorder recorder{&text, &rev, {}};
    Trace trace;
    trace.result = build_suffixient(stream, recorder);
    trace.columns = std::move(recorder.columns);
    trace.final_results = trace.result.array.groups;
    return trace;
}

inline std::string verdict_label(Verdict v) {
    switch (v) {
        case Verdict::Inserted: return "T";
        case Verdict::Rejected: return "F";
        case Verdict::NotWeighted: return "N/A";
    }
    return "?";
}

inline std::string format_row_triple(const Text& text, const RowTriple& t) {
    return "(" + std::to_string(t.p_text) + "," + symbol_label(text, t.ch) + "," + std::to_string(t.weight) + ")";
}

/// Renders the trace with one row per quantity and one column per index,
/// plus a trailing n+1 column for the final result lists.
inline void write_trace(std::ostream& out, const Text& text, const Trace& trace) {
    std::vector<std::vector<std::string>> rows;
    auto add = [&](std::string label, auto&& cell) {
        std::vector<std::string> row{std::move(label)};
        for (const auto& col : trace.columns) row.push_back(cell(col));
        rows.push_back(std::move(row));
    };
    auto tf = [](bool b) { return std::string(b ? "T" : "F"); };

    add("i", [](const TraceColumn& c) { return std::to_string(c.i); });
    add("T[i]", [&](const TraceColumn& c) { return symbol_label(text, c.text_symbol); });
    add("Trev[i]", [&](const TraceColumn& c) { return symbol_label(text, c.rev_symbol); });
    add("LCP[i]", [](const TraceColumn& c) { return std::to_string(c.triple.lcp); });
    add("BWT[i]", [&](const TraceColumn& c) { return symbol_label(text, c.triple.bwt); });
    add("w(i)", [](const TraceColumn& c) { return std::to_string(c.w); });
    add("SA[i]", [](const TraceColumn& c) { return std::to_string(c.triple.sa); });
    add("n-SA[i]+1", [](const TraceColumn& c) { return std::to_string(c.p_text); });
    add("LCP[i]=w(i)?", [&](const TraceColumn& c) { return tf(c.triple.lcp == c.w); });
    add("curr_b", [](const TraceColumn& c) { return std::to_string(c.curr_b); });
    add("w(i)>-1?", [&](const TraceColumn& c) { return tf(c.w > -1); });
    add("i=Candt?", [](const TraceColumn& c) { return verdict_label(c.verdict); });

    std::size_t depth = 0;
    for (const auto& col : trace.columns) depth = std::max(depth, col.row_list.size());
    for (std::size_t k = 0; k < depth; ++k) {
        add(k == 0 ? "rowList" : "", [&](const TraceColumn& c) {
            return k < c.row_list.size() ? format_row_triple(text, c.row_list[k]) : std::string();
        });
    }
    auto join = [](const std::vector<std::uint64_t>& v) {
        std::string s;
        for (auto p : v) s += (s.empty() ? "" : ",") + std::to_string(p);
        return s;
    };
    for (std::size_t c = 0; c < trace.final_results.size(); ++c) {
        add("result_" + symbol_label(text, static_cast<int>(c)),
            [&](const TraceColumn& col) { return join(col.results[c]); });
    }

    // Trailing n+1 column: only the result rows carry values there.
    const std::size_t first_result_row = rows.size() - trace.final_results.size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == 0) rows[r].push_back("n+1");
        else if (r >= first_result_row) rows[r].push_back(join(trace.final_results[r - first_result_row]));
        else rows[r].push_back("-");
    }

    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& row : rows)
        for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t k = 0; k < row.size(); ++k) {
            line += row[k];
            if (k + 1 < row.size()) line += std::string(width[k] - row[k].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
}

}  // namespace suffixient
