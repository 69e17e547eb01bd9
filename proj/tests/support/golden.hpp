// Copyright 2026 The Suffixient Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "suffixient/ingest.hpp"
#include "suffixient/trace.hpp"

// Reference execution trace for T = AGCACAGCA$.
namespace suffixient::testing::golden {

inline constexpr const char* kText = "AGCACAGCA";
inline constexpr std::size_t kN = 10;

inline const std::string kTextRow = "AGCACAGCA$";
inline const std::string kRevRow = "ACGACACGA$";
inline const std::array<std::int64_t, kN> kLcp{-1, 0, 1, 2, 4, 0, 1, 3, 0, 2};
inline const std::string kBwt = "AGGC$AAACC";
inline const std::array<std::int64_t, kN> kW{0, 0, 2, 4, 4, 0, -1, 0, 0, -1};
inline const std::array<std::uint64_t, kN> kSa{10, 9, 4, 6, 1, 5, 7, 2, 8, 3};
inline const std::array<std::uint64_t, kN> kPText{1, 2, 7, 5, 10, 6, 4, 9, 3, 8};
inline const std::string kLcpEqW = "FTFFTTFFTF";
inline const std::array<std::size_t, kN> kCurrB{1, 1, 3, 4, 4, 1, 6, 1, 1, 9};
inline const std::string kWeighted = "TTTTTTFTTF";
inline const std::array<const char*, kN> kCandidate{"T", "T", "T", "T", "T", "F", "N/A", "F", "F", "N/A"};

inline const std::array<std::vector<std::string>, kN> kRowList{{
    {"(1,A,0)"},
    {"(2,G,0)", "(1,A,0)"},
    {"(7,G,2)", "(1,A,0)"},
    {"(5,C,4)", "(7,G,2)", "(1,A,0)"},
    {"(10,$,4)", "(5,C,4)", "(7,G,2)", "(1,A,0)"},
    {"(1,A,0)"},
    {"(1,A,0)"},
    {"(1,A,0)"},
    {"(1,A,0)"},
    {"(1,A,0)"},
}};

// result_c per column 1..n+1, symbols in rank order $, A, C, G.
inline const std::array<std::array<std::vector<std::uint64_t>, kN + 1>, 4> kResults{{
    {{{}, {}, {}, {}, {10}, {10}, {10}, {10}, {10}, {10}, {10}}},
    {{{}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {1}}},
    {{{}, {}, {}, {}, {5}, {5}, {5}, {5}, {5}, {5}, {5}}},
    {{{}, {}, {}, {}, {7}, {7}, {7}, {7}, {7}, {7}, {7}}},
}};

inline const std::vector<std::uint64_t> kOutput{10, 1, 5, 7};

// Every cell of the trace that differs from the reference table.
inline std::vector<std::string> mismatches(const Text& text, const Trace& trace) {
    std::vector<std::string> out;
    auto expect = [&](bool ok, const std::string& row, std::size_t col) {
        if (!ok) out.push_back(row + " at column " + std::to_string(col));
    };
    auto tf = [](bool b) { return b ? 'T' : 'F'; };
    if (trace.columns.size() != kN) {
        out.push_back("column count " + std::to_string(trace.columns.size()));
        return out;
    }
    for (std::size_t k = 0; k < kN; ++k) {
        const auto& c = trace.columns[k];
        const std::size_t col = k + 1;
        expect(c.i == col, "i", col);
        expect(symbol_label(text, c.text_symbol) == std::string(1, kTextRow[k]), "T[i]", col);
        expect(symbol_label(text, c.rev_symbol) == std::string(1, kRevRow[k]), "Trev[i]", col);
        expect(c.triple.lcp == kLcp[k], "LCP", col);
        expect(symbol_label(text, c.triple.bwt) == std::string(1, kBwt[k]), "BWT", col);
        expect(c.w == kW[k], "w", col);
        expect(c.triple.sa == kSa[k], "SA", col);
        expect(c.p_text == kPText[k], "n-SA[i]+1", col);
        expect(tf(c.triple.lcp == c.w) == kLcpEqW[k], "LCP[i]=w(i)?", col);
        expect(c.curr_b == kCurrB[k], "curr_b", col);
        expect(tf(c.w > -1) == kWeighted[k], "w(i)>-1?", col);
        expect(verdict_label(c.verdict) == kCandidate[k], "candidate verdict", col);
        std::vector<std::string> rows;
        for (const auto& t : c.row_list) rows.push_back(format_row_triple(text, t));
        expect(rows == kRowList[k], "rowList", col);
        for (std::size_t s = 0; s < 4; ++s) expect(c.results.at(s) == kResults[s][k], "result_" + std::to_string(s), col);
    }
    for (std::size_t s = 0; s < 4; ++s)
        expect(trace.final_results.at(s) == kResults[s][kN], "result_" + std::to_string(s), kN + 1);
    expect(trace.result.array.positions == kOutput, "output", kN + 1);
    return out;
}

}  // namespace suffixient::testing::golden
