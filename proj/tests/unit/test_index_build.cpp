// Copyright 2026 The Suffixient Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

#include "generators.hpp"
#include "suffixient/index_build.hpp"
#include "suffixient/ingest.hpp"
#include "suffixient/oracle.hpp"

namespace suffixient {
namespace {

IndexArrays arrays_for(std::string_view body) { return build_index(reverse_text(load_text(body))); }

std::vector<std::uint64_t> tail(const std::vector<std::uint64_t>& v) { return {v.begin() + 1, v.end()}; }
std::vector<std::int64_t> tail(const std::vector<std::int64_t>& v) { return {v.begin() + 1, v.end()}; }

std::string bwt_string(std::string_view body) {
    const Text t = load_text(body);
    const IndexArrays a = build_index(reverse_text(t));
    std::string s;
    for (std::size_t i = 1; i <= a.size(); ++i) s += symbol_label(t, a.bwt[i]);
    return s;
}

TEST(SuffixArray, Examples) {
    EXPECT_EQ(tail(arrays_for("AGCACAGCA").sa), (std::vector<std::uint64_t>{10, 9, 4, 6, 1, 5, 7, 2, 8, 3}));
    EXPECT_EQ(tail(arrays_for("a").sa), (std::vector<std::uint64_t>{2, 1}));
    EXPECT_EQ(tail(arrays_for("aaaa").sa), (std::vector<std::uint64_t>{5, 4, 3, 2, 1}));
}

TEST(Lcp, Examples) {
    EXPECT_EQ(tail(arrays_for("AGCACAGCA").lcp), (std::vector<std::int64_t>{-1, 0, 1, 2, 4, 0, 1, 3, 0, 2}));
    EXPECT_EQ(tail(arrays_for("a").lcp), (std::vector<std::int64_t>{-1, 0}));
    EXPECT_EQ(tail(arrays_for("aaaa").lcp), (std::vector<std::int64_t>{-1, 0, 1, 2, 3}));
}

TEST(Bwt, Examples) {
    EXPECT_EQ(bwt_string("AGCACAGCA"), "AGGC$AAACC");
    EXPECT_EQ(bwt_string("a"), "a$");
    EXPECT_EQ(bwt_string("aaaa"), "aaaa$");
}

TEST(IndexBuild, MatchesBruteForce) {
    std::mt19937_64 rng(99);
    for (int k = 0; k < 300; ++k) {
        const auto family = static_cast<testing::Family>(k % 3);
        const Text t = load_text(testing::generate(family, rng, 1 + k % 120, 1 + k % 7));
        const ReversedText rev = reverse_text(t);
        const IndexArrays a = build_index(rev);
        ASSERT_EQ(a.sa, oracle::naive_suffix_array(rev)) << k;
        const IndexArrays naive = oracle::naive_index(t);
        EXPECT_EQ(a.sa, naive.sa) << k;
        EXPECT_EQ(a.lcp, naive.lcp) << k;
        EXPECT_EQ(a.bwt, naive.bwt) << k;
        // Permutation, inverse, and BWT is a rearrangement of T^rev.
        for (std::size_t i = 1; i <= a.size(); ++i) EXPECT_EQ(a.isa[a.sa[i]], i);
        auto multiset = std::vector<Rank>(a.bwt.begin() + 1, a.bwt.end());
        auto symbols = rev.symbols;
        std::sort(multiset.begin(), multiset.end());
        std::sort(symbols.begin(), symbols.end());
        EXPECT_EQ(multiset, symbols);
        EXPECT_EQ(a.lcp[1], -1);
    }
}

TEST(IndexBuild, LargeInputAgreesWithSortedOrder) {
    std::mt19937_64 rng(5);
    const Text t = load_text(testing::repetitive_text(rng, 20000, 3));
    const ReversedText rev = reverse_text(t);
    const IndexArrays a = build_index(rev);
    const auto& s = rev.symbols;
    for (std::size_t i = 2; i <= a.size(); ++i) {
        const auto p = s.begin() + static_cast<std::ptrdiff_t>(a.sa[i - 1] - 1);
        const auto q = s.begin() + static_cast<std::ptrdiff_t>(a.sa[i] - 1);
        const auto l = static_cast<std::size_t>(a.lcp[i]);
        ASSERT_TRUE(std::equal(p, p + static_cast<std::ptrdiff_t>(l), q));
        ASSERT_LT(p[static_cast<std::ptrdiff_t>(l)], q[static_cast<std::ptrdiff_t>(l)]);
    }
}

TEST(WriteArrays, Format) {
    std::ostringstream out;
    write_arrays(out, arrays_for("a"));
    EXPECT_EQ(out.str(), "# suffixient index arrays n=2 sigma=2\n[SA]\n2\n1\n[LCP]\n-1\n0\n[BWT]\n1\n0\n");
}

}  // namespace
}  // namespace suffixient
