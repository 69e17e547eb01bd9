// Copyright 2026 The Suffixient Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "suffixient/error.hpp"
#include "suffixient/ingest.hpp"

namespace suffixient {

/// SA, SA^-1, LCP and BWT of the reversed text.
///
/// All four arrays are 1-based: slot 0 is padding and never read, so
/// `sa[i]` is SA[i] for i in [1..n]. Values stored in `sa`/`isa` are 1-based
/// as well. `lcp[1] == -1`.
struct IndexArrays {
    std::vector<std::uint64_t> sa;
    std::vector<std::uint64_t> isa;
    std::vector<std::int64_t> lcp;
    std::vector<Rank> bwt;
    std::size_t sigma = 0;

    [[nodiscard]] std::size_t size() const noexcept { return sa.empty() ? 0 : sa.size() - 1; }
};

namespace detail {

// Induced sorting (SA-IS). `s` must end with a unique, strictly smallest
// symbol; `alphabet` bounds every symbol. Writes 0-based suffix starts.
template <class Sym>
void sais(std::span<const Sym> s, std::span<std::int64_t> sa, std::int64_t alphabet) {
    using idx = std::int64_t;
    const auto n = static_cast<idx>(s.size());
    if (n == 1) {
        sa[0] = 0;
        return;
    }

    std::vector<bool> stype(static_cast<std::size_t>(n));
    stype[n - 1] = true;
    for (idx i = n - 2; i >= 0; --i)
        stype[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1]);
    auto is_lms = [&](idx i) { return i > 0 && stype[i] && !stype[i - 1]; };

    std::vector<idx> counts(static_cast<std::size_t>(alphabet), 0);
    for (idx i = 0; i < n; ++i) ++counts[static_cast<std::size_t>(s[i])];
    std::vector<idx> bucket(static_cast<std::size_t>(alphabet));
    auto heads = [&] {
        idx sum = 0;
        for (std::size_t c = 0; c < counts.size(); ++c) {
            bucket[c] = sum;
            sum += counts[c];
        }
    };
    auto tails = [&] {
        idx sum = 0;
        for (std::size_t c = 0; c < counts.size(); ++c) {
            sum += counts[c];
            bucket[c] = sum;
        }
    };
    auto induce = [&] {
        heads();
        for (idx i = 0; i < n; ++i) {
            const idx j = sa[i] - 1;
            if (sa[i] > 0 && !stype[j]) sa[bucket[static_cast<std::size_t>(s[j])]++] = j;
        }
        tails();
        for (idx i = n - 1; i >= 0; --i) {
            const idx j = sa[i] - 1;
            if (sa[i] > 0 && stype[j]) sa[--bucket[static_cast<std::size_t>(s[j])]] = j;
        }
    };

    std::fill(sa.begin(), sa.end(), -1);
    tails();
    for (idx i = 1; i < n; ++i)
        if (is_lms(i)) sa[--bucket[static_cast<std::size_t>(s[i])]] = i;
    induce();

    // Sorted LMS substrings to the front, then name them.
    idx lms_count = 0;
    for (idx i = 0; i < n; ++i)
        if (is_lms(sa[i])) sa[lms_count++] = sa[i];
    std::fill(sa.begin() + lms_count, sa.end(), -1);
    idx names = 0;
    idx prev = -1;
    for (idx i = 0; i < lms_count; ++i) {
        const idx pos = sa[i];
        bool differs = false;
        for (idx d = 0; d < n; ++d) {
            if (prev == -1 || s[pos + d] != s[prev + d] || stype[pos + d] != stype[prev + d]) {
                differs = true;
                break;
            }
            if (d > 0 && (is_lms(pos + d) || is_lms(prev + d))) break;
        }
        if (differs) {
            ++names;
            prev = pos;
        }
        sa[lms_count + pos / 2] = names - 1;
    }
    std::vector<idx> reduced;
    reduced.reserve(static_cast<std::size_t>(lms_count));
    for (idx i = lms_count; i < n; ++i)
        if (sa[i] >= 0) reduced.push_back(sa[i]);

    if (names < lms_count) {
        sais<idx>(reduced, sa.first(static_cast<std::size_t>(lms_count)), names);
    } else {
        for (idx i = 0; i < lms_count; ++i) sa[reduced[i]] = i;
    }

    // Map reduced ranks back to LMS positions and induce the final order.
    for (idx i = 1, j = 0; i < n; ++i)
        if (is_lms(i)) reduced[j++] = i;
    for (idx i = 0; i < lms_count; ++i) sa[i] = reduced[sa[i]];
    std::fill(sa.begin() + lms_count, sa.end(), -1);
    tails();
    for (idx i = lms_count - 1; i >= 0; --i) {
        const idx j = sa[i];
        sa[i] = -1;
        sa[--bucket[static_cast<std::size_t>(s[j])]] = j;
    }
    induce();
}

}  // namespace detail

/// Suffix array of T^rev, 1-based (slot 0 unused).
inline std::vector<std::uint64_t> build_suffix_array(const ReversedText& rev) {
    const std::size_t n = rev.size();
    std::vector<std::int64_t> work(n);
    detail::sais<Rank>(rev.symbols, work, static_cast<std::int64_t>(rev.sigma));
    std::vector<std::uint64_t> sa(n + 1, 0);
    for (std::size_t k = 0; k < n; ++k) sa[k + 1] = static_cast<std::uint64_t>(work[k]) + 1;
    return sa;
}

inline std::vector<std::uint64_t> build_inverse(std::span<const std::uint64_t> sa) {
    std::vector<std::uint64_t> isa(sa.size(), 0);
    for (std::size_t k = 1; k < sa.size(); ++k) isa[sa[k]] = k;
    return isa;
}

/// Kasai et al. over the inverse suffix array. lcp[1] = -1.
inline std::vector<std::int64_t> build_lcp(const ReversedText& rev, std::span<const std::uint64_t> sa,
                                           std::span<const std::uint64_t> isa) {
    const std::size_t n = rev.size();
    std::vector<std::int64_t> lcp(n + 1, 0);
    if (n == 0) return lcp;
    lcp[1] = -1;
    std::size_t h = 0;
    for (std::size_t pos = 1; pos <= n; ++pos) {
        const std::size_t rank = isa[pos];
        if (rank == 1) {
            h = 0;
            continue;
        }
        const std::size_t other = sa[rank - 1];
        while (pos + h <= n && other + h <= n && rev.symbols[pos + h - 1] == rev.symbols[other + h - 1]) ++h;
        lcp[rank] = static_cast<std::int64_t>(h);
        if (h > 0) --h;
    }
    return lcp;
}

/// BWT[i] = sentinel when SA[i] = 1, else T^rev[SA[i]-1].
inline std::vector<Rank> build_bwt(const ReversedText& rev, std::span<const std::uint64_t> sa) {
    std::vector<Rank> bwt(sa.size(), 0);
    for (std::size_t k = 1; k < sa.size(); ++k) bwt[k] = sa[k] == 1 ? Rank{0} : rev.symbols[sa[k] - 2];
    return bwt;
}

inline IndexArrays build_index(const ReversedText& rev) {
    IndexArrays arrays;
    arrays.sigma = rev.sigma;
    arrays.sa = build_suffix_array(rev);
    arrays.isa = build_inverse(arrays.sa);
    arrays.lcp = build_lcp(rev, arrays.sa, arrays.isa);
    arrays.bwt = build_bwt(rev, arrays.sa);
    return arrays;
}

/// Sidecar dump: a header line, then one section per array with one decimal
/// value per line (1-based order, BWT as symbol ranks).
inline void write_arrays(std::ostream& out, const IndexArrays& arrays) {
    const std::size_t n = arrays.size();
    out << "# suffixient index arrays n=" << n << " sigma=" << arrays.sigma << '\n';
    out << "[SA]\n";
    for (std::size_t i = 1; i <= n; ++i) out << arrays.sa[i] << '\n';
    out << "[LCP]\n";
    for (std::size_t i = 1; i <= n; ++i) out << arrays.lcp[i] << '\n';
    out << "[BWT]\n";
    for (std::size_t i = 1; i <= n; ++i) out << static_cast<unsigned>(arrays.bwt[i]) << '\n';
}

}  // namespace suffixient
