// Copyright 2026 The Suffixient Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Brute-force reference implementations. Everything here is quadratic or
// worse and meant for desk-scale inputs; none of it shares code with the
// streaming construction path.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "suffixient/error.hpp"
#include "suffixient/index_build.hpp"
#include "suffixient/ingest.hpp"

namespace suffixient::oracle {

/// Lexicographic sort of all suffixes by direct comparison. 1-based.
inline std::vector<std::uint64_t> naive_suffix_array(const ReversedText& rev) {
    const auto& s = rev.symbols;
    std::vector<std::uint64_t> order(s.size());
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
        return std::lexicographical_compare(s.begin() + static_cast<std::ptrdiff_t>(a - 1), s.end(),
                                            s.begin() + static_cast<std::ptrdiff_t>(b - 1), s.end());
    });
    order.insert(order.begin(), 0);
    return order;
}

/// T[1..p] <colex T[1..q]: compare from the right; a proper suffix is smaller.
inline bool colex_less(const Text& text, std::size_t p, std::size_t q) {
    while (p > 0 && q > 0) {
        const Rank a = text.at(p);
        const Rank b = text.at(q);
        if (a != b) return a < b;
        --p;
        --q;
    }
    return p == 0 && q > 0;
}

/// Length of the longest common suffix of T[1..p] and T[1..q].
inline std::size_t common_suffix(const Text& text, std::size_t p, std::size_t q) {
    std::size_t len = 0;
    while (p > len && q > len && text.at(p - len) == text.at(q - len)) ++len;
    return len;
}

inline bool is_colex_sorted(const Text& text, std::span<const std::uint64_t> positions) {
    for (std::size_t k = 1; k < positions.size(); ++k)
        if (!colex_less(text, positions[k - 1], positions[k])) return false;
    return true;
}

/// SA/LCP/BWT of T^rev derived from T alone: the prefixes T[1..k],
/// k = 0..n-1, sorted colexicographically are exactly the suffixes of T^rev
/// in lexicographic order (SA[x] = n - k).
inline IndexArrays naive_index(const Text& text) {
    const std::size_t n = text.size();
    std::vector<std::size_t> prefix(n);
    std::iota(prefix.begin(), prefix.end(), 0);
    std::stable_sort(prefix.begin(), prefix.end(),
                     [&](std::size_t a, std::size_t b) { return colex_less(text, a, b); });
    IndexArrays arrays;
    arrays.sigma = text.sigma;
    arrays.sa.assign(n + 1, 0);
    arrays.isa.assign(n + 1, 0);
    arrays.lcp.assign(n + 1, 0);
    arrays.bwt.assign(n + 1, 0);
    for (std::size_t x = 1; x <= n; ++x) {
        const std::size_t k = prefix[x - 1];
        arrays.sa[x] = n - k;
        arrays.isa[n - k] = x;
        arrays.bwt[x] = text.at(k + 1);
        arrays.lcp[x] = x == 1 ? -1 : static_cast<std::int64_t>(common_suffix(text, prefix[x - 2], k));
    }
    return arrays;
}

/// Largest x' < x with LCP[x'] < LCP[x], else 1. `lcp` is 1-based.
inline std::size_t naive_b(std::span<const std::int64_t> lcp, std::size_t x) {
    for (std::size_t y = x; y-- > 1;)
        if (lcp[y] < lcp[x]) return y;
    return 1;
}

/// Smallest x' > x with LCP[x'] < LCP[x], else n+1.
inline std::size_t naive_e(std::span<const std::int64_t> lcp, std::size_t x) {
    const std::size_t n = lcp.size() - 1;
    for (std::size_t y = x + 1; y <= n; ++y)
        if (lcp[y] < lcp[x]) return y;
    return n + 1;
}

/// w(x) by its colex-neighbour characterisation, measured on the text: for
/// each neighbour y in {x-1, x+1} whose BWT symbol differs from BWT[x], the
/// longest common suffix of T[1..n-SA[x]] and T[1..n-SA[y]]; the max of
/// those, or -1 if x is not a run boundary.
inline std::int64_t naive_w(const Text& text, const IndexArrays& arrays, std::size_t x) {
    const std::size_t n = arrays.size();
    std::int64_t best = -1;
    for (std::size_t y : {x - 1, x + 1}) {
        if (y < 1 || y > n || arrays.bwt[y] == arrays.bwt[x]) continue;
        const auto len = common_suffix(text, n - arrays.sa[x], n - arrays.sa[y]);
        best = std::max(best, static_cast<std::int64_t>(len));
    }
    return best;
}

/// Pairwise longest-common-suffix table over the prefixes T[1..k],
/// k in [0..n], plus the right-maximality profile derived from it.
class CommonSuffixTable {
public:
    explicit CommonSuffixTable(const Text& text) : n_(text.size()), table_((n_ + 1) * (n_ + 1), 0) {
        for (std::size_t p = 1; p <= n_; ++p)
            for (std::size_t q = 1; q <= n_; ++q)
                if (text.at(p) == text.at(q)) table_[p * (n_ + 1) + q] = table_[(p - 1) * (n_ + 1) + (q - 1)] + 1;

        // Every suffix of T[1..k] up to this length is right-maximal: it also
        // ends at some j whose follower T[j+1] differs from T[k+1].
        rm_.assign(n_, 0);
        for (std::size_t k = 0; k < n_; ++k) {
            std::uint32_t best = 0;
            for (std::size_t j = 0; j < n_; ++j)
                if (text.at(j + 1) != text.at(k + 1)) best = std::max(best, at(k, j));
            rm_[k] = best;
        }
    }

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] std::uint32_t at(std::size_t p, std::size_t q) const { return table_[p * (n_ + 1) + q]; }

    /// Longest right-maximal suffix of T[1..k], k in [0..n-1].
    [[nodiscard]] std::uint32_t longest_right_maximal_suffix(std::size_t k) const { return rm_.at(k); }

private:
    std::size_t n_;
    std::vector<std::uint32_t> table_;
    std::vector<std::uint32_t> rm_;
};

/// The literal catalog: every span [start, end] (1-based, inclusive) such
/// that T[start..end-1] is right-maximal, enumerated over all substrings.
/// Cubic; small n only.
struct RightMaximalCatalog {
    std::set<std::pair<std::size_t, std::size_t>> extensions;
    std::set<std::vector<Rank>> right_maximal;
};

inline RightMaximalCatalog right_maximal_catalog(const Text& text) {
    const std::size_t n = text.size();
    std::map<std::vector<Rank>, std::set<Rank>> followers;
    for (std::size_t start = 1; start <= n; ++start) {
        std::vector<Rank> s;
        for (std::size_t end = start; end <= n; ++end) {  // s = T[start..end-1], follower T[end]
            followers[s].insert(text.at(end));
            s.push_back(text.at(end));
        }
    }
    RightMaximalCatalog catalog;
    for (const auto& [s, f] : followers)
        if (f.size() >= 2) catalog.right_maximal.insert(s);
    for (std::size_t start = 1; start <= n; ++start) {
        std::vector<Rank> s;
        for (std::size_t end = start; end <= n; ++end) {
            if (catalog.right_maximal.count(s)) catalog.extensions.insert({start, end});
            s.push_back(text.at(end));
        }
    }
    return catalog;
}

/// Checks the catalog directly: each extension T[start..end] must be a suffix
/// of T[1..x] for some candidate x.
inline bool verify_suffixient_by_catalog(const Text& text, const RightMaximalCatalog& catalog,
                                         std::span<const std::uint64_t> candidate) {
    for (const auto& [start, end] : catalog.extensions) {
        const std::size_t len = end - start + 1;
        const bool covered = std::any_of(candidate.begin(), candidate.end(), [&](std::uint64_t x) {
            if (x < len) return false;
            for (std::size_t d = 0; d < len; ++d)
                if (text.at(x - d) != text.at(end - d)) return false;
            return true;
        });
        if (!covered) return false;
    }
    return true;
}

/// Suffixient check through the common-suffix table: the extensions ending
/// at position k are the suffixes of T[1..k] of length up to
/// longest_right_maximal_suffix(k-1) + 1; the longest one must end some
/// candidate prefix.
inline bool verify_suffixient(const CommonSuffixTable& table, std::span<const std::uint64_t> candidate) {
    const std::size_t n = table.size();
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t need = table.longest_right_maximal_suffix(k - 1) + 1;
        const bool covered = std::any_of(candidate.begin(), candidate.end(), [&](std::uint64_t x) {
            if (x < 1 || x > n) return false;
            return x == k ? k >= need : table.at(k, x) >= need;
        });
        if (!covered) return false;
    }
    return true;
}

inline bool verify_suffixient(const Text& text, std::span<const std::uint64_t> candidate) {
    return verify_suffixient(CommonSuffixTable(text), candidate);
}

/// Minimum cardinality of a suffixient subset of {1..n}, by trying every
/// subset. n <= 14.
inline std::size_t exhaustive_min_size(const Text& text, std::size_t cap = 14) {
    const std::size_t n = text.size();
    if (n > cap || n > 20)
        throw Error(ErrorKind::SizeLimit, "exhaustive minimality is limited to n <= " + std::to_string(cap));
    const CommonSuffixTable table(text);
    std::size_t best = n;
    std::vector<std::uint64_t> subset;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
        if (size >= best) continue;
        subset.clear();
        for (std::size_t b = 0; b < n; ++b)
            if (mask & (1u << b)) subset.push_back(b + 1);
        if (verify_suffixient(table, subset)) best = size;
    }
    return best;
}

/// Everything the definitional oracles need about one text, computed without
/// the fast construction path.
struct Context {
    Text text;
    IndexArrays arrays;
    std::vector<std::int64_t> w;  // 1-based

    [[nodiscard]] std::size_t size() const noexcept { return text.size(); }
};

inline Context make_context(const Text& text) {
    Context ctx{text, naive_index(text), {}};
    ctx.w.assign(text.size() + 1, -1);
    for (std::size_t x = 1; x <= text.size(); ++x) ctx.w[x] = naive_w(text, ctx.arrays, x);
    return ctx;
}

/// Candt_c(a, a'): smallest p in [a, a') with BWT[p] = c whose weight is the
/// maximum weight (>= 0) among such indices; -1 when none.
inline std::int64_t naive_candt(const Context& ctx, int c, std::size_t a, std::size_t a_prime) {
    std::int64_t best_p = -1;
    std::int64_t best_w = -1;
    const std::size_t end = std::min(a_prime, ctx.size() + 1);
    for (std::size_t p = a; p < end; ++p) {
        if (ctx.arrays.bwt[p] != c || ctx.w[p] < 0) continue;
        if (ctx.w[p] > best_w) {
            best_w = ctx.w[p];
            best_p = static_cast<std::int64_t>(p);
        }
    }
    return best_p;
}

/// FullL over all start-run boundaries and both boundary characters,
/// deduplicated and ordered colexicographically by prefix.
inline std::vector<std::uint64_t> naive_full_l(const Context& ctx) {
    const std::size_t n = ctx.size();
    const auto& bwt = ctx.arrays.bwt;
    std::set<std::uint64_t> members;
    for (std::size_t x = 2; x <= n; ++x) {
        if (bwt[x] == bwt[x - 1]) continue;
        const std::size_t b = naive_b(ctx.arrays.lcp, x);
        const std::size_t e = naive_e(ctx.arrays.lcp, x);
        for (int c : {int(bwt[x]), int(bwt[x - 1])}) {
            const std::int64_t p = naive_candt(ctx, c, b, e);
            if (p < 0) throw Error(ErrorKind::ContractViolation, "Candt undefined at a start-run boundary");
            members.insert(n - ctx.arrays.sa[static_cast<std::size_t>(p)] + 1);
        }
    }
    std::vector<std::uint64_t> out(members.begin(), members.end());
    std::sort(out.begin(), out.end(), [&](std::uint64_t p, std::uint64_t q) { return colex_less(ctx.text, p, q); });
    return out;
}

/// Height of the suffix trie of `rev`, counted in branching nodes on the
/// worst root-to-leaf path. Builds the uncompacted trie explicitly.
inline std::size_t suffix_tree_height(const ReversedText& rev, std::size_t cap = 2000) {
    const std::size_t n = rev.size();
    if (n > cap) throw Error(ErrorKind::SizeLimit, "suffix trie oracle is limited to n <= " + std::to_string(cap));
    struct Node {
        std::int32_t first_child = -1;
        std::int32_t next_sibling = -1;
        std::int32_t parent = -1;
        Rank symbol = 0;
        std::uint16_t children = 0;
    };
    std::vector<Node> trie(1);
    for (std::size_t start = 0; start < n; ++start) {
        std::int32_t node = 0;
        for (std::size_t k = start; k < n; ++k) {
            const Rank c = rev.symbols[k];
            std::int32_t child = trie[static_cast<std::size_t>(node)].first_child;
            while (child >= 0 && trie[static_cast<std::size_t>(child)].symbol != c)
                child = trie[static_cast<std::size_t>(child)].next_sibling;
            if (child < 0) {
                child = static_cast<std::int32_t>(trie.size());
                Node fresh;
                fresh.parent = node;
                fresh.symbol = c;
                fresh.next_sibling = trie[static_cast<std::size_t>(node)].first_child;
                trie.push_back(fresh);
                trie[static_cast<std::size_t>(node)].first_child = child;
                ++trie[static_cast<std::size_t>(node)].children;
            }
            node = child;
        }
    }
    // Children always get larger ids than their parent.
    std::vector<std::uint32_t> branching_above(trie.size(), 0);
    std::size_t height = 0;
    for (std::size_t v = 1; v < trie.size(); ++v) {
        const auto parent = static_cast<std::size_t>(trie[v].parent);
        branching_above[v] = branching_above[parent] + (trie[parent].children >= 2 ? 1 : 0);
        if (trie[v].children == 0) height = std::max<std::size_t>(height, branching_above[v]);
    }
    return height;
}

}  // namespace suffixient::oracle
