// Copyright 2026 The Suffixient Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string>

#include "suffixient/error.hpp"
#include "suffixient/index_build.hpp"

namespace suffixient {

/// Symbol as seen by the streaming algorithm; -1 marks "no symbol" at the
/// array boundaries.
using StreamSymbol = std::int32_t;
inline constexpr StreamSymbol kNoSymbol = -1;

/// One column (SA[i], LCP[i], BWT[i]). The virtual column n+1 has
/// sa = 0, lcp = -1, bwt = -1.
struct IndexTriple {
    std::size_t i = 0;
    std::uint64_t sa = 0;
    std::int64_t lcp = -1;
    StreamSymbol bwt = kNoSymbol;

    friend bool operator==(const IndexTriple&, const IndexTriple&) = default;
};

/// What the builder needs from its input: the triple at the cursor, the one
/// after it, and a forward-only cursor.
template <class S>
concept TripleSource = requires(S s, const S cs) {
    { s.current() } -> std::convertible_to<IndexTriple>;
    { s.peek_next() } -> std::convertible_to<IndexTriple>;
    s.advance();
    { cs.size() } -> std::convertible_to<std::size_t>;
    { cs.sigma() } -> std::convertible_to<std::size_t>;
};

/// Forward-only view over IndexArrays that exposes exactly the window
/// {cursor, cursor+1}. Reading anything else throws AccessViolation.
class TripleStream {
public:
    explicit TripleStream(const IndexArrays& arrays) : arrays_(&arrays), n_(arrays.size()) {}

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] std::size_t sigma() const noexcept { return arrays_->sigma; }
    [[nodiscard]] std::size_t cursor() const noexcept { return cursor_; }
    [[nodiscard]] std::size_t advances() const noexcept { return advances_; }
    [[nodiscard]] bool exhausted() const noexcept { return cursor_ > n_; }

    [[nodiscard]] IndexTriple current() const {
        if (exhausted()) throw Error(ErrorKind::Exhausted, "stream has no current triple");
        return load(cursor_);
    }

    /// Triple at cursor+1; the virtual (-1, -1) column when cursor = n.
    [[nodiscard]] IndexTriple peek_next() const {
        if (exhausted()) throw Error(ErrorKind::Exhausted, "stream has no next triple");
        return load(cursor_ + 1);
    }

    /// Random read restricted to the look-ahead window.
    [[nodiscard]] IndexTriple at(std::size_t i) const {
        if (i != cursor_ && i != cursor_ + 1)
            throw Error(ErrorKind::AccessViolation,
                        "index " + std::to_string(i) + " is outside the window at cursor " + std::to_string(cursor_));
        if (exhausted()) throw Error(ErrorKind::Exhausted, "stream is exhausted");
        return load(i);
    }

    void advance() {
        if (exhausted()) throw Error(ErrorKind::Exhausted, "cannot advance past n+1");
        ++cursor_;
        ++advances_;
    }

private:
    [[nodiscard]] IndexTriple load(std::size_t i) const {
        if (i > n_) return IndexTriple{i, 0, -1, kNoSymbol};
        return IndexTriple{i, arrays_->sa[i], arrays_->lcp[i], static_cast<StreamSymbol>(arrays_->bwt[i])};
    }

    const IndexArrays* arrays_;
    std::size_t n_;
    std::size_t cursor_ = 1;
    std::size_t advances_ = 0;
};

static_assert(TripleSource<TripleStream>);

}  // namespace suffixient
