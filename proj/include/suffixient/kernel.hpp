// Copyright 2026 The Suffixient Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "suffixient/error.hpp"
#include "suffixient/stream.hpp"

namespace suffixient {

/// w(i) from the BWT symbols at i-1, i, i+1 and LCP[i], LCP[i+1].
///
/// -1 when i is not a run boundary, LCP[i] for a start-run boundary only,
/// LCP[i+1] for an end-run boundary only, the max of both otherwise. Missing
/// neighbours are passed as kNoSymbol.
constexpr std::int64_t compute_w(StreamSymbol pre_bwt, StreamSymbol curr_bwt, StreamSymbol next_bwt,
                                 std::int64_t curr_lcp, std::int64_t next_lcp) noexcept {
    const bool is_start = pre_bwt != kNoSymbol && curr_bwt != pre_bwt;
    const bool is_end = next_bwt != kNoSymbol && curr_bwt != next_bwt;
    const std::int64_t w_start = is_start ? curr_lcp : -1;
    const std::int64_t w_end = is_end ? next_lcp : -1;
    return std::max(w_start, w_end);
}

struct StackTuple {
    std::size_t index = 0;
    std::int64_t val = -1;
    std::int64_t b_val = -1;

    friend bool operator==(const StackTuple&, const StackTuple&) = default;
};

/// Previous-smaller-value stack over the streamed LCP entries.
///
/// compute_b(lcp, i) returns b(i): the largest i' < i with LCP[i'] < LCP[i],
/// or 1. Queries must come in non-decreasing i; a repeated query for the
/// index on top returns the cached value without touching the stack.
class MonotoneStack {
public:
    MonotoneStack() { push({1, -1, -1}); }

    std::size_t compute_b(std::int64_t lcp_i, std::size_t i) {
        const StackTuple& top = tuples_.back();
        if (top.index == i) {
            ++cached_hits_;
            return static_cast<std::size_t>(top.b_val);
        }
        if (i < top.index)
            throw Error(ErrorKind::ContractViolation, "b(" + std::to_string(i) + ") requested after b(" +
                                                          std::to_string(top.index) + ")");
        while (tuples_.back().val >= lcp_i) {
            if (tuples_.size() == 1)
                throw Error(ErrorKind::ContractViolation, "LCP value below the -1 sentinel");
            tuples_.pop_back();
            ++pops_;
        }
        const std::size_t b = tuples_.back().index;
        push({i, lcp_i, static_cast<std::int64_t>(b)});
        return b;
    }

    [[nodiscard]] const std::vector<StackTuple>& tuples() const noexcept { return tuples_; }
    [[nodiscard]] std::size_t size() const noexcept { return tuples_.size(); }
    [[nodiscard]] std::size_t pushes() const noexcept { return pushes_; }
    [[nodiscard]] std::size_t pops() const noexcept { return pops_; }
    [[nodiscard]] std::size_t max_depth() const noexcept { return max_depth_; }
    [[nodiscard]] std::size_t cached_hits() const noexcept { return cached_hits_; }

private:
    void push(const StackTuple& t) {
        tuples_.push_back(t);
        ++pushes_;
        max_depth_ = std::max(max_depth_, tuples_.size());
    }

    std::vector<StackTuple> tuples_;
    std::size_t pushes_ = 0;
    std::size_t pops_ = 0;
    std::size_t max_depth_ = 0;
    std::size_t cached_hits_ = 0;
};

inline MonotoneStack stack_init() { return MonotoneStack{}; }

}  // namespace suffixient
