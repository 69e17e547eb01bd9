// Copyright 2026 The Suffixient Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "suffixient/error.hpp"
#include "suffixient/kernel.hpp"
#include "suffixient/stream.hpp"

namespace suffixient {

/// Candidate (p_text, char, weight) kept in the row list.
struct RowTriple {
    std::uint64_t p_text = 0;
    StreamSymbol ch = kNoSymbol;
    std::int64_t weight = -1;

    friend bool operator==(const RowTriple&, const RowTriple&) = default;
};

/// Doubly-linked list of candidates with at most one entry per symbol.
///
/// Nodes live in a slot array indexed by symbol, so the slot itself is the
/// per-symbol direct pointer (MAP[c] is non-null iff slot c is linked).
class RowList {
public:
    explicit RowList(std::size_t sigma) : slots_(sigma) {}

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] bool empty() const noexcept { return size_ == 0; }
    [[nodiscard]] bool contains(StreamSymbol c) const { return slots_.at(static_cast<std::size_t>(c)).linked; }

    /// MAP[c]: the unique triple for c, if any.
    [[nodiscard]] std::optional<RowTriple> find(StreamSymbol c) const {
        const Slot& s = slots_.at(static_cast<std::size_t>(c));
        if (!s.linked) return std::nullopt;
        return RowTriple{s.p_text, c, s.weight};
    }

    [[nodiscard]] std::optional<RowTriple> front() const {
        if (head_ < 0) return std::nullopt;
        return find(head_);
    }

    void push_front(const RowTriple& t) {
        Slot& s = slots_.at(static_cast<std::size_t>(t.ch));
        if (s.linked) throw Error(ErrorKind::ContractViolation, "row list already holds a triple for this symbol");
        s = Slot{t.p_text, t.weight, kNoSymbol, head_, true};
        if (head_ >= 0) slots_[static_cast<std::size_t>(head_)].prev = t.ch;
        head_ = t.ch;
        if (tail_ < 0) tail_ = t.ch;
        ++size_;
    }

    void remove(StreamSymbol c) {
        Slot& s = slots_.at(static_cast<std::size_t>(c));
        if (!s.linked) throw Error(ErrorKind::ContractViolation, "removing a symbol that is not in the row list");
        if (s.prev >= 0) slots_[static_cast<std::size_t>(s.prev)].next = s.next; else head_ = s.next;
        if (s.next >= 0) slots_[static_cast<std::size_t>(s.next)].prev = s.prev; else tail_ = s.prev;
        s.linked = false;
        s.prev = s.next = kNoSymbol;
        --size_;
    }

    RowTriple pop_front() {
        auto t = front();
        if (!t) throw Error(ErrorKind::ContractViolation, "pop_front on an empty row list");
        remove(t->ch);
        return *t;
    }

    /// Front-to-back copy.
    [[nodiscard]] std::vector<RowTriple> snapshot() const {
        std::vector<RowTriple> out;
        out.reserve(size_);
        for (StreamSymbol c = head_; c >= 0; c = slots_[static_cast<std::size_t>(c)].next) {
            const Slot& s = slots_[static_cast<std::size_t>(c)];
            out.push_back({s.p_text, c, s.weight});
        }
        return out;
    }

    /// Non-increasing weights, links consistent in both directions, and
    /// the linked-slot count equal to size().
    [[nodiscard]] bool well_formed() const {
        std::size_t seen = 0;
        StreamSymbol prev = kNoSymbol;
        std::int64_t last_weight = INT64_MAX;
        for (StreamSymbol c = head_; c >= 0; c = slots_[static_cast<std::size_t>(c)].next) {
            const Slot& s = slots_[static_cast<std::size_t>(c)];
            if (!s.linked || s.prev != prev || s.weight > last_weight || ++seen > slots_.size()) return false;
            last_weight = s.weight;
            prev = c;
        }
        const auto linked = static_cast<std::size_t>(
            std::count_if(slots_.begin(), slots_.end(), [](const Slot& s) { return s.linked; }));
        return prev == tail_ && seen == size_ && linked == size_;
    }

private:
    struct Slot {
        std::uint64_t p_text = 0;
        std::int64_t weight = -1;
        StreamSymbol prev = kNoSymbol;
        StreamSymbol next = kNoSymbol;
        bool linked = false;
    };

    std::vector<Slot> slots_;
    StreamSymbol head_ = kNoSymbol;
    StreamSymbol tail_ = kNoSymbol;
    std::size_t size_ = 0;
};

/// Most recent weighted occurrence of a symbol: (index, w(index)), or (0, -1).
struct PrevW {
    std::size_t index = 0;
    std::int64_t weight = -1;

    friend bool operator==(const PrevW&, const PrevW&) = default;
};

/// True iff i = Candt_c(curr_b, i+1), decided from O(1) state:
/// C1 w(i) > LCP[i]; C2 w(i) > -1 and prevW[c].index < curr_b; C3 prevW[c].weight < w(i).
/// The caller guarantees w(i) > -1 and that curr_b was rebound to b(i+1)
/// whenever w(i) != LCP[i].
constexpr bool candidate_test(std::int64_t w_i, std::int64_t lcp_i, std::size_t curr_b, PrevW prev) noexcept {
    const bool c1 = w_i > lcp_i;
    const bool c2 = w_i > -1 && prev.index < curr_b;
    const bool c3 = prev.weight < w_i;
    return c1 || c2 || c3;
}

/// Minimum-size suffixient set, ordered colexicographically by prefix.
/// `groups[c]` is result_c; `positions` is their concatenation in rank order.
struct SuffixientArray {
    std::size_t n = 0;
    std::size_t sigma = 0;
    std::vector<std::uint64_t> positions;
    std::vector<std::vector<std::uint64_t>> groups;

    [[nodiscard]] std::size_t chi() const noexcept { return positions.size(); }
};

struct RunStats {
    std::size_t n = 0;
    std::size_t sigma = 0;
    std::size_t chi = 0;
    std::size_t stack_pushes = 0;
    std::size_t stack_pops = 0;
    std::size_t stack_max_depth = 0;
    std::size_t stack_cached_hits = 0;
    std::size_t rowlist_insertions = 0;
    std::size_t rowlist_ejections = 0;
    std::size_t rowlist_supersessions = 0;
    std::size_t rowlist_max_size = 0;
    std::size_t stream_advances = 0;
    double wall_time_ms = 0.0;
};

enum class Verdict { Inserted, Rejected, NotWeighted };

struct Ejection {
    std::uint64_t p_text = 0;
    StreamSymbol ch = kNoSymbol;

    friend bool operator==(const Ejection&, const Ejection&) = default;
};

/// What happened at one iteration. For i = 1 (Step 0) curr_b is 1 and no
/// stack query is issued.
struct IterationRecord {
    IndexTriple triple;
    std::int64_t w = -1;
    std::size_t b_at_i = 1;       // value returned by compute_b(LCP[i], i)
    bool b_at_i_cached = false;   // that call was served by the repeat branch
    std::size_t curr_b = 1;       // after the optional rebinding to b(i+1)
    bool rebound = false;
    Verdict verdict = Verdict::NotWeighted;
};

struct BuildOptions {
#ifdef NDEBUG
    bool check_invariants = false;
#else
    bool check_invariants = true;
#endif
};

/// State machine for the one-pass construction. build_suffixient() drives
/// it; the step functions are public so tests and the tracer can drive it by
/// hand.
class SuffixientBuilder {
public:
    SuffixientBuilder(std::size_t n, std::size_t sigma, BuildOptions options = {})
        : n_(n), sigma_(sigma), options_(options), rows_(sigma), prev_w_(sigma), results_(sigma) {}

    /// Iteration 1: seed the row list with index 1 iff BWT[2] != BWT[1].
    IterationRecord step0(const IndexTriple& first, const IndexTriple& second) {
        IterationRecord rec;
        rec.triple = first;
        rec.w = compute_w(kNoSymbol, first.bwt, second.bwt, first.lcp, second.lcp);
        if (second.bwt != first.bwt) {
            insert({text_position(first), first.bwt, rec.w});
            rec.verdict = Verdict::Inserted;
        }
        if (rec.w > -1) prev_w_.at(static_cast<std::size_t>(first.bwt)) = {first.i, rec.w};
        prev_bwt_ = first.bwt;
        check();
        return rec;
    }

    /// Step 1: eject every front triple whose weight exceeds LCP[i].
    std::vector<Ejection> step1_eject(std::int64_t lcp_i) {
        std::vector<Ejection> ejected;
        while (auto head = rows_.front()) {
            if (!(lcp_i < head->weight)) break;
            rows_.pop_front();
            emit(*head);
            ejected.push_back({head->p_text, head->ch});
        }
        check();
        return ejected;
    }

    /// Step 2 for iteration i, given the triples at i and i+1.
    IterationRecord step2_insert(const IndexTriple& cur, const IndexTriple& next) {
        IterationRecord rec;
        rec.triple = cur;
        rec.w = compute_w(prev_bwt_, cur.bwt, next.bwt, cur.lcp, next.lcp);

        const std::size_t hits = stack_.cached_hits();
        rec.b_at_i = stack_.compute_b(cur.lcp, cur.i);
        rec.b_at_i_cached = stack_.cached_hits() != hits;
        rec.curr_b = rec.b_at_i;

        if (rec.w > -1) {
            if (rec.w != cur.lcp) {
                rec.curr_b = stack_.compute_b(next.lcp, cur.i + 1);
                rec.rebound = true;
            }
            auto& prev = prev_w_.at(static_cast<std::size_t>(cur.bwt));
            if (candidate_test(rec.w, cur.lcp, rec.curr_b, prev)) {
                if (rows_.contains(cur.bwt)) {
                    rows_.remove(cur.bwt);
                    ++stats_.rowlist_supersessions;
                }
                insert({text_position(cur), cur.bwt, rec.w});
                rec.verdict = Verdict::Inserted;
            } else {
                rec.verdict = Verdict::Rejected;
            }
            prev = {cur.i, rec.w};
        }
        prev_bwt_ = cur.bwt;
        check();
        return rec;
    }

    /// Flush the remaining candidates and concatenate result_0..result_{sigma-1}.
    SuffixientArray finalize() {
        while (!rows_.empty()) emit(rows_.pop_front());

        SuffixientArray out;
        out.n = n_;
        out.sigma = sigma_;
        out.groups = results_;
        for (const auto& group : results_) out.positions.insert(out.positions.end(), group.begin(), group.end());

        if (options_.check_invariants) {
            if (std::find(out.positions.begin(), out.positions.end(), n_) == out.positions.end())
                throw Error(ErrorKind::ContractViolation, "output is missing position n");
            if (out.chi() < sigma_) throw Error(ErrorKind::ContractViolation, "output smaller than sigma");
        }
        stats_.n = n_;
        stats_.sigma = sigma_;
        stats_.chi = out.chi();
        stats_.stack_pushes = stack_.pushes();
        stats_.stack_pops = stack_.pops();
        stats_.stack_max_depth = stack_.max_depth();
        stats_.stack_cached_hits = stack_.cached_hits();
        return out;
    }

    [[nodiscard]] const RowList& row_list() const noexcept { return rows_; }
    [[nodiscard]] const std::vector<PrevW>& prev_w() const noexcept { return prev_w_; }
    [[nodiscard]] const std::vector<std::vector<std::uint64_t>>& results() const noexcept { return results_; }
    [[nodiscard]] const MonotoneStack& stack() const noexcept { return stack_; }
    [[nodiscard]] const RunStats& stats() const noexcept { return stats_; }
    [[nodiscard]] std::size_t size() const noexcept { return n_; }

private:
    [[nodiscard]] std::uint64_t text_position(const IndexTriple& t) const { return n_ - t.sa + 1; }

    void insert(const RowTriple& t) {
        rows_.push_front(t);
        ++stats_.rowlist_insertions;
        stats_.rowlist_max_size = std::max(stats_.rowlist_max_size, rows_.size());
    }

    void emit(const RowTriple& t) {
        results_.at(static_cast<std::size_t>(t.ch)).push_back(t.p_text);
        ++stats_.rowlist_ejections;
    }

    void check() const {
        if (!options_.check_invariants) return;
        if (!rows_.well_formed())
            throw Error(ErrorKind::ContractViolation, "row list is not sorted by non-increasing weight");
        if (rows_.size() > sigma_) throw Error(ErrorKind::ContractViolation, "row list larger than sigma");
    }

    std::size_t n_;
    std::size_t sigma_;
    BuildOptions options_;
    RowList rows_;
    std::vector<PrevW> prev_w_;
    std::vector<std::vector<std::uint64_t>> results_;
    MonotoneStack stack_;
    StreamSymbol prev_bwt_ = kNoSymbol;
    RunStats stats_;
};

struct BuildResult {
    SuffixientArray array;
    RunStats stats;
};

struct NoObserver {};

/// Single left-to-right pass over the stream with one step of look-ahead.
///
/// The observer may provide either of
///   on_step1(std::size_t i, const std::vector<Ejection>&, const SuffixientBuilder&)
///   on_iteration(const IterationRecord&, const SuffixientBuilder&)
/// which are called after Step 1 and after Step 2 (or Step 0) respectively.
template <TripleSource Stream, class Observer = NoObserver>
BuildResult build_suffixient(Stream& stream, Observer&& observer = {}, BuildOptions options = {}) {
    const auto started = std::chrono::steady_clock::now();
    const std::size_t n = stream.size();
    if (n < 2) throw Error(ErrorKind::UnaryAlphabet, "a suffixient array needs n >= 2");

    SuffixientBuilder builder(n, stream.sigma(), options);
    std::size_t advances = 0;
    {
        const IndexTriple first = stream.current();
        const IndexTriple second = stream.peek_next();
        const IterationRecord rec = builder.step0(first, second);
        if constexpr (requires { observer.on_iteration(rec, builder); }) observer.on_iteration(rec, builder);
        stream.advance();
        ++advances;
    }
    for (std::size_t i = 2; i <= n; ++i) {
        const IndexTriple cur = stream.current();
        const IndexTriple next = stream.peek_next();
        const auto ejected = builder.step1_eject(cur.lcp);
        if constexpr (requires { observer.on_step1(i, ejected, builder); }) observer.on_step1(i, ejected, builder);
        const IterationRecord rec = builder.step2_insert(cur, next);
        if constexpr (requires { observer.on_iteration(rec, builder); }) observer.on_iteration(rec, builder);
        stream.advance();
        ++advances;
    }

    BuildResult result;
    result.array = builder.finalize();
    result.stats = builder.stats();
    result.stats.stream_advances = advances;
    result.stats.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return result;
}

}  // namespace suffixient
