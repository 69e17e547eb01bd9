// Copyright 2026 The Suffixient Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "suffixient/error.hpp"

namespace suffixient {

/// Dense symbol rank. Rank 0 is always the sentinel.
using Rank = std::uint8_t;

enum class SentinelPolicy { Append, Require };

/// A sentinel-terminated text over the dense alphabet {0..sigma-1}.
///
/// `symbols` is stored 0-based; `at(pos)` takes the 1-based text positions
/// used everywhere else in the library. The last symbol is the sentinel
/// (rank 0) and appears nowhere else. `rank_to_byte[r]` gives the source byte
/// of rank r; under SentinelPolicy::Append the sentinel maps back to 0x00.
struct Text {
    std::vector<Rank> symbols;
    std::size_t sigma = 0;
    std::vector<std::uint8_t> rank_to_byte;

    [[nodiscard]] std::size_t size() const noexcept { return symbols.size(); }
    [[nodiscard]] Rank at(std::size_t pos) const { return symbols.at(pos - 1); }
};

/// T^rev: the body reversed, with the sentinel kept at the last position.
struct ReversedText {
    std::vector<Rank> symbols;
    std::size_t sigma = 0;

    [[nodiscard]] std::size_t size() const noexcept { return symbols.size(); }
    [[nodiscard]] Rank at(std::size_t pos) const { return symbols.at(pos - 1); }
};

namespace detail {

inline Text densify(std::span<const std::uint8_t> bytes, bool sentinel_is_appended) {
    std::array<bool, 256> seen{};
    for (auto b : bytes) seen[b] = true;

    Text text;
    std::array<Rank, 256> byte_to_rank{};
    std::size_t next = 0;
    if (sentinel_is_appended) {
        text.rank_to_byte.push_back(0x00);
        next = 1;
    }
    for (std::size_t b = 0; b < 256; ++b) {
        if (!seen[b]) continue;
        byte_to_rank[b] = static_cast<Rank>(next++);
        text.rank_to_byte.push_back(static_cast<std::uint8_t>(b));
    }
    text.sigma = next;
    text.symbols.reserve(bytes.size() + (sentinel_is_appended ? 1 : 0));
    for (auto b : bytes) text.symbols.push_back(byte_to_rank[b]);
    if (sentinel_is_appended) text.symbols.push_back(0);
    return text;
}

}  // namespace detail

/// Builds a Text from raw bytes, either appending a 0x00 sentinel or
/// requiring the last byte to already be a unique, strictly smallest
/// terminator. Ranks preserve the byte order of the source alphabet.
inline Text load_text(std::span<const std::uint8_t> raw, SentinelPolicy policy = SentinelPolicy::Append) {
    if (raw.empty()) throw Error(ErrorKind::EmptyInput, "input contains no symbols");

    Text text;
    if (policy == SentinelPolicy::Append) {
        if (std::find(raw.begin(), raw.end(), std::uint8_t{0}) != raw.end())
            throw Error(ErrorKind::SentinelViolation, "byte 0x00 occurs inside the text");
        text = detail::densify(raw, true);
    } else {
        const auto last = raw.back();
        const auto body = raw.first(raw.size() - 1);
        if (std::any_of(body.begin(), body.end(), [last](std::uint8_t b) { return b <= last; }))
            throw Error(ErrorKind::SentinelViolation,
                        "terminator must be unique and strictly smaller than every other byte");
        text = detail::densify(raw, false);
    }
    if (text.sigma < 2) throw Error(ErrorKind::UnaryAlphabet, "alphabet has fewer than two symbols");
    return text;
}

inline Text load_text(std::string_view raw, SentinelPolicy policy = SentinelPolicy::Append) {
    return load_text(std::span(reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()), policy);
}

/// Concatenates the sequence lines of every FASTA record (header lines start
/// with '>', blank lines and trailing '\r' are dropped) and loads the result.
inline Text load_fasta(std::span<const std::uint8_t> raw, SentinelPolicy policy = SentinelPolicy::Append) {
    std::vector<std::uint8_t> sequence;
    sequence.reserve(raw.size());
    std::size_t pos = 0;
    while (pos < raw.size()) {
        std::size_t end = pos;
        while (end < raw.size() && raw[end] != '\n') ++end;
        auto line = raw.subspan(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line = line.first(line.size() - 1);
        if (!line.empty() && line.front() != '>' && line.front() != ';') {
            if (std::find(line.begin(), line.end(), std::uint8_t{0}) != line.end())
                throw Error(ErrorKind::SentinelViolation, "FASTA record contains byte 0x00");
            sequence.insert(sequence.end(), line.begin(), line.end());
        }
        pos = end + 1;
    }
    return load_text(sequence, policy);
}

inline Text load_fasta(std::string_view raw, SentinelPolicy policy = SentinelPolicy::Append) {
    return load_fasta(std::span(reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()), policy);
}

/// T^rev[i] = T[n-i] for 1 <= i < n, T^rev[n] = sentinel.
inline ReversedText reverse_text(const Text& text) {
    ReversedText rev;
    rev.sigma = text.sigma;
    rev.symbols.assign(text.symbols.rbegin() + 1, text.symbols.rend());
    rev.symbols.push_back(text.symbols.back());
    return rev;
}

/// Same involution applied back: returns the original text symbols.
inline Text unreverse(const ReversedText& rev, std::vector<std::uint8_t> rank_to_byte) {
    Text text;
    text.sigma = rev.sigma;
    text.rank_to_byte = std::move(rank_to_byte);
    text.symbols.assign(rev.symbols.rbegin() + 1, rev.symbols.rend());
    text.symbols.push_back(rev.symbols.back());
    return text;
}

/// Printable form of a rank: the sentinel renders as '$' when it was
/// appended, other non-printable bytes as \xHH.
inline std::string symbol_label(const Text& text, int rank) {
    if (rank < 0) return "-";
    const auto byte = text.rank_to_byte.at(static_cast<std::size_t>(rank));
    if (rank == 0 && byte == 0x00) return "$";
    if (byte >= 0x21 && byte < 0x7f) return std::string(1, static_cast<char>(byte));
    static constexpr char kHex[] = "0123456789abcdef";
    return std::string{'\\', 'x', kHex[byte >> 4], kHex[byte & 0xf]};
}

}  // namespace suffixient
