// Copyright 2026 The Suffixient Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace suffixient {

enum class ErrorKind {
    EmptyInput,
    SentinelViolation,
    UnaryAlphabet,
    Exhausted,
    AccessViolation,
    ContractViolation,
    SizeLimit,
    Io,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::SentinelViolation: return "SentinelViolation";
        case ErrorKind::UnaryAlphabet: return "UnaryAlphabet";
        case ErrorKind::Exhausted: return "Exhausted";
        case ErrorKind::AccessViolation: return "AccessViolation";
        case ErrorKind::ContractViolation: return "ContractViolation";
        case ErrorKind::SizeLimit: return "SizeLimit";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace suffixient
