// Copyright 2026 The Suffixient Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "suffixient/commands.hpp"

namespace {

using suffixient::cli::InputFormat;
using suffixient::cli::Options;
using suffixient::cli::OutputFormat;

void add_common(CLI::App* cmd, Options& opts, bool with_binary) {
    cmd->add_option("input,--input", opts.input, "Input file")->required();
    cmd->add_option("--format", opts.format, "Input format: raw or fasta")
        ->transform(CLI::CheckedTransformer(std::map<std::string, InputFormat>{{"raw", InputFormat::Raw},
                                                                               {"fasta", InputFormat::Fasta}}));
    cmd->add_option("--sentinel", opts.sentinel, "Sentinel policy: append or require")
        ->transform(CLI::CheckedTransformer(std::map<std::string, suffixient::SentinelPolicy>{
            {"append", suffixient::SentinelPolicy::Append}, {"require", suffixient::SentinelPolicy::Require}}));
    std::map<std::string, OutputFormat> outputs{{"text", OutputFormat::Text}, {"json", OutputFormat::Json}};
    if (with_binary) outputs.emplace("binary", OutputFormat::Binary);
    cmd->add_option("--output", opts.output, "Output format")->transform(CLI::CheckedTransformer(outputs));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum-size suffixient array construction"};
    app.require_subcommand(1);
    Options opts;

    auto* build = app.add_subcommand("build", "Compute the suffixient array");
    add_common(build, opts, true);
    build->add_flag("--zero-based", opts.zero_based, "Print 0-based positions");
    build->add_option("--dump-arrays", opts.dump_arrays, "Write SA, LCP and BWT of the reversed text");

    auto* verify = app.add_subcommand("verify", "Check a suffixient array against the brute-force oracles");
    add_common(verify, opts, false);
    verify->add_flag("--zero-based", opts.zero_based, "Candidate positions are 0-based");
    verify->add_option("--candidate", opts.candidate, "Verify positions from this file instead of building");
    verify->add_option("--verify-cap", opts.verify_cap, "Largest n accepted by the oracles");
    verify->add_option("--min-cap", opts.min_cap, "Largest n for the exhaustive minimality search");
    verify->add_flag("--minimality", opts.require_minimality, "Fail with exit 3 when minimality cannot be checked");

    auto* stats = app.add_subcommand("stats", "Print run statistics");
    add_common(stats, opts, false);
    stats->add_option("--verify-cap", opts.verify_cap, "Largest n for the suffix-tree height oracle");

    auto* trace = app.add_subcommand("trace", "Print the per-iteration execution trace");
    add_common(trace, opts, false);
    trace->add_option("--trace-cap", opts.trace_cap, "Largest n accepted");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : suffixient::cli::kExitInputError;
    }

    if (*build) return suffixient::cli::cmd_build(opts, std::cout, std::cerr);
    if (*verify) return suffixient::cli::cmd_verify(opts, std::cout, std::cerr);
    if (*stats) return suffixient::cli::cmd_stats(opts, std::cout, std::cerr);
    return suffixient::cli::cmd_trace(opts, std::cout, std::cerr);
}
