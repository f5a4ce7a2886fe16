#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ubg/synthgen.hpp"

namespace ubg {

// Timing comparison of the two builders at one sweep point. Times are
// seconds of wall clock for building every graph of the generated log,
// excluding generation and I/O. Mean follows the measurement protocol;
// min is kept because it is steadier for slope fits.
struct BenchResult {
    std::string sweep;   // "n", "l" or "p"
    double value = 0.0;  // the swept parameter's value
    double baseline_mean_s = 0.0;
    double improved_mean_s = 0.0;
    double baseline_min_s = 0.0;
    double improved_min_s = 0.0;
    double ratio = 0.0;  // improved_mean_s / baseline_mean_s
    unsigned repetitions = 0;
};

struct BenchOptions {
    unsigned repetitions = 3;
    std::uint64_t seed = 42;
};

// Each sweep generates one log per parameter value (fixed seed), then
// times baseline and improved builds over the whole log, repetitions
// times each. Every run cross-checks that both builders produced equal
// edge sets and throws std::logic_error otherwise.
std::vector<BenchResult> sweep_trace_count(const std::vector<std::uint64_t>& n_values,
                                           std::uint32_t trace_length, double uncertainty,
                                           const BenchOptions& options = {});

std::vector<BenchResult> sweep_trace_length(const std::vector<std::uint32_t>& l_values,
                                            std::uint64_t trace_count, double uncertainty,
                                            const BenchOptions& options = {});

std::vector<BenchResult> sweep_uncertainty(const std::vector<double>& p_values,
                                           std::uint64_t trace_count, std::uint32_t trace_length,
                                           const BenchOptions& options = {});

// Bytes for storing one behavior graph per trace vs one per variant.
struct MemoryRow {
    std::uint64_t trace_count = 0;
    std::uint64_t naive_bytes = 0;
    std::uint64_t dedup_bytes = 0;
    double fraction = 0.0;  // dedup / naive
};

// Variant deduplication payoff over growing n at short trace length. Uses
// a single-letter alphabet so traces differ only in interval shape, the
// regime deduplication is about.
std::vector<MemoryRow> memory_report(const std::vector<std::uint64_t>& n_values,
                                     std::uint32_t trace_length, double uncertainty,
                                     std::uint64_t seed = 42);

// Least-squares slope of log(seconds) against log(value) over the upper
// half of the points (the asymptotic regime). Requires >= 2 points there.
double log_log_slope(const std::vector<double>& values, const std::vector<double>& seconds);

// CSV lines "sweep,param,value,baseline_s,improved_s,ratio" with header;
// the *_s columns carry the means.
std::string bench_csv(const std::vector<BenchResult>& results);

std::string memory_csv(const std::vector<MemoryRow>& rows);

// Trend checks behind the bench subcommand's exit code. Empty result
// means all trends hold; otherwise one line per violated trend. Sweep
// inputs are expected in ascending parameter order.
std::vector<std::string> check_count_trends(const std::vector<BenchResult>& results);
std::vector<std::string> check_length_trends(const std::vector<BenchResult>& results);
std::vector<std::string> check_uncertainty_trends(const std::vector<BenchResult>& results);
std::vector<std::string> check_memory_trends(const std::vector<MemoryRow>& rows);

}  // namespace ubg
