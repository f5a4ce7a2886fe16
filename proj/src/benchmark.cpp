#include "ubg/benchmark.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ubg/baseline.hpp"
#include "ubg/sweep.hpp"
#include "ubg/variants.hpp"

namespace ubg {
namespace {

// Floor at 1 ns: empty workloads measure as 0 and the slope fit needs
// positive values.
constexpr double kMinSeconds = 1e-9;

using Clock = std::chrono::steady_clock;

std::uint64_t build_all_sweep(const UncertainLog& log) {
    std::uint64_t edge_sink = 0;
    for (const auto& trace : log.traces) edge_sink += build_behavior_graph(trace).graph.edge_count();
    return edge_sink;
}

std::uint64_t build_all_baseline(const UncertainLog& log) {
    std::uint64_t edge_sink = 0;
    for (const auto& trace : log.traces)
        edge_sink += build_behavior_graph_baseline(trace).graph.edge_count();
    return edge_sink;
}

template <typename Work>
double timed_seconds(const Work& work) {
    const auto start = Clock::now();
    work();
    const std::chrono::duration<double> elapsed = Clock::now() - start;
    return std::max(elapsed.count(), kMinSeconds);
}

BenchResult run_point(const char* sweep, double value, const UncertainLog& log,
                      const BenchOptions& options) {
    if (options.repetitions == 0) throw std::invalid_argument("repetitions must be positive");

    // Correctness first, outside the timed region: the two builders must
    // agree on every trace before their times mean anything.
    for (const auto& trace : log.traces) {
        if (build_behavior_graph(trace).graph != build_behavior_graph_baseline(trace).graph)
            throw std::logic_error("builders disagree on case " + trace.case_id);
    }

    BenchResult result;
    result.sweep = sweep;
    result.value = value;
    result.repetitions = options.repetitions;
    result.baseline_min_s = result.improved_min_s = 1e300;

    double baseline_total = 0;
    double improved_total = 0;
    volatile std::uint64_t sink = 0;
    for (unsigned rep = 0; rep < options.repetitions; ++rep) {
        const double baseline_s = timed_seconds([&] { sink = sink + build_all_baseline(log); });
        const double improved_s = timed_seconds([&] { sink = sink + build_all_sweep(log); });
        baseline_total += baseline_s;
        improved_total += improved_s;
        result.baseline_min_s = std::min(result.baseline_min_s, baseline_s);
        result.improved_min_s = std::min(result.improved_min_s, improved_s);
    }
    result.baseline_mean_s = baseline_total / options.repetitions;
    result.improved_mean_s = improved_total / options.repetitions;
    result.ratio = result.improved_mean_s / result.baseline_mean_s;
    return result;
}

GenSpec sweep_spec(std::uint64_t n, std::uint32_t l, double p, std::uint64_t seed) {
    GenSpec spec;
    spec.trace_count = n;
    spec.trace_length = l;
    spec.timestamp_uncertainty = p;
    spec.seed = seed;
    return spec;
}

}  // namespace

std::vector<BenchResult> sweep_trace_count(const std::vector<std::uint64_t>& n_values,
                                           std::uint32_t trace_length, double uncertainty,
                                           const BenchOptions& options) {
    std::vector<BenchResult> results;
    for (auto n : n_values) {
        const auto log = generate(sweep_spec(n, trace_length, uncertainty, options.seed));
        results.push_back(run_point("n", static_cast<double>(n), log, options));
    }
    return results;
}

std::vector<BenchResult> sweep_trace_length(const std::vector<std::uint32_t>& l_values,
                                            std::uint64_t trace_count, double uncertainty,
                                            const BenchOptions& options) {
    std::vector<BenchResult> results;
    for (auto l : l_values) {
        const auto log = generate(sweep_spec(trace_count, l, uncertainty, options.seed));
        results.push_back(run_point("l", static_cast<double>(l), log, options));
    }
    return results;
}

std::vector<BenchResult> sweep_uncertainty(const std::vector<double>& p_values,
                                           std::uint64_t trace_count, std::uint32_t trace_length,
                                           const BenchOptions& options) {
    std::vector<BenchResult> results;
    for (auto p : p_values) {
        const auto log = generate(sweep_spec(trace_count, trace_length, p, options.seed));
        results.push_back(run_point("p", p, log, options));
    }
    return results;
}

std::vector<MemoryRow> memory_report(const std::vector<std::uint64_t>& n_values,
                                     std::uint32_t trace_length, double uncertainty,
                                     std::uint64_t seed) {
    std::vector<MemoryRow> rows;
    for (auto n : n_values) {
        auto spec = sweep_spec(n, trace_length, uncertainty, seed);
        // Single-letter alphabet: traces differ only in interval shape,
        // which is the dimension deduplication works on.
        spec.alphabet_size = 1;
        const auto stats = variant_stats(process_log(generate(spec)));
        MemoryRow row;
        row.trace_count = n;
        row.naive_bytes = stats.graph_bytes_naive;
        row.dedup_bytes = stats.graph_bytes_deduplicated;
        row.fraction = stats.graph_bytes_naive == 0
                           ? 1.0
                           : static_cast<double>(stats.graph_bytes_deduplicated) /
                                 static_cast<double>(stats.graph_bytes_naive);
        rows.push_back(row);
    }
    return rows;
}

double log_log_slope(const std::vector<double>& values, const std::vector<double>& seconds) {
    if (values.size() != seconds.size()) throw std::invalid_argument("mismatched series lengths");
    const std::size_t first = values.size() / 2;  // upper half: asymptotic regime
    const std::size_t count = values.size() - first;
    if (count < 2) throw std::invalid_argument("need at least 2 points in the upper half");

    double mean_x = 0;
    double mean_y = 0;
    for (std::size_t i = first; i < values.size(); ++i) {
        if (values[i] <= 0 || seconds[i] <= 0)
            throw std::invalid_argument("slope fit needs positive values and times");
        mean_x += std::log(values[i]);
        mean_y += std::log(seconds[i]);
    }
    mean_x /= static_cast<double>(count);
    mean_y /= static_cast<double>(count);

    double num = 0;
    double den = 0;
    for (std::size_t i = first; i < values.size(); ++i) {
        const double dx = std::log(values[i]) - mean_x;
        num += dx * (std::log(seconds[i]) - mean_y);
        den += dx * dx;
    }
    if (den == 0) throw std::invalid_argument("swept values must not all be equal");
    return num / den;
}

std::string bench_csv(const std::vector<BenchResult>& results) {
    std::ostringstream out;
    out << "sweep,param,value,baseline_s,improved_s,ratio\n";
    for (const auto& r : results) {
        out << r.sweep << ',' << r.sweep << ',' << r.value << ',' << r.baseline_mean_s << ','
            << r.improved_mean_s << ',' << r.ratio << '\n';
    }
    return out.str();
}

std::string memory_csv(const std::vector<MemoryRow>& rows) {
    std::ostringstream out;
    out << "n,naive_bytes,dedup_bytes,fraction\n";
    for (const auto& row : rows) {
        out << row.trace_count << ',' << row.naive_bytes << ',' << row.dedup_bytes << ','
            << row.fraction << '\n';
    }
    return out.str();
}

namespace {

std::vector<double> min_series(const std::vector<BenchResult>& results, bool baseline) {
    std::vector<double> series;
    series.reserve(results.size());
    for (const auto& r : results) series.push_back(baseline ? r.baseline_min_s : r.improved_min_s);
    return series;
}

std::vector<double> value_series(const std::vector<BenchResult>& results) {
    std::vector<double> series;
    series.reserve(results.size());
    for (const auto& r : results) series.push_back(r.value);
    return series;
}

}  // namespace

std::vector<std::string> check_count_trends(const std::vector<BenchResult>& results) {
    std::vector<std::string> failures;
    std::ostringstream fmt;
    for (std::size_t i = 1; i < results.size(); ++i) {
        // Both series should grow about linearly in n: when n doubles,
        // time should grow by at most ~2.5x.
        const double growth = results[i].value / results[i - 1].value;
        const double allowed = 1.25 * growth;
        const double baseline_growth = results[i].baseline_min_s / results[i - 1].baseline_min_s;
        const double improved_growth = results[i].improved_min_s / results[i - 1].improved_min_s;
        if (baseline_growth > allowed) {
            fmt.str("");
            fmt << "baseline grew " << baseline_growth << "x over a " << growth
                << "x step in n (limit " << allowed << "x)";
            failures.push_back(fmt.str());
        }
        if (improved_growth > allowed) {
            fmt.str("");
            fmt << "improved grew " << improved_growth << "x over a " << growth
                << "x step in n (limit " << allowed << "x)";
            failures.push_back(fmt.str());
        }
    }
    for (const auto& r : results) {
        if (r.value >= 1000 && !(r.ratio < 0.6)) {
            fmt.str("");
            fmt << "improved/baseline ratio " << r.ratio << " not under 0.6 at n=" << r.value;
            failures.push_back(fmt.str());
        }
    }
    return failures;
}

std::vector<std::string> check_length_trends(const std::vector<BenchResult>& results) {
    std::vector<std::string> failures;
    if (results.size() < 4) {
        failures.push_back("length sweep needs at least 4 points for trend checks");
        return failures;
    }
    const auto values = value_series(results);
    const double baseline_slope = log_log_slope(values, min_series(results, true));
    const double improved_slope = log_log_slope(values, min_series(results, false));
    std::ostringstream fmt;
    if (baseline_slope < 2.5 || baseline_slope > 3.5) {
        fmt.str("");
        fmt << "baseline log-log slope " << baseline_slope << " outside [2.5, 3.5]";
        failures.push_back(fmt.str());
    }
    if (improved_slope < 1.5 || improved_slope > 2.5) {
        fmt.str("");
        fmt << "improved log-log slope " << improved_slope << " outside [1.5, 2.5]";
        failures.push_back(fmt.str());
    }
    for (std::size_t i = 1; i < results.size(); ++i) {
        if (!(results[i].ratio < results[i - 1].ratio)) {
            fmt.str("");
            fmt << "improved/baseline ratio not strictly decreasing at l=" << results[i].value;
            failures.push_back(fmt.str());
        }
    }
    return failures;
}

std::vector<std::string> check_uncertainty_trends(const std::vector<BenchResult>& results) {
    std::vector<std::string> failures;
    if (results.size() < 2) {
        failures.push_back("uncertainty sweep needs at least 2 points");
        return failures;
    }
    double improved_min = 1e300;
    double improved_max = 0;
    double baseline_max = 0;
    std::size_t baseline_argmax = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        improved_min = std::min(improved_min, results[i].improved_min_s);
        improved_max = std::max(improved_max, results[i].improved_min_s);
        if (results[i].baseline_min_s > baseline_max) {
            baseline_max = results[i].baseline_min_s;
            baseline_argmax = i;
        }
    }
    std::ostringstream fmt;
    if (improved_max / improved_min > 2.0) {
        fmt << "improved series max/min " << improved_max / improved_min << " exceeds 2";
        failures.push_back(fmt.str());
    }
    if (results.front().ratio >= results.back().ratio)
        failures.push_back("ratio at the lowest p should be below the ratio at the highest p");
    if (baseline_argmax != 0)
        failures.push_back("baseline series should peak at the lowest p");
    return failures;
}

std::vector<std::string> check_memory_trends(const std::vector<MemoryRow>& rows) {
    std::vector<std::string> failures;
    std::ostringstream fmt;
    for (const auto& row : rows) {
        if (row.fraction > 1.0) {
            fmt.str("");
            fmt << "fraction " << row.fraction << " above 1 at n=" << row.trace_count;
            failures.push_back(fmt.str());
        }
        if (row.trace_count >= 5000 && row.fraction > 0.9) {
            fmt.str("");
            fmt << "fraction " << row.fraction << " above 0.9 at n=" << row.trace_count;
            failures.push_back(fmt.str());
        }
    }
    return failures;
}

}  // namespace ubg
