#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ubg/baseline.hpp"
#include "ubg/benchmark.hpp"
#include "ubg/log_io.hpp"
#include "ubg/realizations.hpp"
#include "ubg/sweep.hpp"
#include "ubg/synthgen.hpp"
#include "ubg/udfg.hpp"
#include "ubg/variants.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;  // validation / domain errors
constexpr int kExitIo = 2;      // filesystem and stream errors

ubg::LogFormat pick_format(const std::string& flag, const std::string& path) {
    if (flag == "csv") return ubg::LogFormat::Csv;
    if (flag == "jsonl") return ubg::LogFormat::Jsonl;
    return ubg::format_from_path(path);
}

ubg::UncertainLog load_log(const std::string& path, const std::string& format_flag) {
    return ubg::read_log_file(path, pick_format(format_flag, path));
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
    out << text;
    out.flush();
    if (!out) throw std::ios_base::failure("error while writing " + path);
}

struct CommonOptions {
    std::string input;
    std::string format;  // "", "csv" or "jsonl"
};

void add_common(CLI::App* cmd, CommonOptions& options) {
    cmd->add_option("input", options.input, "input log file")->required();
    cmd->add_option("--format", options.format, "input format (default: by file extension)")
        ->check(CLI::IsMember({"csv", "jsonl"}));
}

// ---- validate ----------------------------------------------------------

int run_validate(const CommonOptions& common) {
    const auto log = load_log(common.input, common.format);
    std::size_t events = 0;
    for (const auto& trace : log.traces) events += trace.events.size();
    std::cout << "OK: " << log.traces.size() << " traces, " << events << " events\n";
    return kExitOk;
}

// ---- build -------------------------------------------------------------

struct BuildOptions {
    CommonOptions common;
    std::string output_dir;
    std::string algorithm = "sweep";
    unsigned threads = 1;
};

int run_build(const BuildOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const auto log = load_log(options.common.input, options.common.format);
    auto multiset = ubg::process_log(log, options.threads);

    if (options.algorithm == "baseline") {
        // Same variants, graphs rebuilt with the reference construction;
        // outputs must come out byte-identical to the sweep's.
        std::map<std::string, const ubg::UncertainTrace*> by_case;
        for (const auto& trace : log.traces) by_case.emplace(trace.case_id, &trace);
        for (auto& variant : multiset.variants) {
            const auto* trace = by_case.at(variant.case_ids.front());
            variant.graph = ubg::build_behavior_graph_baseline(*trace).graph;
        }
    }

    fs::create_directories(options.output_dir);
    std::uint64_t total_edges = 0;
    std::size_t index = 1;
    for (const auto& variant : multiset.variants) {
        total_edges += variant.graph.edge_count();
        const auto path = fs::path(options.output_dir) / ("variant_" + std::to_string(index) + ".dot");
        write_text_file(path.string(), ubg::write_dot(variant.graph));
        ++index;
    }
    write_text_file((fs::path(options.output_dir) / "variants.csv").string(),
                    ubg::variant_report_csv(multiset));

    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::cout << "traces=" << multiset.trace_count() << " variants=" << multiset.variant_count()
              << " total_edges=" << total_edges << " elapsed_s=" << elapsed.count() << '\n';
    return kExitOk;
}

// ---- variants ----------------------------------------------------------

struct VariantsOptions {
    CommonOptions common;
    std::string output;
    unsigned threads = 1;
};

int run_variants(const VariantsOptions& options) {
    const auto log = load_log(options.common.input, options.common.format);
    const auto csv = ubg::variant_report_csv(ubg::process_log(log, options.threads));
    if (options.output.empty())
        std::cout << csv;
    else
        write_text_file(options.output, csv);
    return kExitOk;
}

// ---- realizations ------------------------------------------------------

struct RealizationsOptions {
    CommonOptions common;
    std::string case_id;
    std::string output;
    bool orders_only = false;
    std::size_t max_events = 10;
    std::uint64_t max_results = 1'000'000;
};

int run_realizations(const RealizationsOptions& options) {
    const auto log = load_log(options.common.input, options.common.format);
    const ubg::EnumerationLimits limits{options.max_events, options.max_results};

    std::string out;
    bool found = false;
    for (const auto& trace : log.traces) {
        if (!options.case_id.empty() && trace.case_id != options.case_id) continue;
        found = true;
        std::vector<std::vector<std::string>> sequences;
        try {
            sequences = options.orders_only ? ubg::order_realizations(trace, limits)
                                            : ubg::realizations(trace, limits);
        } catch (const ubg::EnumerationLimitError& e) {
            throw std::invalid_argument("case " + trace.case_id + ": " + e.what());
        }
        out += "case " + trace.case_id + ": " + std::to_string(sequences.size()) +
               (options.orders_only ? " order realizations\n" : " realizations\n");
        for (const auto& sequence : sequences) {
            out += "  ";
            for (std::size_t i = 0; i < sequence.size(); ++i) {
                if (i > 0) out += ',';
                out += sequence[i];
            }
            out += '\n';
        }
    }
    if (!options.case_id.empty() && !found)
        throw std::invalid_argument("case " + options.case_id + " not present in " +
                                    options.common.input);
    if (options.output.empty())
        std::cout << out;
    else
        write_text_file(options.output, out);
    return kExitOk;
}

// ---- udfg --------------------------------------------------------------

struct UdfgOptions {
    CommonOptions common;
    std::string output;
    std::string dot;
    std::uint64_t min_filter = 0;
    std::string policy = "by_max";
    std::size_t max_events = 10;
    std::uint64_t max_results = 1'000'000;
};

int run_udfg(const UdfgOptions& options) {
    const auto log = load_log(options.common.input, options.common.format);
    const ubg::EnumerationLimits limits{options.max_events, options.max_results};

    std::vector<std::string> skipped;
    auto graph = ubg::build_udfg(log, limits, &skipped);
    if (options.min_filter > 0) {
        const auto policy = options.policy == "by_min" ? ubg::FilterPolicy::ByMin
                                                       : ubg::FilterPolicy::ByMax;
        graph = ubg::filter_udfg(graph, options.min_filter, policy);
    }

    if (options.output.empty())
        std::cout << ubg::write_udfg_csv(graph);
    else
        write_text_file(options.output, ubg::write_udfg_csv(graph));
    if (!options.dot.empty()) write_text_file(options.dot, ubg::write_udfg_dot(graph));

    if (!skipped.empty()) {
        for (const auto& case_id : skipped)
            std::cerr << "skipped case " << case_id << ": enumeration budget exceeded\n";
        return kExitDomain;
    }
    return kExitOk;
}

// ---- generate ----------------------------------------------------------

struct GenerateOptions {
    std::string output;
    std::string format;
    ubg::GenSpec spec;
    bool seed_given = false;
    std::uint32_t worst_case = 0;
};

int run_generate(GenerateOptions& options) {
    ubg::UncertainLog log;
    if (options.worst_case > 0) {
        log.traces.push_back(ubg::worst_case_trace(options.worst_case));
        std::cout << "worst_case k=" << options.worst_case << '\n';
    } else {
        if (!options.seed_given) {
            std::random_device device;
            options.spec.seed = (std::uint64_t{device()} << 32) | device();
        }
        ubg::validate_spec(options.spec);
        log = ubg::generate(options.spec);
        std::cout << "n=" << options.spec.trace_count << " l=" << options.spec.trace_length
                  << " p=" << options.spec.timestamp_uncertainty
                  << " p_act=" << options.spec.activity_uncertainty
                  << " p_indet=" << options.spec.indeterminacy
                  << " alphabet=" << options.spec.alphabet_size << " seed=" << options.spec.seed
                  << '\n';
    }
    ubg::write_log_file(options.output, log, pick_format(options.format, options.output));
    return kExitOk;
}

// ---- bench -------------------------------------------------------------

struct BenchCliOptions {
    std::string sweep;
    std::string output;
    std::vector<double> values;
    unsigned reps = 3;
    std::uint64_t seed = 42;
    std::uint64_t traces = 100;
    std::uint32_t length = 20;
    bool length_given = false;
    double uncertainty = 0.5;
};

int run_bench(const BenchCliOptions& options) {
    if (options.reps == 0) throw std::invalid_argument("--reps must be positive");
    const ubg::BenchOptions bench{options.reps, options.seed};

    std::vector<std::string> failures;
    std::string csv;
    if (options.sweep == "n") {
        std::vector<std::uint64_t> values{500, 1000, 2000, 4000};
        if (!options.values.empty()) {
            values.clear();
            for (double v : options.values) values.push_back(static_cast<std::uint64_t>(v));
        }
        const auto results = ubg::sweep_trace_count(values, options.length, options.uncertainty, bench);
        csv = ubg::bench_csv(results);
        failures = ubg::check_count_trends(results);
    } else if (options.sweep == "l") {
        std::vector<std::uint32_t> values{50, 100, 200, 400};
        if (!options.values.empty()) {
            values.clear();
            for (double v : options.values) values.push_back(static_cast<std::uint32_t>(v));
        }
        const auto results = ubg::sweep_trace_length(values, options.traces, options.uncertainty, bench);
        csv = ubg::bench_csv(results);
        std::vector<double> xs;
        std::vector<double> baseline_s;
        std::vector<double> improved_s;
        for (const auto& r : results) {
            xs.push_back(r.value);
            baseline_s.push_back(r.baseline_min_s);
            improved_s.push_back(r.improved_min_s);
        }
        csv += "# baseline_slope=" + std::to_string(ubg::log_log_slope(xs, baseline_s)) +
               " improved_slope=" + std::to_string(ubg::log_log_slope(xs, improved_s)) + "\n";
        failures = ubg::check_length_trends(results);
    } else if (options.sweep == "p") {
        std::vector<double> values = options.values;
        if (values.empty())
            for (int i = 0; i <= 10; ++i) values.push_back(0.1 * i);
        // The p sweep defaults to longer traces than the n sweep.
        const std::uint32_t length = options.length_given ? options.length : 100;
        const auto results = ubg::sweep_uncertainty(values, options.traces, length, bench);
        csv = ubg::bench_csv(results);
        failures = ubg::check_uncertainty_trends(results);
    } else if (options.sweep == "mem") {
        std::vector<std::uint64_t> values{10, 100, 1000, 5000};
        if (!options.values.empty()) {
            values.clear();
            for (double v : options.values) values.push_back(static_cast<std::uint64_t>(v));
        }
        const auto rows = ubg::memory_report(values, 10, options.uncertainty, options.seed);
        csv = ubg::memory_csv(rows);
        failures = ubg::check_memory_trends(rows);
    } else {
        throw std::invalid_argument("unknown sweep '" + options.sweep + "' (expected n, l, p or mem)");
    }

    if (options.output.empty())
        std::cout << csv;
    else
        write_text_file(options.output, csv);

    if (!failures.empty()) {
        for (const auto& failure : failures) std::cerr << "trend check failed: " << failure << '\n';
        return kExitDomain;
    }
    std::cout << "all trend checks passed for sweep " << options.sweep << '\n';
    return kExitOk;
}

// ---- export-dot --------------------------------------------------------

struct ExportOptions {
    CommonOptions common;
    std::string case_id;
    std::string output;
    std::string output_dir;
    std::string algorithm = "sweep";
};

int run_export(const ExportOptions& options) {
    const auto log = load_log(options.common.input, options.common.format);
    const auto build = [&](const ubg::UncertainTrace& trace) {
        return options.algorithm == "baseline" ? ubg::build_behavior_graph_baseline(trace).graph
                                               : ubg::build_behavior_graph(trace).graph;
    };

    if (!options.case_id.empty()) {
        for (const auto& trace : log.traces) {
            if (trace.case_id != options.case_id) continue;
            const auto dot = ubg::write_dot(build(trace));
            if (options.output.empty())
                std::cout << dot;
            else
                write_text_file(options.output, dot);
            return kExitOk;
        }
        throw std::invalid_argument("case " + options.case_id + " not present in " +
                                    options.common.input);
    }

    if (options.output_dir.empty())
        throw std::invalid_argument("--output-dir is required without --case");
    fs::create_directories(options.output_dir);
    std::size_t index = 1;
    for (const auto& trace : log.traces) {
        const auto path = fs::path(options.output_dir) / ("trace_" + std::to_string(index) + ".dot");
        write_text_file(path.string(), ubg::write_dot(build(trace)));
        std::cout << "trace_" << index << ".dot case=" << trace.case_id << '\n';
        ++index;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"behavior graphs, variants and directly-follows bounds for uncertain event logs"};
    app.require_subcommand(1);

    auto* validate_cmd = app.add_subcommand("validate", "parse and validate a log file");
    CommonOptions validate_options;
    add_common(validate_cmd, validate_options);

    auto* build_cmd =
        app.add_subcommand("build", "build behavior graphs per variant, write DOT files and a report");
    BuildOptions build_options;
    add_common(build_cmd, build_options.common);
    build_cmd->add_option("--output-dir", build_options.output_dir, "directory for DOT files and report")
        ->required();
    build_cmd->add_option("--algorithm", build_options.algorithm, "construction to use")
        ->check(CLI::IsMember({"sweep", "baseline"}));
    build_cmd->add_option("--threads", build_options.threads, "worker threads (default 1)")
        ->envname("UBG_THREADS");

    auto* variants_cmd = app.add_subcommand("variants", "print the variant report CSV");
    VariantsOptions variants_options;
    add_common(variants_cmd, variants_options.common);
    variants_cmd->add_option("--output", variants_options.output, "write CSV here instead of stdout");
    variants_cmd->add_option("--threads", variants_options.threads, "worker threads (default 1)")
        ->envname("UBG_THREADS");

    auto* realizations_cmd =
        app.add_subcommand("realizations", "enumerate realizations of each trace");
    RealizationsOptions realizations_options;
    add_common(realizations_cmd, realizations_options.common);
    realizations_cmd->add_option("--case", realizations_options.case_id, "restrict to one case id");
    realizations_cmd->add_option("--output", realizations_options.output,
                                 "write text here instead of stdout");
    realizations_cmd->add_flag("--orders", realizations_options.orders_only,
                               "event-id order realizations instead of label sequences");
    realizations_cmd->add_option("--max-events", realizations_options.max_events,
                                 "refuse traces with more events (default 10)");
    realizations_cmd->add_option("--max-results", realizations_options.max_results,
                                 "refuse enumerations past this many sequences (default 1e6)");

    auto* udfg_cmd = app.add_subcommand("udfg", "compute the uncertain directly-follows graph");
    UdfgOptions udfg_options;
    add_common(udfg_cmd, udfg_options.common);
    udfg_cmd->add_option("--output", udfg_options.output, "CSV output path (default stdout)");
    udfg_cmd->add_option("--dot", udfg_options.dot, "also write a DOT rendering here");
    udfg_cmd->add_option("--min-filter", udfg_options.min_filter,
                         "drop edges whose selected bound is below this");
    udfg_cmd->add_option("--policy", udfg_options.policy, "bound the filter reads")
        ->check(CLI::IsMember({"by_min", "by_max"}));
    udfg_cmd->add_option("--max-events", udfg_options.max_events,
                         "per-trace event cap for enumeration (default 10)");
    udfg_cmd->add_option("--max-results", udfg_options.max_results,
                         "per-trace realization budget (default 1e6)");

    auto* generate_cmd = app.add_subcommand("generate", "write a synthetic uncertain log");
    GenerateOptions generate_options;
    generate_options.spec.trace_count = 100;
    generate_options.spec.trace_length = 20;
    generate_options.spec.timestamp_uncertainty = 0.5;
    generate_cmd->add_option("--output", generate_options.output, "log file to write")->required();
    generate_cmd->add_option("--format", generate_options.format,
                             "output format (default: by file extension)")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    generate_cmd->add_option("-n,--traces", generate_options.spec.trace_count, "traces (default 100)");
    generate_cmd->add_option("-l,--length", generate_options.spec.trace_length,
                             "events per trace (default 20)");
    generate_cmd->add_option("-p,--uncertainty", generate_options.spec.timestamp_uncertainty,
                             "timestamp uncertainty fraction (default 0.5)");
    generate_cmd->add_option("--activity-uncertainty", generate_options.spec.activity_uncertainty,
                             "chance of a second candidate label (default 0)");
    generate_cmd->add_option("--indeterminacy", generate_options.spec.indeterminacy,
                             "chance of an indeterminate event (default 0)");
    generate_cmd->add_option("--alphabet-size", generate_options.spec.alphabet_size,
                             "distinct labels (default 8)");
    generate_cmd->add_option("--seed", generate_options.spec.seed,
                             "RNG seed (default: random, printed)");
    generate_cmd->add_option("--worst-case", generate_options.worst_case,
                             "write the adversarial 2k-event trace instead");

    auto* bench_cmd = app.add_subcommand("bench", "run a scaling sweep and check its trends");
    BenchCliOptions bench_options;
    bench_cmd->add_option("--sweep", bench_options.sweep, "n, l, p or mem")->required();
    bench_cmd->add_option("--output", bench_options.output, "CSV output path (default stdout)");
    bench_cmd->add_option("--values", bench_options.values, "swept parameter values");
    bench_cmd->add_option("--reps", bench_options.reps, "repetitions per point (default 3)");
    bench_cmd->add_option("--seed", bench_options.seed, "generation seed (default 42)");
    bench_cmd->add_option("--traces", bench_options.traces,
                          "log size for l and p sweeps (default 100)");
    bench_cmd->add_option("--length", bench_options.length,
                          "trace length for n sweeps (default 20)");
    bench_cmd->add_option("--uncertainty", bench_options.uncertainty,
                          "timestamp uncertainty (default 0.5)");

    auto* export_cmd = app.add_subcommand("export-dot", "write behavior graph DOT files");
    ExportOptions export_options;
    add_common(export_cmd, export_options.common);
    export_cmd->add_option("--case", export_options.case_id, "export only this case");
    export_cmd->add_option("--output", export_options.output,
                           "output file with --case (default stdout)");
    export_cmd->add_option("--output-dir", export_options.output_dir,
                           "output directory without --case");
    export_cmd->add_option("--algorithm", export_options.algorithm, "construction to use")
        ->check(CLI::IsMember({"sweep", "baseline"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitDomain;
    }

    generate_options.seed_given = generate_cmd->count("--seed") > 0;
    bench_options.length_given = bench_cmd->count("--length") > 0;

    try {
        if (app.got_subcommand(validate_cmd)) return run_validate(validate_options);
        if (app.got_subcommand(build_cmd)) return run_build(build_options);
        if (app.got_subcommand(variants_cmd)) return run_variants(variants_options);
        if (app.got_subcommand(realizations_cmd)) return run_realizations(realizations_options);
        if (app.got_subcommand(udfg_cmd)) return run_udfg(udfg_options);
        if (app.got_subcommand(generate_cmd)) return run_generate(generate_options);
        if (app.got_subcommand(bench_cmd)) return run_bench(bench_options);
        if (app.got_subcommand(export_cmd)) return run_export(export_options);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ubg::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitOk;
}
