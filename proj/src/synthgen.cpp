#include "ubg/synthgen.hpp"

#include <stdexcept>

namespace ubg {
namespace {

// splitmix64: fixed algorithm, identical streams on every platform.
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 bits of mantissa.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_unit() < p; }

    // Modulo is biased by < 2^-32 for the tiny bounds used here.
    std::uint32_t below(std::uint32_t bound) {
        return static_cast<std::uint32_t>(next() % bound);
    }
};

void check_fraction(double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0))
        throw std::invalid_argument(std::string(name) + " must be within [0, 1]");
}

}  // namespace

void validate_spec(const GenSpec& spec) {
    check_fraction(spec.timestamp_uncertainty, "timestamp_uncertainty");
    check_fraction(spec.activity_uncertainty, "activity_uncertainty");
    check_fraction(spec.indeterminacy, "indeterminacy");
    if (spec.trace_length > 0 && spec.alphabet_size == 0)
        throw std::invalid_argument("alphabet_size must be positive when events are generated");
}

std::string activity_label(std::uint32_t index) {
    // Bijective base 26: a..z, aa..az, ba..
    std::string label;
    std::uint64_t value = index;
    while (true) {
        label.insert(label.begin(), static_cast<char>('a' + value % 26));
        if (value < 26) break;
        value = value / 26 - 1;
    }
    return label;
}

UncertainLog generate(const GenSpec& spec) {
    validate_spec(spec);

    UncertainLog log;
    log.traces.reserve(spec.trace_count);
    for (std::uint64_t t = 0; t < spec.trace_count; ++t) {
        // Seeds derived per trace index, so trace t is the same whatever
        // order (or thread) generates it.
        SplitMix64 rng{spec.seed + (t + 1) * 0x9E3779B97F4A7C15ULL};
        UncertainTrace trace;
        trace.case_id = "c" + std::to_string(t + 1);
        trace.events.reserve(spec.trace_length);
        for (std::uint32_t e = 0; e < spec.trace_length; ++e) {
            const Timestamp base = Timestamp{10} * (e + 1);
            Timestamp t_min = base;
            Timestamp t_max = base;
            if (rng.bernoulli(spec.timestamp_uncertainty)) {
                // Wide enough to overlap both neighbors' base timestamps.
                t_min = base - 15;
                t_max = base + 15;
            }
            const auto first_label = rng.below(spec.alphabet_size);
            std::vector<std::string> activities{activity_label(first_label)};
            if (rng.bernoulli(spec.activity_uncertainty) && spec.alphabet_size > 1) {
                // A second label distinct from the first.
                const auto offset = 1 + rng.below(spec.alphabet_size - 1);
                activities.push_back(activity_label((first_label + offset) % spec.alphabet_size));
            }
            const bool indeterminate = rng.bernoulli(spec.indeterminacy);
            trace.events.push_back(
                make_event("e" + std::to_string(e + 1), std::move(activities), t_min, t_max,
                           indeterminate));
        }
        log.traces.push_back(std::move(trace));
    }
    return log;
}

UncertainTrace worst_case_trace(std::uint32_t k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");

    UncertainTrace trace;
    trace.case_id = "worst_case_" + std::to_string(k);
    trace.events.reserve(2 * std::size_t{k});
    const Timestamp width = Timestamp{k};
    for (std::uint32_t i = 1; i <= k; ++i) {
        // First group: [i, i + k - 1], all mutually overlapping.
        trace.events.push_back(make_event("e" + std::to_string(i), {activity_label(i - 1)},
                                          Timestamp{i}, Timestamp{i} + width - 1));
    }
    for (std::uint32_t j = 0; j < k; ++j) {
        // Second group: [2k + j, 3k + j], mutually overlapping, and every
        // first-group interval ends before every second-group one starts.
        trace.events.push_back(make_event("e" + std::to_string(k + j + 1),
                                          {activity_label(k + j)}, Timestamp{2} * width + j,
                                          Timestamp{3} * width + j));
    }
    return trace;
}

}  // namespace ubg
