#pragma once

#include <cstdint>
#include <string>

#include "ubg/model.hpp"

namespace ubg {

// Parameters of the synthetic log family used for scaling experiments.
// Events start on a fixed grid of timestamps 10, 20, ..., 10 * trace_length;
// a selected event's point timestamp t widens to [t - 15, t + 15], which
// overlaps both neighbors' grid points.
struct GenSpec {
    std::uint64_t trace_count = 0;         // traces in the log
    std::uint32_t trace_length = 0;        // events per trace
    double timestamp_uncertainty = 0.0;    // per-event widening probability
    double activity_uncertainty = 0.0;     // per-event chance of a 2nd label
    double indeterminacy = 0.0;            // per-event indeterminate chance
    std::uint32_t alphabet_size = 8;       // labels drawn uniformly from a..
    std::uint64_t seed = 0;
};

// Throws std::invalid_argument when a probability is outside [0, 1] or the
// alphabet is empty while events need labels.
void validate_spec(const GenSpec& spec);

// Deterministic for a given spec: same spec, byte-identical log, on any
// platform (fixed splitmix64 generator, trace seeds derived from the log
// seed by index, so per-trace generation is order-independent).
UncertainLog generate(const GenSpec& spec);

// Label for alphabet index 0, 1, ...: a..z, then aa, ab, ...
std::string activity_label(std::uint32_t index);

// Adversarial trace with the densest possible behavior graph: 2k events,
// the first k on intervals [i, i + k - 1], the second k on
// [2k + j, 3k + j]. Every early event ends before every late one begins,
// nothing else is ordered, so the graph is the complete bipartite K_{k,k}
// with k^2 edges and no reducible edge. Requires k >= 1.
UncertainTrace worst_case_trace(std::uint32_t k);

}  // namespace ubg
