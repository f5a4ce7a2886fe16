#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ubg/graph.hpp"
#include "ubg/model.hpp"

namespace ubg {

// Realization counts are exponential in the trace size, so every
// enumeration takes explicit limits and refuses loudly instead of
// grinding. max_events bounds the trace (or graph) size up front;
// max_results bounds the number of enumerated sequences.
struct EnumerationLimits {
    std::size_t max_events = 10;
    std::uint64_t max_results = 1'000'000;
};

class EnumerationLimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// All linear extensions of the graph, as rank sequences in lexicographic
// order. Throws EnumerationLimitError when the graph exceeds the limits.
std::vector<std::vector<Rank>> topological_sortings(
    const BehaviorGraph& graph, const EnumerationLimits& limits = {});

// All orderings of the trace's events consistent with the interval order,
// as event id sequences. Every event occurs exactly once; activity choice
// and indeterminacy play no part here.
std::vector<std::vector<std::string>> order_realizations(
    const UncertainTrace& trace, const EnumerationLimits& limits = {});

// All activity sequences the trace can stand for: drop any subset of the
// indeterminate events, pick one label per remaining event, order
// consistently with the interval order. Deduplicated (distinct choices can
// collide on the same sequence) and sorted lexicographically. The empty
// sequence is a valid realization when every event is indeterminate.
std::vector<std::vector<std::string>> realizations(
    const UncertainTrace& trace, const EnumerationLimits& limits = {});

}  // namespace ubg
