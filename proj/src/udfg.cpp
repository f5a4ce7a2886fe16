#include "ubg/udfg.hpp"

#include <algorithm>

namespace ubg {

std::map<DfEdge, DfContribution> trace_df_bounds(const UncertainTrace& trace,
                                                 const EnumerationLimits& limits) {
    const auto sequences = realizations(trace, limits);

    std::map<DfEdge, DfContribution> bounds;
    bool first = true;
    for (const auto& sequence : sequences) {
        // Adjacent pairs of START + sequence + END, as a set: a pair
        // either occurs in this realization or it does not.
        std::set<DfEdge> pairs;
        std::string prev = kStartLabel;
        for (const auto& label : sequence) {
            pairs.insert({prev, label});
            prev = label;
        }
        pairs.insert({prev, kEndLabel});

        for (const auto& pair : pairs) bounds[pair].sometimes = true;
        if (first) {
            for (const auto& pair : pairs) bounds[pair].always = true;
            first = false;
        } else {
            for (auto& [pair, contribution] : bounds)
                if (contribution.always && !pairs.count(pair)) contribution.always = false;
        }
    }
    return bounds;
}

Udfg build_udfg(const UncertainLog& log, const EnumerationLimits& limits,
                std::vector<std::string>* skipped) {
    Udfg result;
    for (const auto& trace : log.traces) {
        std::map<DfEdge, DfContribution> bounds;
        try {
            bounds = trace_df_bounds(trace, limits);
        } catch (const EnumerationLimitError&) {
            if (!skipped) throw;
            skipped->push_back(trace.case_id);
            continue;
        }
        for (const auto& event : trace.events)
            result.activities.insert(event.activities.begin(), event.activities.end());
        for (const auto& [pair, contribution] : bounds) {
            auto& edge = result.edges[pair];
            if (contribution.always) ++edge.min_count;
            if (contribution.sometimes) ++edge.max_count;
        }
    }
    // max_count == 0 never happens for stored pairs (a pair is only in the
    // per-trace map when some realization has it), but keep the invariant
    // explicit.
    std::erase_if(result.edges, [](const auto& item) { return item.second.max_count == 0; });
    return result;
}

Udfg filter_udfg(const Udfg& graph, std::uint64_t threshold, FilterPolicy policy) {
    Udfg result;
    result.activities = graph.activities;
    for (const auto& [pair, bounds] : graph.edges) {
        const auto value = policy == FilterPolicy::ByMin ? bounds.min_count : bounds.max_count;
        if (value >= threshold) result.edges.emplace(pair, bounds);
    }
    return result;
}

}  // namespace ubg
