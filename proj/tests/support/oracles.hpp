#pragma once

// Test-side oracles, written independently of the library's algorithms:
// brute force over permutations and closures, plus direct evaluations of
// the defining conditions. Slow on purpose; correctness reference only.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ubg/graph.hpp"
#include "ubg/model.hpp"

namespace ubg::testing {

using IdEdge = std::pair<std::string, std::string>;
using IdEdgeSet = std::set<IdEdge>;
using LabelSeq = std::vector<std::string>;

// Rank edges of a built graph mapped back to event ids.
inline IdEdgeSet id_edges(const TraceGraph& built) {
    IdEdgeSet edges;
    for (const auto& [src, dst] : built.graph.edges)
        edges.insert({built.event_ids[src - 1], built.event_ids[dst - 1]});
    return edges;
}

// Every strictly ordered pair, straight from the definition.
inline IdEdgeSet oracle_full_edges(const UncertainTrace& trace) {
    IdEdgeSet edges;
    for (const auto& a : trace.events)
        for (const auto& b : trace.events)
            if (&a != &b && precedes(a, b)) edges.insert({a.id, b.id});
    return edges;
}

// Reduced edges by direct evaluation: keep (a, b) when a precedes b and no
// interval lies entirely between a's end and b's start.
inline IdEdgeSet oracle_reduced_edges(const UncertainTrace& trace) {
    IdEdgeSet edges;
    for (const auto& a : trace.events) {
        for (const auto& b : trace.events) {
            if (&a == &b || !precedes(a, b)) continue;
            bool blocked = false;
            for (const auto& c : trace.events) {
                if (a.t_max < c.t_min && c.t_max < b.t_min) {
                    blocked = true;
                    break;
                }
            }
            if (!blocked) edges.insert({a.id, b.id});
        }
    }
    return edges;
}

// Reachability closure by repeated relaxation over a rank-edge list.
inline std::vector<char> oracle_closure(const std::vector<Edge>& edges, std::size_t n) {
    std::vector<char> reach(n * n, 0);
    for (const auto& [src, dst] : edges) reach[(src - 1) * n + (dst - 1)] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (reach[i * n + k])
                for (std::size_t j = 0; j < n; ++j)
                    if (reach[k * n + j]) reach[i * n + j] = 1;
    return reach;
}

// Order realizations by filtering all permutations: a sequence is valid
// when no later event is ordered before an earlier one.
inline std::set<LabelSeq> oracle_order_realizations(const UncertainTrace& trace) {
    std::vector<std::size_t> perm(trace.events.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::sort(perm.begin(), perm.end());

    std::set<LabelSeq> result;
    do {
        bool valid = true;
        for (std::size_t i = 0; i + 1 < perm.size() && valid; ++i)
            for (std::size_t j = i + 1; j < perm.size() && valid; ++j)
                if (precedes(trace.events[perm[j]], trace.events[perm[i]])) valid = false;
        if (valid) {
            LabelSeq ids;
            ids.reserve(perm.size());
            for (auto idx : perm) ids.push_back(trace.events[idx].id);
            result.insert(std::move(ids));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

// Full realizations: drop subsets of indeterminate events, pick labels,
// order admissibly; deduplicated label sequences.
inline std::set<LabelSeq> oracle_realizations(const UncertainTrace& trace) {
    std::vector<std::size_t> indeterminate;
    for (std::size_t i = 0; i < trace.events.size(); ++i)
        if (trace.events[i].indeterminate) indeterminate.push_back(i);

    std::set<LabelSeq> result;
    for (std::size_t mask = 0; mask < (std::size_t{1} << indeterminate.size()); ++mask) {
        UncertainTrace retained;
        retained.case_id = trace.case_id;
        std::set<std::size_t> drop;
        for (std::size_t bit = 0; bit < indeterminate.size(); ++bit)
            if (mask & (std::size_t{1} << bit)) drop.insert(indeterminate[bit]);
        for (std::size_t i = 0; i < trace.events.size(); ++i)
            if (!drop.count(i)) retained.events.push_back(trace.events[i]);

        if (retained.events.empty()) {
            result.insert(LabelSeq{});
            continue;
        }

        // index events by id for label lookup
        std::map<std::string, const UncertainEvent*> by_id;
        for (const auto& event : retained.events) by_id[event.id] = &event;

        for (const auto& order : oracle_order_realizations(retained)) {
            std::vector<LabelSeq> partial{LabelSeq{}};
            for (const auto& id : order) {
                std::vector<LabelSeq> next;
                for (const auto& prefix : partial) {
                    for (const auto& label : by_id.at(id)->activities) {
                        auto extended = prefix;
                        extended.push_back(label);
                        next.push_back(std::move(extended));
                    }
                }
                partial = std::move(next);
            }
            result.insert(partial.begin(), partial.end());
        }
    }
    return result;
}

// Directly-follows always/sometimes per pair, START/END adjoined.
struct OracleDf {
    std::set<IdEdge> always;
    std::set<IdEdge> sometimes;
};

inline OracleDf oracle_df_bounds(const UncertainTrace& trace) {
    OracleDf result;
    bool first = true;
    for (const auto& sequence : oracle_realizations(trace)) {
        std::set<IdEdge> pairs;
        std::string prev = "START";
        for (const auto& label : sequence) {
            pairs.insert({prev, label});
            prev = label;
        }
        pairs.insert({prev, "END"});
        result.sometimes.insert(pairs.begin(), pairs.end());
        if (first) {
            result.always = pairs;
            first = false;
        } else {
            std::set<IdEdge> kept;
            std::set_intersection(result.always.begin(), result.always.end(), pairs.begin(),
                                  pairs.end(), std::inserter(kept, kept.begin()));
            result.always = std::move(kept);
        }
    }
    return result;
}

// Random traces rich in ties, touching endpoints and point intervals:
// endpoints drawn from a window comparable to the event count.
inline UncertainTrace random_trace(std::mt19937_64& rng, std::size_t n_events) {
    UncertainTrace trace;
    trace.case_id = "r";
    std::uniform_int_distribution<Timestamp> start(0, static_cast<Timestamp>(2 * n_events + 2));
    std::uniform_int_distribution<Timestamp> width(0, static_cast<Timestamp>(n_events + 1));
    std::uniform_int_distribution<int> coin(0, 99);
    std::uniform_int_distribution<int> label(0, 2);
    const char* labels[] = {"a", "b", "c"};
    for (std::size_t i = 0; i < n_events; ++i) {
        const Timestamp t_min = start(rng);
        const Timestamp t_max = coin(rng) < 40 ? t_min : t_min + width(rng);
        std::vector<std::string> activities{labels[label(rng)]};
        if (coin(rng) < 25) activities.push_back(labels[label(rng)]);
        trace.events.push_back(make_event("e" + std::to_string(i + 1), std::move(activities),
                                          t_min, t_max, coin(rng) < 20));
    }
    return trace;
}

}  // namespace ubg::testing
