#include "ubg/sweep.hpp"

#include <algorithm>
#include <cstdint>

namespace ubg {

TimestampList timestamp_list(const UncertainTrace& trace) {
    const auto order = rank_order(trace);
    const auto n = order.size();

    TimestampList list;
    list.events.reserve(n);
    list.event_ids.reserve(n);
    for (auto idx : order) {
        const auto& event = trace.events[idx];
        list.events.push_back({event.activities, event.indeterminate});
        list.event_ids.push_back(event.id);
    }

    // Boundaries sorted by timestamp; on a tie MIN goes first so that an
    // interval ending exactly where another begins never yields an edge
    // (precedence is strict), then by rank for full determinism. A point
    // interval emits MIN immediately followed by its own MAX.
    struct Boundary {
        Timestamp time;
        TimestampListEntry entry;
    };
    std::vector<Boundary> boundaries;
    boundaries.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& event = trace.events[order[i]];
        const Rank rank = static_cast<Rank>(i + 1);
        boundaries.push_back({event.t_min, {rank, BoundKind::Min}});
        boundaries.push_back({event.t_max, {rank, BoundKind::Max}});
    }
    std::sort(boundaries.begin(), boundaries.end(), [](const Boundary& a, const Boundary& b) {
        if (a.time != b.time) return a.time < b.time;
        if (a.entry.kind != b.entry.kind) return a.entry.kind < b.entry.kind;
        return a.entry.rank < b.entry.rank;
    });

    list.entries.reserve(boundaries.size());
    for (const auto& boundary : boundaries) list.entries.push_back(boundary.entry);
    return list;
}

BehaviorGraph behavior_graph(const TimestampList& list) {
    const auto n = list.events.size();

    BehaviorGraph graph;
    graph.nodes.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        graph.nodes.push_back(
            {static_cast<Rank>(i + 1), list.events[i].activities, list.events[i].indeterminate});

    // stamp[r] == scan marks rank r as connected from the current source.
    // Edges out of a rank are only ever added during its single MAX scan,
    // so the stamp comparison is exactly the "already a successor" test.
    std::vector<std::uint32_t> stamp(n + 1, 0);
    std::uint32_t scan = 0;
    const auto& entries = list.entries;
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
        if (entries[i].kind != BoundKind::Max) continue;
        ++scan;
        const Rank src = entries[i].rank;
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            const Rank dst = entries[j].rank;
            if (entries[j].kind == BoundKind::Min) {
                stamp[dst] = scan;
                graph.edges.emplace_back(src, dst);
            } else if (stamp[dst] == scan) {
                // dst opened and closed entirely inside this scan: anything
                // further right is also reachable through dst, so stop.
                break;
            }
        }
    }

    normalize_edges(graph.edges);
    return graph;
}

TraceGraph build_behavior_graph(const UncertainTrace& trace) {
    auto list = timestamp_list(trace);
    TraceGraph result;
    result.graph = behavior_graph(list);
    result.event_ids = std::move(list.event_ids);
    return result;
}

}  // namespace ubg
