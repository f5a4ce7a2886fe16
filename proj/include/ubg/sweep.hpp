#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ubg/graph.hpp"
#include "ubg/model.hpp"

namespace ubg {

enum class BoundKind : std::uint8_t { Min = 0, Max = 1 };

// One boundary of one event's timestamp interval.
struct TimestampListEntry {
    Rank rank = 0;
    BoundKind kind = BoundKind::Min;

    bool operator==(const TimestampListEntry&) const = default;
};

// Intermediate form between a trace and its behavior graph: per-rank event
// attributes plus the interval boundaries in sweep order. The timestamp
// values themselves are already discarded; only their order survives.
// Traces with equal lists (ids aside) get identical behavior graphs, which
// is what makes the list the variant key.
struct TimestampList {
    struct EventInfo {
        std::vector<std::string> activities;
        bool indeterminate = false;

        bool operator==(const EventInfo&) const = default;
    };

    std::vector<EventInfo> events;            // events[rank - 1]
    std::vector<TimestampListEntry> entries;  // length 2 * events.size()
    std::vector<std::string> event_ids;       // event_ids[rank - 1]; not part of the shape

    // Shape equality: everything except the event ids.
    bool same_shape(const TimestampList& other) const {
        return events == other.events && entries == other.entries;
    }
};

// Ranks events by (t_min, id), then lists each interval's MIN and MAX
// boundary sorted by timestamp. Boundaries with equal timestamps order
// MIN before MAX, then by rank; a point interval therefore emits its MIN
// immediately followed by its MAX.
TimestampList timestamp_list(const UncertainTrace& trace);

// Single left-to-right sweep over the list. Every MAX entry opens a scan
// that connects its event to each later MIN until the scan hits the MAX of
// an event it already connected; that event hides everything further
// right, so the scan stops. Produces exactly the transitive reduction of
// the interval order without ever materializing the full relation.
BehaviorGraph behavior_graph(const TimestampList& list);

// timestamp_list + behavior_graph, keeping the rank -> id map.
TraceGraph build_behavior_graph(const UncertainTrace& trace);

}  // namespace ubg
