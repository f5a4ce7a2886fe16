#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ubg {

// Timestamps are exact integers: plain numbers for synthetic data,
// nanoseconds since the Unix epoch for wall-clock data. Graph topology
// depends on exact comparisons, so floating point is never used here.
using Timestamp = std::int64_t;

// One recorded event. `activities` is the set of candidate labels (more
// than one when the recorded activity is ambiguous), kept sorted and
// duplicate-free. The timestamp interval [t_min, t_max] collapses to a
// point for precisely recorded events. `indeterminate` marks events that
// may not have happened at all.
struct UncertainEvent {
    std::string id;
    std::vector<std::string> activities;
    Timestamp t_min = 0;
    Timestamp t_max = 0;
    bool indeterminate = false;

    bool operator==(const UncertainEvent&) const = default;
};

struct UncertainTrace {
    std::string case_id;
    std::vector<UncertainEvent> events;

    bool operator==(const UncertainTrace&) const = default;
};

struct UncertainLog {
    std::vector<UncertainTrace> traces;

    bool operator==(const UncertainLog&) const = default;
};

// Sorts and deduplicates in place.
void canonicalize_activities(std::vector<std::string>& activities);

// Canonicalizes the activity set; throws std::invalid_argument on an
// empty id, empty activity set, or t_min > t_max.
UncertainEvent make_event(std::string id, std::vector<std::string> activities,
                          Timestamp t_min, Timestamp t_max,
                          bool indeterminate = false);

// Point-interval convenience: [at, at].
UncertainEvent make_event(std::string id, std::vector<std::string> activities,
                          Timestamp at, bool indeterminate = false);

// Strict partial order over events: a is ordered before b exactly when
// a's interval ends strictly before b's begins. Touching or overlapping
// intervals stay unordered.
inline bool precedes(const UncertainEvent& a, const UncertainEvent& b) {
    return a.t_max < b.t_min;
}

// Indices into trace.events sorted by (t_min, id): the canonical ranking
// used everywhere a graph node has to be tied back to an event.
std::vector<std::size_t> rank_order(const UncertainTrace& trace);

struct ValidationIssue {
    std::string case_id;
    std::string event_id;  // empty for trace-level issues
    std::string message;
};

// Checks one trace: non-empty unique event ids, non-empty activity sets,
// ordered intervals. Returns every issue found, in event order.
std::vector<ValidationIssue> validate_trace(const UncertainTrace& trace);

// validate_trace over every trace, plus duplicate case id detection.
std::vector<ValidationIssue> validate_log(const UncertainLog& log);

}  // namespace ubg
