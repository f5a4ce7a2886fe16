#pragma once

// Hand-checked reference traces used across suites.

#include <string>
#include <vector>

#include "ubg/model.hpp"

namespace ubg::testing {

// Clinical running example: e1 indeterminate at 5, e2 with two candidate
// labels at 8, e3 on [4, 10], e4 at 12.
inline UncertainTrace clinical_trace() {
    UncertainTrace trace;
    trace.case_id = "ID327";
    trace.events.push_back(make_event("e1", {"NightSweats"}, 5, true));
    trace.events.push_back(make_event("e2", {"PrTP", "SecTP"}, 8));
    trace.events.push_back(make_event("e3", {"Splenomeg"}, 4, 10));
    trace.events.push_back(make_event("e4", {"Adm"}, 12));
    return trace;
}

// Six-event trace mixing certain days and overlapping intervals:
// a@5, b@[6,10], c@7, d@[8,11], e@9, f@[12,13].
inline UncertainTrace six_event_trace() {
    UncertainTrace trace;
    trace.case_id = "872";
    trace.events.push_back(make_event("e1", {"a"}, 5));
    trace.events.push_back(make_event("e2", {"b"}, 6, 10));
    trace.events.push_back(make_event("e3", {"c"}, 7));
    trace.events.push_back(make_event("e4", {"d"}, 8, 11));
    trace.events.push_back(make_event("e5", {"e"}, 9));
    trace.events.push_back(make_event("e6", {"f"}, 12, 13));
    return trace;
}

// The 100-trace discovery log: 80 certain <a,b,e,f,g,h>, 15 of
// <a,{b,c},[e,f],g,i>, 5 of <a,{b,c,d},[e,f],g,j~> with j indeterminate.
// Certain events sit on a day grid; the [e,f] pair overlaps.
inline UncertainLog discovery_log() {
    UncertainLog log;
    int next_case = 1;
    const auto add = [&](int copies, const std::vector<std::string>& second,
                         bool overlap_mid, const std::string& last, bool last_indet) {
        for (int c = 0; c < copies; ++c) {
            UncertainTrace trace;
            trace.case_id = "c" + std::to_string(next_case++);
            trace.events.push_back(make_event("e1", {"a"}, 10));
            trace.events.push_back(make_event("e2", second, 20));
            if (overlap_mid) {
                trace.events.push_back(make_event("e3", {"e"}, 30, 45));
                trace.events.push_back(make_event("e4", {"f"}, 35, 50));
            } else {
                trace.events.push_back(make_event("e3", {"e"}, 30));
                trace.events.push_back(make_event("e4", {"f"}, 40));
            }
            trace.events.push_back(make_event("e5", {"g"}, 60));
            trace.events.push_back(make_event("e6", {last}, 70, 70, last_indet));
            log.traces.push_back(std::move(trace));
        }
    };
    add(80, {"b"}, false, "h", false);
    add(15, {"b", "c"}, true, "i", false);
    add(5, {"b", "c", "d"}, true, "j", true);
    return log;
}

}  // namespace ubg::testing
