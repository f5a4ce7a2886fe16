#include "ubg/model.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ubg {

void canonicalize_activities(std::vector<std::string>& activities) {
    std::sort(activities.begin(), activities.end());
    activities.erase(std::unique(activities.begin(), activities.end()), activities.end());
}

UncertainEvent make_event(std::string id, std::vector<std::string> activities,
                          Timestamp t_min, Timestamp t_max, bool indeterminate) {
    if (id.empty()) throw std::invalid_argument("event id must not be empty");
    canonicalize_activities(activities);
    if (activities.empty()) throw std::invalid_argument("event " + id + ": empty activity set");
    if (t_min > t_max) throw std::invalid_argument("event " + id + ": t_min > t_max");
    return UncertainEvent{std::move(id), std::move(activities), t_min, t_max, indeterminate};
}

UncertainEvent make_event(std::string id, std::vector<std::string> activities,
                          Timestamp at, bool indeterminate) {
    return make_event(std::move(id), std::move(activities), at, at, indeterminate);
}

std::vector<std::size_t> rank_order(const UncertainTrace& trace) {
    std::vector<std::size_t> order(trace.events.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& ea = trace.events[a];
        const auto& eb = trace.events[b];
        if (ea.t_min != eb.t_min) return ea.t_min < eb.t_min;
        return ea.id < eb.id;
    });
    return order;
}

std::vector<ValidationIssue> validate_trace(const UncertainTrace& trace) {
    std::vector<ValidationIssue> issues;
    std::set<std::string> seen_ids;
    for (const auto& event : trace.events) {
        if (event.id.empty()) {
            issues.push_back({trace.case_id, "", "event with empty id"});
            continue;
        }
        if (!seen_ids.insert(event.id).second)
            issues.push_back({trace.case_id, event.id, "duplicate event id"});
        if (event.activities.empty())
            issues.push_back({trace.case_id, event.id, "empty activity set"});
        for (const auto& label : event.activities) {
            if (label.empty())
                issues.push_back({trace.case_id, event.id, "empty activity label"});
            if (label.find('|') != std::string::npos)
                issues.push_back({trace.case_id, event.id, "'|' not allowed in activity label"});
        }
        auto sorted = event.activities;
        canonicalize_activities(sorted);
        if (sorted != event.activities)
            issues.push_back({trace.case_id, event.id, "activity set not canonical (sorted, unique)"});
        if (event.t_min > event.t_max)
            issues.push_back({trace.case_id, event.id, "t_min > t_max"});
    }
    return issues;
}

std::vector<ValidationIssue> validate_log(const UncertainLog& log) {
    std::vector<ValidationIssue> issues;
    std::set<std::string> seen_cases;
    for (const auto& trace : log.traces) {
        if (trace.case_id.empty()) issues.push_back({"", "", "trace with empty case id"});
        if (!seen_cases.insert(trace.case_id).second)
            issues.push_back({trace.case_id, "", "duplicate case id"});
        auto trace_issues = validate_trace(trace);
        issues.insert(issues.end(), trace_issues.begin(), trace_issues.end());
    }
    return issues;
}

}  // namespace ubg
