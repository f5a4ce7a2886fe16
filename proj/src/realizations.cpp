#include "ubg/realizations.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace ubg {
namespace {

// row-major n x n matrix of precedes() over ranked events
std::vector<char> precedes_matrix(const std::vector<const UncertainEvent*>& events) {
    const auto n = events.size();
    std::vector<char> m(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && precedes(*events[i], *events[j])) m[i * n + j] = 1;
    return m;
}

// Backtracking over linear extensions: at each step emit any unused
// element with no unused predecessor. Visits extensions in ascending
// index order of the chosen elements.
template <typename Emit>
void for_each_extension(const std::vector<char>& prec, std::size_t n, std::vector<std::size_t>& prefix,
                        std::vector<char>& used, const Emit& emit) {
    if (prefix.size() == n) {
        emit(prefix);
        return;
    }
    for (std::size_t c = 0; c < n; ++c) {
        if (used[c]) continue;
        bool ready = true;
        for (std::size_t other = 0; other < n; ++other) {
            if (!used[other] && prec[other * n + c]) {
                ready = false;
                break;
            }
        }
        if (!ready) continue;
        used[c] = 1;
        prefix.push_back(c);
        for_each_extension(prec, n, prefix, used, emit);
        prefix.pop_back();
        used[c] = 0;
    }
}

template <typename Emit>
void enumerate_extensions(const std::vector<const UncertainEvent*>& events, const Emit& emit) {
    const auto prec = precedes_matrix(events);
    std::vector<std::size_t> prefix;
    std::vector<char> used(events.size(), 0);
    prefix.reserve(events.size());
    for_each_extension(prec, events.size(), prefix, used, emit);
}

std::vector<const UncertainEvent*> events_by_rank(const UncertainTrace& trace) {
    std::vector<const UncertainEvent*> events;
    events.reserve(trace.events.size());
    for (auto idx : rank_order(trace)) events.push_back(&trace.events[idx]);
    return events;
}

[[noreturn]] void refuse_size(const char* what, std::size_t size, std::size_t cap) {
    throw EnumerationLimitError(std::string(what) + " has " + std::to_string(size) +
                                " elements, over the enumeration cap of " + std::to_string(cap));
}

}  // namespace

std::vector<std::vector<Rank>> topological_sortings(const BehaviorGraph& graph,
                                                    const EnumerationLimits& limits) {
    const auto n = graph.node_count();
    if (n > limits.max_events) refuse_size("graph", n, limits.max_events);

    std::vector<char> prec(n * n, 0);
    for (const auto& [src, dst] : graph.edges) prec[(src - 1) * n + (dst - 1)] = 1;

    std::vector<std::vector<Rank>> result;
    std::vector<std::size_t> prefix;
    std::vector<char> used(n, 0);
    std::uint64_t count = 0;
    for_each_extension(prec, n, prefix, used, [&](const std::vector<std::size_t>& order) {
        if (++count > limits.max_results)
            throw EnumerationLimitError("more than " + std::to_string(limits.max_results) +
                                        " topological sortings");
        std::vector<Rank> ranks;
        ranks.reserve(order.size());
        for (auto idx : order) ranks.push_back(static_cast<Rank>(idx + 1));
        result.push_back(std::move(ranks));
    });
    return result;
}

std::vector<std::vector<std::string>> order_realizations(const UncertainTrace& trace,
                                                         const EnumerationLimits& limits) {
    if (trace.events.size() > limits.max_events)
        refuse_size("trace", trace.events.size(), limits.max_events);

    const auto events = events_by_rank(trace);
    std::vector<std::vector<std::string>> result;
    std::uint64_t count = 0;
    enumerate_extensions(events, [&](const std::vector<std::size_t>& order) {
        if (++count > limits.max_results)
            throw EnumerationLimitError("more than " + std::to_string(limits.max_results) +
                                        " order realizations");
        std::vector<std::string> ids;
        ids.reserve(order.size());
        for (auto idx : order) ids.push_back(events[idx]->id);
        result.push_back(std::move(ids));
    });
    return result;
}

std::vector<std::vector<std::string>> realizations(const UncertainTrace& trace,
                                                   const EnumerationLimits& limits) {
    if (trace.events.size() > limits.max_events)
        refuse_size("trace", trace.events.size(), limits.max_events);

    const auto events = events_by_rank(trace);
    std::vector<std::size_t> indeterminate;
    for (std::size_t i = 0; i < events.size(); ++i)
        if (events[i]->indeterminate) indeterminate.push_back(i);

    std::set<std::vector<std::string>> unique;
    std::uint64_t emitted = 0;

    // One pass per subset of dropped indeterminate events; the retained
    // events keep their interval order semantics.
    const std::size_t subsets = std::size_t{1} << indeterminate.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::vector<char> dropped(events.size(), 0);
        for (std::size_t bit = 0; bit < indeterminate.size(); ++bit)
            if (mask & (std::size_t{1} << bit)) dropped[indeterminate[bit]] = 1;

        std::vector<const UncertainEvent*> retained;
        for (std::size_t i = 0; i < events.size(); ++i)
            if (!dropped[i]) retained.push_back(events[i]);

        enumerate_extensions(retained, [&](const std::vector<std::size_t>& order) {
            // Odometer over one label choice per retained event.
            std::vector<std::size_t> choice(order.size(), 0);
            while (true) {
                if (++emitted > limits.max_results)
                    throw EnumerationLimitError("more than " + std::to_string(limits.max_results) +
                                                " realizations before deduplication");
                std::vector<std::string> labels;
                labels.reserve(order.size());
                for (std::size_t pos = 0; pos < order.size(); ++pos)
                    labels.push_back(retained[order[pos]]->activities[choice[pos]]);
                unique.insert(std::move(labels));

                std::size_t digit = 0;
                while (digit < order.size()) {
                    if (++choice[digit] < retained[order[digit]]->activities.size()) break;
                    choice[digit] = 0;
                    ++digit;
                }
                if (digit == order.size()) break;
            }
        });
        // retained.empty() still emits once: the empty sequence is the
        // realization of a trace whose events were all dropped.
    }

    return {unique.begin(), unique.end()};
}

}  // namespace ubg
