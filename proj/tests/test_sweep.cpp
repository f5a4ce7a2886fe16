#include <doctest.h>

#include <random>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "ubg/baseline.hpp"
#include "ubg/sweep.hpp"
#include "ubg/synthgen.hpp"

using namespace ubg;
using namespace ubg::testing;

namespace {

struct ListEntry {
    Rank rank;
    std::vector<std::string> activities;
    bool indeterminate;
    BoundKind kind;
};

std::vector<ListEntry> flatten(const TimestampList& list) {
    std::vector<ListEntry> flat;
    for (const auto& entry : list.entries) {
        const auto& info = list.events[entry.rank - 1];
        flat.push_back({entry.rank, info.activities, info.indeterminate, entry.kind});
    }
    return flat;
}

}  // namespace

TEST_CASE("timestamp list of the six-event trace, element for element") {
    const auto list = timestamp_list(six_event_trace());
    REQUIRE(list.events.size() == 6);
    REQUIRE(list.entries.size() == 12);

    const auto flat = flatten(list);
    const std::vector<ListEntry> expected = {
        {1, {"a"}, false, BoundKind::Min}, {1, {"a"}, false, BoundKind::Max},
        {2, {"b"}, false, BoundKind::Min}, {3, {"c"}, false, BoundKind::Min},
        {3, {"c"}, false, BoundKind::Max}, {4, {"d"}, false, BoundKind::Min},
        {5, {"e"}, false, BoundKind::Min}, {5, {"e"}, false, BoundKind::Max},
        {2, {"b"}, false, BoundKind::Max}, {4, {"d"}, false, BoundKind::Max},
        {6, {"f"}, false, BoundKind::Min}, {6, {"f"}, false, BoundKind::Max},
    };
    REQUIRE(flat.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CAPTURE(i);
        CHECK(flat[i].rank == expected[i].rank);
        CHECK(flat[i].activities == expected[i].activities);
        CHECK(flat[i].indeterminate == expected[i].indeterminate);
        CHECK(flat[i].kind == expected[i].kind);
    }

    // ranks follow t_min order: e1..e6 in id order for this trace
    CHECK(list.event_ids ==
          std::vector<std::string>{"e1", "e2", "e3", "e4", "e5", "e6"});
}

TEST_CASE("timestamp list of the clinical trace") {
    const auto list = timestamp_list(clinical_trace());
    // ranks: e3 (t_min 4) = 1, e1 = 2, e2 = 3, e4 = 4
    CHECK(list.event_ids == std::vector<std::string>{"e3", "e1", "e2", "e4"});

    const std::vector<TimestampListEntry> expected = {
        {1, BoundKind::Min},  // e3 at 4
        {2, BoundKind::Min}, {2, BoundKind::Max},  // e1 at 5
        {3, BoundKind::Min}, {3, BoundKind::Max},  // e2 at 8
        {1, BoundKind::Max},                       // e3 at 10
        {4, BoundKind::Min}, {4, BoundKind::Max},  // e4 at 12
    };
    CHECK(list.entries == expected);
    CHECK(list.events[1].indeterminate);  // e1 carries its flag
    CHECK(list.events[2].activities == std::vector<std::string>{"PrTP", "SecTP"});
}

TEST_CASE("single event trace lists MIN then MAX") {
    UncertainTrace trace;
    trace.case_id = "t";
    trace.events.push_back(make_event("only", {"A"}, 7, true));
    const auto list = timestamp_list(trace);
    CHECK(list.entries == std::vector<TimestampListEntry>{{1, BoundKind::Min}, {1, BoundKind::Max}});
    CHECK(list.events[0].indeterminate);
}

TEST_CASE("behavior graph of the clinical trace") {
    const auto built = build_behavior_graph(clinical_trace());
    CHECK(id_edges(built) == IdEdgeSet{{"e1", "e2"}, {"e2", "e4"}, {"e3", "e4"}});
    REQUIRE(built.graph.node_count() == 4);
    CHECK(built.graph.nodes[1].indeterminate);  // rank 2 is e1
    CHECK(built.graph.nodes[1].activities == std::vector<std::string>{"NightSweats"});
}

TEST_CASE("behavior graph of the six-event trace") {
    const auto built = build_behavior_graph(six_event_trace());
    CHECK(id_edges(built) == IdEdgeSet{{"e1", "e2"},
                                       {"e1", "e3"},
                                       {"e3", "e4"},
                                       {"e3", "e5"},
                                       {"e2", "e6"},
                                       {"e4", "e6"},
                                       {"e5", "e6"}});
    // in rank terms per the node numbering
    CHECK(built.graph.edges == std::vector<Edge>{{1, 2}, {1, 3}, {2, 6}, {3, 4}, {3, 5}, {4, 6}, {5, 6}});
}

TEST_CASE("empty trace builds an empty graph") {
    const auto built = build_behavior_graph(UncertainTrace{"empty", {}});
    CHECK(built.graph.node_count() == 0);
    CHECK(built.graph.edge_count() == 0);
}

TEST_CASE("touching intervals never connect") {
    UncertainTrace trace;
    trace.case_id = "t";
    trace.events.push_back(make_event("a", {"x"}, 0, 5));
    trace.events.push_back(make_event("b", {"x"}, 5, 5));
    trace.events.push_back(make_event("c", {"x"}, 5, 9));
    const auto built = build_behavior_graph(trace);
    CHECK(built.graph.edges.empty());
}

TEST_CASE("point intervals at equal timestamps stay unordered") {
    UncertainTrace trace;
    trace.case_id = "t";
    trace.events.push_back(make_event("a", {"x"}, 3, 3));
    trace.events.push_back(make_event("b", {"x"}, 3, 3));
    trace.events.push_back(make_event("c", {"x"}, 4, 4));
    const auto built = build_behavior_graph(trace);
    CHECK(id_edges(built) == IdEdgeSet{{"a", "c"}, {"b", "c"}});
}

TEST_CASE("worst case trace builds complete bipartite graphs") {
    const auto built = build_behavior_graph(worst_case_trace(4));
    REQUIRE(built.graph.node_count() == 8);
    CHECK(built.graph.edge_count() == 16);
    for (Rank src = 1; src <= 4; ++src)
        for (Rank dst = 5; dst <= 8; ++dst)
            CHECK(std::count(built.graph.edges.begin(), built.graph.edges.end(), Edge{src, dst}) == 1);
}

TEST_CASE("certain distinct timestamps build a chain") {
    UncertainTrace trace;
    trace.case_id = "t";
    for (int i = 0; i < 9; ++i)
        trace.events.push_back(make_event("e" + std::to_string(i + 1), {"x"}, 10 * i));
    const auto built = build_behavior_graph(trace);
    REQUIRE(built.graph.edge_count() == 8);
    for (Rank r = 1; r <= 8; ++r) CHECK(built.graph.edges[r - 1] == Edge{r, static_cast<Rank>(r + 1)});
}

TEST_CASE("exhaustive small intervals: sweep matches the defining condition") {
    // All interval placements of 3 events over a 4-point grid, and all
    // placements of 4 events over a 3-point grid: every overlap, tie and
    // containment pattern at these sizes.
    const auto check_all = [](int points, int n_events) {
        std::vector<std::pair<Timestamp, Timestamp>> intervals;
        for (Timestamp lo = 0; lo < points; ++lo)
            for (Timestamp hi = lo; hi < points; ++hi) intervals.push_back({lo, hi});

        std::vector<std::size_t> pick(n_events, 0);
        std::size_t checked = 0;
        while (true) {
            UncertainTrace trace;
            trace.case_id = "grid";
            for (int i = 0; i < n_events; ++i)
                trace.events.push_back(make_event("e" + std::to_string(i + 1), {"x"},
                                                  intervals[pick[i]].first,
                                                  intervals[pick[i]].second));
            const auto built = build_behavior_graph(trace);
            REQUIRE(id_edges(built) == oracle_reduced_edges(trace));
            REQUIRE(is_acyclic(built.graph));
            ++checked;

            std::size_t digit = 0;
            while (digit < pick.size()) {
                if (++pick[digit] < intervals.size()) break;
                pick[digit] = 0;
                ++digit;
            }
            if (digit == pick.size()) break;
        }
        return checked;
    };
    CHECK(check_all(4, 3) == 1000);  // 10 intervals ^ 3
    CHECK(check_all(3, 4) == 1296);  // 6 intervals ^ 4
}

TEST_CASE("randomized traces: sweep equals baseline and the defining condition") {
    std::mt19937_64 rng(20240817);
    for (int round = 0; round < 3000; ++round) {
        const auto trace = random_trace(rng, 2 + round % 8);
        const auto built = build_behavior_graph(trace);
        const auto reference = build_behavior_graph_baseline(trace);
        CAPTURE(round);
        REQUIRE(built.graph == reference.graph);
        REQUIRE(built.event_ids == reference.event_ids);
        REQUIRE(id_edges(built) == oracle_reduced_edges(trace));
    }
}

TEST_CASE("random graphs are transitively reduced and small enough") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 500; ++round) {
        const std::size_t n = 2 + round % 9;
        const auto trace = random_trace(rng, n);
        const auto built = build_behavior_graph(trace);
        // no edge implied by a longer path
        CHECK(transitive_reduction(built.graph) == built.graph);
        // maximum edges: complete bipartite split
        CHECK(built.graph.edge_count() <= (n / 2) * ((n + 1) / 2));
    }
}
