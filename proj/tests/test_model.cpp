#include <doctest.h>

#include "support/fixtures.hpp"
#include "ubg/model.hpp"

using namespace ubg;

TEST_CASE("make_event canonicalizes the activity set") {
    const auto event = make_event("e1", {"b", "a", "b"}, 1, 2);
    CHECK(event.activities == std::vector<std::string>{"a", "b"});
    CHECK(event.t_min == 1);
    CHECK(event.t_max == 2);
    CHECK_FALSE(event.indeterminate);
}

TEST_CASE("make_event rejects invalid fields") {
    CHECK_THROWS_AS(make_event("", {"a"}, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_event("e1", {}, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_event("e1", {"a"}, 2, 1), std::invalid_argument);
}

TEST_CASE("precedes is the strict interval order") {
    const auto trace = testing::clinical_trace();
    const auto& e1 = trace.events[0];
    const auto& e2 = trace.events[1];
    const auto& e3 = trace.events[2];
    const auto& e4 = trace.events[3];

    CHECK(precedes(e1, e2));   // 5 < 8
    CHECK(precedes(e1, e4));   // 5 < 12
    CHECK(precedes(e2, e4));   // 8 < 12
    CHECK(precedes(e3, e4));   // 10 < 12
    CHECK_FALSE(precedes(e1, e3));  // 5 < 4 fails: overlap
    CHECK_FALSE(precedes(e3, e1));
    CHECK_FALSE(precedes(e2, e3));
    CHECK_FALSE(precedes(e1, e1));
}

TEST_CASE("touching intervals stay unordered") {
    const auto a = make_event("a", {"x"}, 0, 5);
    const auto b = make_event("b", {"x"}, 5, 9);
    CHECK_FALSE(precedes(a, b));
    CHECK_FALSE(precedes(b, a));
    const auto c = make_event("c", {"x"}, 6, 6);
    CHECK(precedes(a, c));
}

TEST_CASE("rank_order sorts by t_min, ties by id") {
    UncertainTrace trace;
    trace.case_id = "t";
    trace.events.push_back(make_event("z", {"a"}, 3, 9));
    trace.events.push_back(make_event("m", {"a"}, 1, 4));
    trace.events.push_back(make_event("k", {"a"}, 3, 3));
    const auto order = rank_order(trace);
    REQUIRE(order.size() == 3);
    CHECK(trace.events[order[0]].id == "m");
    CHECK(trace.events[order[1]].id == "k");  // tie at 3: id order
    CHECK(trace.events[order[2]].id == "z");
}

TEST_CASE("validate_trace flags structural problems") {
    UncertainTrace trace;
    trace.case_id = "bad";
    trace.events.push_back({"e1", {"a"}, 0, 1, false});
    trace.events.push_back({"e1", {"b|c"}, 2, 1, false});  // dup id, bad label, bad interval
    trace.events.push_back({"e2", {}, 0, 0, false});
    trace.events.push_back({"e3", {"b", "a"}, 0, 0, false});  // not canonical

    const auto issues = validate_trace(trace);
    REQUIRE(issues.size() == 5);
    CHECK(issues[0].message == "duplicate event id");
    CHECK(issues[1].message == "'|' not allowed in activity label");
    CHECK(issues[2].message == "t_min > t_max");
    CHECK(issues[3].message == "empty activity set");
    CHECK(issues[4].message == "activity set not canonical (sorted, unique)");
}

TEST_CASE("validate_log flags duplicate case ids") {
    UncertainLog log;
    log.traces.push_back({"c1", {make_event("e1", {"a"}, 0, 0)}});
    log.traces.push_back({"c1", {make_event("e1", {"a"}, 0, 0)}});
    const auto issues = validate_log(log);
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].case_id == "c1");
    CHECK(issues[0].message == "duplicate case id");
}

TEST_CASE("clean traces and logs validate") {
    CHECK(validate_trace(testing::clinical_trace()).empty());
    CHECK(validate_trace(testing::six_event_trace()).empty());
    UncertainLog log;
    log.traces.push_back(testing::clinical_trace());
    log.traces.push_back(testing::six_event_trace());
    CHECK(validate_log(log).empty());
}
