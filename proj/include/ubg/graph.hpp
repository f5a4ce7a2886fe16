#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ubg {

// 1-based position of an event in the (t_min, id) ordering of its trace.
using Rank = std::uint32_t;

// Directed edge between ranks.
using Edge = std::pair<Rank, Rank>;

struct GraphNode {
    Rank rank = 0;
    std::vector<std::string> activities;
    bool indeterminate = false;

    bool operator==(const GraphNode&) const = default;
};

// DAG over the ranked events of one trace. In reduced form (the behavior
// graph proper) the edges are the transitive reduction of the interval
// order, i.e. an edge means the target can come right after the source in
// some realization. The baseline builder also uses this struct for the
// unreduced precedence graph.
struct BehaviorGraph {
    std::vector<GraphNode> nodes;  // nodes[i].rank == i + 1
    std::vector<Edge> edges;       // lexicographically sorted, unique

    std::size_t node_count() const { return nodes.size(); }
    std::size_t edge_count() const { return edges.size(); }

    bool operator==(const BehaviorGraph&) const = default;
};

// Sorts edges lexicographically and drops duplicates.
void normalize_edges(std::vector<Edge>& edges);

// Out-neighbors per node; index 0 holds rank 1.
std::vector<std::vector<Rank>> adjacency(const BehaviorGraph& graph);

// In-degree per node; index 0 holds rank 1.
std::vector<std::size_t> in_degrees(const BehaviorGraph& graph);

bool is_acyclic(const BehaviorGraph& graph);

// A behavior graph together with the rank -> event id map of the trace it
// came from. Kept separate so the graph itself stays a pure function of
// the trace's shape and can be shared across identically shaped traces.
struct TraceGraph {
    BehaviorGraph graph;
    std::vector<std::string> event_ids;  // event_ids[rank - 1]
};

}  // namespace ubg
