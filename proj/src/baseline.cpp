#include "ubg/baseline.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ubg {

BehaviorGraph full_precedence_graph(const UncertainTrace& trace) {
    const auto order = rank_order(trace);
    const auto n = order.size();

    BehaviorGraph graph;
    graph.nodes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& event = trace.events[order[i]];
        graph.nodes.push_back({static_cast<Rank>(i + 1), event.activities, event.indeterminate});
    }

    // Ranks ascend with t_min, so a higher rank can never end before a
    // lower rank begins; only i < j pairs need checking.
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = trace.events[order[i]];
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& b = trace.events[order[j]];
            if (precedes(a, b))
                graph.edges.emplace_back(static_cast<Rank>(i + 1), static_cast<Rank>(j + 1));
        }
    }
    normalize_edges(graph.edges);
    return graph;
}

BehaviorGraph transitive_reduction(const BehaviorGraph& graph) {
    if (!is_acyclic(graph)) throw std::invalid_argument("transitive_reduction: graph has a cycle");

    const auto n = graph.node_count();
    const auto adj = adjacency(graph);

    // Per vertex: depth-first reachability from each of its successors'
    // successors marks every node at the end of a >= 2 step path; edges
    // into marked nodes are implied and dropped. One O(V + E) walk per
    // vertex, O(V * E) overall.  Plain adjacency walks on purpose: this
    // builder is the reference point the sweep construction is measured
    // against, so it should cost what the textbook says it costs.
    std::vector<std::uint8_t> reached(n + 1, 0);
    std::vector<Rank> stack;

    BehaviorGraph reduced;
    reduced.nodes = graph.nodes;
    for (std::size_t u = 1; u <= n; ++u) {
        if (adj[u - 1].empty()) continue;
        std::fill(reached.begin(), reached.end(), 0);
        for (Rank v : adj[u - 1]) {
            for (Rank s : adj[v - 1]) {
                if (reached[s]) continue;
                stack.push_back(s);
                reached[s] = 1;
                while (!stack.empty()) {
                    Rank top = stack.back();
                    stack.pop_back();
                    for (Rank next : adj[top - 1]) {
                        if (!reached[next]) {
                            reached[next] = 1;
                            stack.push_back(next);
                        }
                    }
                }
            }
        }
        for (Rank v : adj[u - 1])
            if (!reached[v]) reduced.edges.emplace_back(static_cast<Rank>(u), v);
    }
    normalize_edges(reduced.edges);
    return reduced;
}

TraceGraph build_behavior_graph_baseline(const UncertainTrace& trace) {
    const auto order = rank_order(trace);
    TraceGraph result;
    result.graph = transitive_reduction(full_precedence_graph(trace));
    result.event_ids.reserve(order.size());
    for (auto idx : order) result.event_ids.push_back(trace.events[idx].id);
    return result;
}

}  // namespace ubg
