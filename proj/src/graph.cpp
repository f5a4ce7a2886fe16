#include "ubg/graph.hpp"

#include <algorithm>

namespace ubg {

void normalize_edges(std::vector<Edge>& edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

std::vector<std::vector<Rank>> adjacency(const BehaviorGraph& graph) {
    std::vector<std::vector<Rank>> out(graph.node_count());
    for (const auto& [src, dst] : graph.edges) out[src - 1].push_back(dst);
    return out;
}

std::vector<std::size_t> in_degrees(const BehaviorGraph& graph) {
    std::vector<std::size_t> in(graph.node_count(), 0);
    for (const auto& edge : graph.edges) ++in[edge.second - 1];
    return in;
}

bool is_acyclic(const BehaviorGraph& graph) {
    // Kahn's algorithm: a DAG can be fully peeled by repeatedly removing
    // in-degree-zero nodes.
    auto adj = adjacency(graph);
    auto in = in_degrees(graph);
    std::vector<Rank> ready;
    for (std::size_t i = 0; i < in.size(); ++i)
        if (in[i] == 0) ready.push_back(static_cast<Rank>(i + 1));
    std::size_t removed = 0;
    while (!ready.empty()) {
        Rank node = ready.back();
        ready.pop_back();
        ++removed;
        for (Rank next : adj[node - 1])
            if (--in[next - 1] == 0) ready.push_back(next);
    }
    return removed == graph.node_count();
}

}  // namespace ubg
