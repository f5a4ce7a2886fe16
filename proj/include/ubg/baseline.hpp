#pragma once

#include "ubg/graph.hpp"
#include "ubg/model.hpp"

namespace ubg {

// Every ordered pair, materialized: edge (a, b) for each a that ends
// strictly before b begins. Quadratic output in the worst case; this is
// the input the baseline reduces.
BehaviorGraph full_precedence_graph(const UncertainTrace& trace);

// Generic transitive reduction for an arbitrary DAG: per vertex, walk the
// graph to collect reachable descendants, then drop every edge whose
// target is reachable through another successor. Deliberately the
// textbook cubic routine so the baseline's cost is honest; the sweep
// builder exists to beat it. Throws std::invalid_argument on a cycle.
BehaviorGraph transitive_reduction(const BehaviorGraph& graph);

// full_precedence_graph + transitive_reduction, keeping the rank -> id
// map. Reference implementation for cross-checking the sweep builder.
TraceGraph build_behavior_graph_baseline(const UncertainTrace& trace);

}  // namespace ubg
