#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ubg/graph.hpp"
#include "ubg/model.hpp"
#include "ubg/sweep.hpp"

namespace ubg {

// Canonical byte serialization of a timestamp list's shape (events'
// attributes + boundary order, ids excluded). Two traces share a key
// exactly when they share a behavior graph, so the key is compared in
// full rather than hashed-and-trusted.
using VariantKey = std::string;

VariantKey variant_key(const TimestampList& list);

struct Variant {
    VariantKey key;
    BehaviorGraph graph;
    std::uint64_t multiplicity = 0;
    std::vector<std::string> case_ids;  // in log order
};

struct VariantMultiset {
    std::vector<Variant> variants;  // multiplicity desc, then key bytes asc

    std::uint64_t trace_count() const;
    std::size_t variant_count() const { return variants.size(); }
};

// Groups the log's traces by variant key and builds one behavior graph
// per group (with the sweep builder). With threads > 1 the per-trace
// lists are computed in parallel; grouping stays sequential so the result
// is identical for any thread count.
VariantMultiset process_log(const UncertainLog& log, unsigned threads = 1);

struct VariantStats {
    std::uint64_t trace_count = 0;
    std::uint64_t variant_count = 0;
    // Approximate heap bytes for storing one graph per variant vs one per
    // trace. Same estimator on both sides, so the ratio is meaningful.
    std::uint64_t graph_bytes_deduplicated = 0;
    std::uint64_t graph_bytes_naive = 0;
};

VariantStats variant_stats(const VariantMultiset& multiset);

// Estimator used by variant_stats: node + edge payload of one graph.
std::uint64_t graph_heap_bytes(const BehaviorGraph& graph);

// One line per variant: variant_index,multiplicity,num_events,num_edges
// (ordered as in the multiset, index starting at 1), with a header.
std::string variant_report_csv(const VariantMultiset& multiset);

}  // namespace ubg
