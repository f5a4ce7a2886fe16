#include "ubg/variants.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <thread>

namespace ubg {
namespace {

void append_u32(std::string& out, std::uint32_t value) {
    for (int shift = 0; shift < 32; shift += 8)
        out.push_back(static_cast<char>((value >> shift) & 0xFF));
}

void append_str(std::string& out, const std::string& value) {
    append_u32(out, static_cast<std::uint32_t>(value.size()));
    out += value;
}

}  // namespace

VariantKey variant_key(const TimestampList& list) {
    // Fixed-width length-prefixed binary: unambiguous, so key equality is
    // exactly shape equality (no hashing involved).
    std::string key;
    append_u32(key, static_cast<std::uint32_t>(list.events.size()));
    for (const auto& event : list.events) {
        key.push_back(event.indeterminate ? '\1' : '\0');
        append_u32(key, static_cast<std::uint32_t>(event.activities.size()));
        for (const auto& label : event.activities) append_str(key, label);
    }
    for (const auto& entry : list.entries) {
        append_u32(key, entry.rank);
        key.push_back(entry.kind == BoundKind::Max ? '\1' : '\0');
    }
    return key;
}

std::uint64_t VariantMultiset::trace_count() const {
    std::uint64_t total = 0;
    for (const auto& variant : variants) total += variant.multiplicity;
    return total;
}

VariantMultiset process_log(const UncertainLog& log, unsigned threads) {
    const auto n = log.traces.size();
    std::vector<TimestampList> lists(n);

    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) lists[i] = timestamp_list(log.traces[i]);
    } else {
        // Lists are independent per trace; the sequential grouping below
        // keeps the result identical for any thread count.
        const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(n));
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < n; i += workers) lists[i] = timestamp_list(log.traces[i]);
            });
        }
        for (auto& worker : pool) worker.join();
    }

    VariantMultiset result;
    std::map<VariantKey, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) {
        auto key = variant_key(lists[i]);
        auto [it, inserted] = index.try_emplace(std::move(key), result.variants.size());
        if (inserted) {
            Variant variant;
            variant.key = it->first;
            variant.graph = behavior_graph(lists[i]);  // once per distinct shape
            result.variants.push_back(std::move(variant));
        }
        auto& variant = result.variants[it->second];
        ++variant.multiplicity;
        variant.case_ids.push_back(log.traces[i].case_id);
    }

    std::stable_sort(result.variants.begin(), result.variants.end(),
                     [](const Variant& a, const Variant& b) {
                         if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
                         return a.key < b.key;
                     });
    return result;
}

std::uint64_t graph_heap_bytes(const BehaviorGraph& graph) {
    // Canonical serialized size: count fields as fixed-width, strings
    // length-prefixed. Applied uniformly, so naive/dedup ratios compare
    // like for like.
    std::uint64_t bytes = 4;  // node count
    for (const auto& node : graph.nodes) {
        bytes += 4 + 1 + 4;  // rank, indeterminacy, label count
        for (const auto& label : node.activities) bytes += 4 + label.size();
    }
    bytes += 4;  // edge count
    bytes += std::uint64_t{8} * graph.edges.size();
    return bytes;
}

VariantStats variant_stats(const VariantMultiset& multiset) {
    VariantStats stats;
    for (const auto& variant : multiset.variants) {
        const auto bytes = graph_heap_bytes(variant.graph);
        stats.trace_count += variant.multiplicity;
        stats.variant_count += 1;
        stats.graph_bytes_deduplicated += bytes;
        stats.graph_bytes_naive += bytes * variant.multiplicity;
    }
    return stats;
}

std::string variant_report_csv(const VariantMultiset& multiset) {
    std::string csv = "variant_index,multiplicity,num_events,num_edges\n";
    std::size_t i = 1;
    for (const auto& variant : multiset.variants) {
        csv += std::to_string(i++) + ',' + std::to_string(variant.multiplicity) + ',' +
               std::to_string(variant.graph.node_count()) + ',' +
               std::to_string(variant.graph.edge_count()) + '\n';
    }
    return csv;
}

}  // namespace ubg
