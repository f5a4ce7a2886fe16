#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ubg/model.hpp"
#include "ubg/realizations.hpp"

namespace ubg {

// Artificial endpoint labels adjoined to every realization.
inline constexpr const char* kStartLabel = "START";
inline constexpr const char* kEndLabel = "END";

// Per-trace contribution of one label pair: does the pair appear directly
// following in every realization (always) or in at least one (sometimes)?
struct DfContribution {
    bool always = false;
    bool sometimes = false;

    bool operator==(const DfContribution&) const = default;
};

using DfEdge = std::pair<std::string, std::string>;

// Directly-follows contributions of one trace over its realizations, with
// START prepended and END appended to each. Throws EnumerationLimitError
// when the trace exceeds the limits.
std::map<DfEdge, DfContribution> trace_df_bounds(
    const UncertainTrace& trace, const EnumerationLimits& limits = {});

// Uncertain directly-follows graph: for every label pair, how many traces
// certainly exhibit it (min) and how many possibly do (max). Pairs with
// max == 0 are not stored.
struct Udfg {
    struct Bounds {
        std::uint64_t min_count = 0;
        std::uint64_t max_count = 0;

        bool operator==(const Bounds&) const = default;
    };

    std::set<std::string> activities;  // labels seen in the log, endpoints excluded
    std::map<DfEdge, Bounds> edges;

    bool operator==(const Udfg&) const = default;
};

// Sums per-trace contributions over the log, one count per trace
// occurrence. Traces that exceed the limits are skipped and their case
// ids appended to *skipped (never silently dropped: pass nullptr only
// when over-limit traces should raise instead).
Udfg build_udfg(const UncertainLog& log, const EnumerationLimits& limits = {},
                std::vector<std::string>* skipped = nullptr);

enum class FilterPolicy { ByMin, ByMax };

// Keeps edges whose chosen bound is >= threshold. Activity set is kept
// as-is; filtering prunes edges only.
Udfg filter_udfg(const Udfg& graph, std::uint64_t threshold, FilterPolicy policy);

}  // namespace ubg
