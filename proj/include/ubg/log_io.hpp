#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ubg/graph.hpp"
#include "ubg/model.hpp"
#include "ubg/udfg.hpp"

namespace ubg {

enum class LogFormat { Csv, Jsonl };

// Thrown for malformed input; what() names the line and problem.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& message);

    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

// Picks the format from the file extension (.csv / .jsonl), defaulting to
// CSV for anything else.
LogFormat format_from_path(const std::string& path);

// CSV: header row case_id,event_id,activities,t_min,t_max,indeterminate,
// one event per row, activities "|"-separated, indeterminacy "!" (no) or
// "?" (yes). Rows are grouped into traces by case_id; case order follows
// first appearance, events keep file order. Timestamps are raw integers
// or ISO-8601 instants, normalized to integer nanoseconds.
//
// JSONL: one trace object per line,
// {"case_id": ..., "events": [{"event_id", "activities", "t_min",
// "t_max", "indeterminate"}, ...]} with indeterminate as a bool.
//
// Both readers run validate_log and throw ParseError on any issue.
UncertainLog read_log(std::istream& in, LogFormat format);
UncertainLog read_log_file(const std::string& path, LogFormat format);

void write_log(std::ostream& out, const UncertainLog& log, LogFormat format);
void write_log_file(const std::string& path, const UncertainLog& log, LogFormat format);

// Timestamp field syntax shared by both formats: decimal integer, or
// ISO-8601 instant like 2011-12-03T10:15:30Z (fractional seconds allowed,
// offset required), converted to nanoseconds since the Unix epoch.
Timestamp parse_timestamp(const std::string& text);

// Deterministic DOT for one behavior graph: digraph with nodes n1..nN in
// rank order, labels show the activity set, indeterminate nodes get a
// dashed border.
std::string write_dot(const BehaviorGraph& graph);

// Deterministic DOT for a UDFG: one node per label plus START/END, edges
// annotated "[min, max]".
std::string write_udfg_dot(const Udfg& graph);

// CSV "source,target,min,max" with header, edges in map order.
std::string write_udfg_csv(const Udfg& graph);

}  // namespace ubg
