#include "ubg/log_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace ubg {
namespace {

constexpr const char* kCsvHeader = "case_id,event_id,activities,t_min,t_max,indeterminate";
constexpr std::int64_t kNsPerSecond = 1'000'000'000;

bool parse_int(std::string_view text, std::int64_t& value) {
    if (text.empty()) return false;
    const auto* begin = text.data();
    const auto* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    return ec == std::errc() && ptr == end;
}

// Days since 1970-01-01 for a proleptic Gregorian date (civil calendar
// arithmetic; exact for the full int64 nanosecond range).
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const auto yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

bool in_range(std::int64_t value, std::int64_t lo, std::int64_t hi) {
    return value >= lo && value <= hi;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

LogFormat format_from_path(const std::string& path) {
    const auto dot = path.rfind('.');
    if (dot != std::string::npos && path.substr(dot) == ".jsonl") return LogFormat::Jsonl;
    return LogFormat::Csv;
}

Timestamp parse_timestamp(const std::string& text) {
    std::int64_t raw = 0;
    if (parse_int(text, raw)) return raw;

    // ISO-8601 instant: YYYY-MM-DDThh:mm:ss[.f...][Z|+hh:mm|-hh:mm]
    const auto fail = [&]() -> Timestamp {
        throw std::invalid_argument("invalid timestamp '" + text + "'");
    };
    std::string_view s = text;
    const auto take_int = [&](std::size_t count) -> std::int64_t {
        if (s.size() < count) fail();
        std::int64_t value = 0;
        for (std::size_t i = 0; i < count; ++i) {
            if (s[i] < '0' || s[i] > '9') fail();
            value = value * 10 + (s[i] - '0');
        }
        s.remove_prefix(count);
        return value;
    };
    const auto expect = [&](char c) {
        if (s.empty() || s.front() != c) fail();
        s.remove_prefix(1);
    };

    const std::int64_t year = take_int(4);
    expect('-');
    const std::int64_t month = take_int(2);
    expect('-');
    const std::int64_t day = take_int(2);
    if (s.empty() || (s.front() != 'T' && s.front() != 't')) fail();
    s.remove_prefix(1);
    const std::int64_t hour = take_int(2);
    expect(':');
    const std::int64_t minute = take_int(2);
    expect(':');
    const std::int64_t second = take_int(2);

    std::int64_t nanos = 0;
    if (!s.empty() && s.front() == '.') {
        s.remove_prefix(1);
        std::size_t digits = 0;
        while (digits < s.size() && s[digits] >= '0' && s[digits] <= '9') ++digits;
        if (digits == 0 || digits > 9) fail();
        for (std::size_t i = 0; i < 9; ++i)
            nanos = nanos * 10 + (i < digits ? s[i] - '0' : 0);
        s.remove_prefix(digits);
    }

    std::int64_t offset_seconds = 0;
    if (s == "Z" || s == "z") {
        s = {};
    } else if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        const int sign = s.front() == '+' ? 1 : -1;
        s.remove_prefix(1);
        const std::int64_t oh = take_int(2);
        expect(':');
        const std::int64_t om = take_int(2);
        if (!in_range(oh, 0, 23) || !in_range(om, 0, 59)) fail();
        offset_seconds = sign * (oh * 3600 + om * 60);
    } else {
        fail();
    }
    if (!s.empty()) fail();

    if (!in_range(month, 1, 12) || !in_range(day, 1, 31) || !in_range(hour, 0, 23) ||
        !in_range(minute, 0, 59) || !in_range(second, 0, 60))
        fail();

    const std::int64_t days = days_from_civil(year, static_cast<unsigned>(month),
                                              static_cast<unsigned>(day));
    const std::int64_t seconds =
        days * 86400 + hour * 3600 + minute * 60 + second - offset_seconds;
    return seconds * kNsPerSecond + nanos;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

void check_writable_field(const std::string& value, const char* what) {
    if (value.find_first_of(",\n\r") != std::string::npos)
        throw std::invalid_argument(std::string(what) + " '" + value +
                                    "' contains characters the CSV format cannot carry");
}

struct LogBuilder {
    UncertainLog log;
    std::map<std::string, std::size_t> case_index;

    UncertainTrace& trace_for(const std::string& case_id) {
        auto [it, inserted] = case_index.try_emplace(case_id, log.traces.size());
        if (inserted) log.traces.push_back({case_id, {}});
        return log.traces[it->second];
    }
};

void validate_parsed(const UncertainLog& log) {
    const auto issues = validate_log(log);
    if (issues.empty()) return;
    const auto& issue = issues.front();
    std::string message;
    if (!issue.case_id.empty()) message += "case " + issue.case_id + ": ";
    if (!issue.event_id.empty()) message += "event " + issue.event_id + ": ";
    message += issue.message;
    if (issues.size() > 1)
        message += " (and " + std::to_string(issues.size() - 1) + " more issues)";
    throw ParseError(0, message);
}

UncertainLog read_csv(std::istream& in) {
    LogBuilder builder;
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!saw_header) {
            if (line != kCsvHeader)
                throw ParseError(line_no, "expected header '" + std::string(kCsvHeader) + "'");
            saw_header = true;
            continue;
        }
        const auto fields = split(line, ',');
        if (fields.size() != 6)
            throw ParseError(line_no, "expected 6 comma-separated fields, got " +
                                          std::to_string(fields.size()));
        Timestamp t_min = 0;
        Timestamp t_max = 0;
        try {
            t_min = parse_timestamp(fields[3]);
            t_max = parse_timestamp(fields[4]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
        bool indeterminate = false;
        if (fields[5] == "?")
            indeterminate = true;
        else if (fields[5] != "!")
            throw ParseError(line_no, "unknown indeterminacy symbol '" + fields[5] +
                                          "' (expected '!' or '?')");
        auto activities = split(fields[2], '|');
        try {
            builder.trace_for(fields[0])
                .events.push_back(make_event(fields[1], std::move(activities), t_min, t_max,
                                             indeterminate));
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
    }
    validate_parsed(builder.log);
    return builder.log;
}

UncertainLog read_jsonl(std::istream& in) {
    UncertainLog log;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json object;
        try {
            object = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(line_no, e.what());
        }
        try {
            UncertainTrace trace;
            trace.case_id = object.at("case_id").get<std::string>();
            for (const auto& item : object.at("events")) {
                const auto read_time = [&](const char* key) {
                    const auto& field = item.at(key);
                    if (field.is_number_integer()) return field.get<Timestamp>();
                    return parse_timestamp(field.get<std::string>());
                };
                trace.events.push_back(make_event(
                    item.at("event_id").get<std::string>(),
                    item.at("activities").get<std::vector<std::string>>(), read_time("t_min"),
                    read_time("t_max"), item.at("indeterminate").get<bool>()));
            }
            log.traces.push_back(std::move(trace));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(line_no, e.what());
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
    }
    validate_parsed(log);
    return log;
}

void write_csv(std::ostream& out, const UncertainLog& log) {
    out << kCsvHeader << '\n';
    for (const auto& trace : log.traces) {
        check_writable_field(trace.case_id, "case id");
        for (const auto& event : trace.events) {
            check_writable_field(event.id, "event id");
            std::string joined;
            for (const auto& label : event.activities) {
                check_writable_field(label, "activity label");
                if (label.find('|') != std::string::npos)
                    throw std::invalid_argument("activity label '" + label + "' contains '|'");
                if (!joined.empty()) joined += '|';
                joined += label;
            }
            out << trace.case_id << ',' << event.id << ',' << joined << ',' << event.t_min << ','
                << event.t_max << ',' << (event.indeterminate ? '?' : '!') << '\n';
        }
    }
}

void write_jsonl(std::ostream& out, const UncertainLog& log) {
    for (const auto& trace : log.traces) {
        nlohmann::json events = nlohmann::json::array();
        for (const auto& event : trace.events) {
            events.push_back({{"event_id", event.id},
                              {"activities", event.activities},
                              {"t_min", event.t_min},
                              {"t_max", event.t_max},
                              {"indeterminate", event.indeterminate}});
        }
        const nlohmann::json object = {{"case_id", trace.case_id}, {"events", std::move(events)}};
        out << object.dump() << '\n';
    }
}

std::string quote_dot(const std::string& text) {
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') quoted += '\\';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string activity_set_label(const std::vector<std::string>& activities) {
    if (activities.size() == 1) return activities.front();
    std::string label = "{";
    for (std::size_t i = 0; i < activities.size(); ++i) {
        if (i > 0) label += ", ";
        label += activities[i];
    }
    label += "}";
    return label;
}

}  // namespace

UncertainLog read_log(std::istream& in, LogFormat format) {
    return format == LogFormat::Csv ? read_csv(in) : read_jsonl(in);
}

UncertainLog read_log_file(const std::string& path, LogFormat format) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::ios_base::failure("cannot open " + path + " for reading");
    return read_log(file, format);
}

void write_log(std::ostream& out, const UncertainLog& log, LogFormat format) {
    if (format == LogFormat::Csv)
        write_csv(out, log);
    else
        write_jsonl(out, log);
}

void write_log_file(const std::string& path, const UncertainLog& log, LogFormat format) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::ios_base::failure("cannot open " + path + " for writing");
    write_log(file, log, format);
    file.flush();
    if (!file) throw std::ios_base::failure("error while writing " + path);
}

std::string write_dot(const BehaviorGraph& graph) {
    std::ostringstream out;
    out << "digraph behavior_graph {\n";
    if (!graph.nodes.empty()) out << "  rankdir=LR;\n";
    for (const auto& node : graph.nodes) {
        out << "  n" << node.rank << " [label=" << quote_dot(activity_set_label(node.activities));
        if (node.indeterminate) out << ", style=dashed";
        out << "];\n";
    }
    for (const auto& [src, dst] : graph.edges) out << "  n" << src << " -> n" << dst << ";\n";
    out << "}\n";
    return out.str();
}

std::string write_udfg_dot(const Udfg& graph) {
    std::ostringstream out;
    out << "digraph udfg {\n";
    if (!graph.activities.empty() || !graph.edges.empty()) {
        out << "  rankdir=LR;\n";
        out << "  " << quote_dot(kStartLabel) << " [shape=circle];\n";
        out << "  " << quote_dot(kEndLabel) << " [shape=doublecircle];\n";
    }
    for (const auto& label : graph.activities) out << "  " << quote_dot(label) << ";\n";
    for (const auto& [pair, bounds] : graph.edges) {
        out << "  " << quote_dot(pair.first) << " -> " << quote_dot(pair.second) << " [label=\"["
            << bounds.min_count << ", " << bounds.max_count << "]\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string write_udfg_csv(const Udfg& graph) {
    std::string csv = "source,target,min,max\n";
    for (const auto& [pair, bounds] : graph.edges) {
        csv += pair.first + ',' + pair.second + ',' + std::to_string(bounds.min_count) + ',' +
               std::to_string(bounds.max_count) + '\n';
    }
    return csv;
}

}  // namespace ubg
