#include "sorec/trace.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "sorec/errors.hpp"

namespace sorec {

ContactRecord ContactRecord::make(NodeId a, NodeId b, TimeSlot t_start, TimeSlot t_end) {
    if (a == b)
        throw ValidationError("self-contact rejected: node " + std::to_string(a));
    if (t_start < 0)
        throw ValidationError("negative start time " + std::to_string(t_start));
    if (t_start >= t_end)
        throw ValidationError("empty or inverted contact interval [" + std::to_string(t_start) +
                              "," + std::to_string(t_end) + ")");
    ContactRecord r;
    r.a = std::min(a, b);
    r.b = std::max(a, b);
    r.t_start = t_start;
    r.t_end = t_end;
    return r;
}

ObservationWindow ObservationWindow::make(TimeSlot begin, TimeSlot end) {
    if (begin >= end)
        throw ValidationError("observation window [" + std::to_string(begin) + "," +
                              std::to_string(end) + ") has no length");
    return {begin, end};
}

bool TemporalTrace::has_node(NodeId v) const {
    return std::binary_search(nodes.begin(), nodes.end(), v);
}

TemporalTrace TemporalTrace::make(std::vector<NodeId> nodes, std::vector<ContactRecord> records,
                                  ObservationWindow window) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    std::sort(records.begin(), records.end());
    for (const auto &r : records) {
        if (r.t_start < window.begin || r.t_end > window.end)
            throw ValidationError("record outside observation window");
        if (!std::binary_search(nodes.begin(), nodes.end(), r.a) ||
            !std::binary_search(nodes.begin(), nodes.end(), r.b))
            throw ValidationError("record references a node missing from the node set");
    }
    TemporalTrace t;
    t.nodes = std::move(nodes);
    t.records = std::move(records);
    t.window = window;
    return t;
}

ContactTimeline ContactTimeline::from_encounters(NodePair nodes, std::vector<Interval> encounters) {
    std::sort(encounters.begin(), encounters.end(),
              [](const Interval &x, const Interval &y) { return x.begin < y.begin; });
    for (std::size_t i = 0; i < encounters.size(); ++i) {
        if (encounters[i].length() <= 0)
            throw ValidationError("encounter with non-positive duration");
        if (i > 0 && encounters[i].begin <= encounters[i - 1].end)
            throw ValidationError("encounters overlap or abut; merge them first");
    }
    ContactTimeline t;
    t.nodes = nodes;
    t.encounters = std::move(encounters);
    return t;
}

std::vector<TimeSlot> ContactTimeline::durations() const {
    std::vector<TimeSlot> d;
    d.reserve(encounters.size());
    for (const auto &e : encounters)
        d.push_back(e.length());
    return d;
}

TimeSlot ContactTimeline::total_contact() const {
    TimeSlot sum = 0;
    for (const auto &e : encounters)
        sum += e.length();
    return sum;
}

namespace {

// Split a CSV line, trimming surrounding blanks from each field.
std::vector<std::string> split_fields(const std::string &line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    for (auto &f : out) {
        std::size_t b = f.find_first_not_of(" \t\r");
        std::size_t e = f.find_last_not_of(" \t\r");
        f = (b == std::string::npos) ? std::string{} : f.substr(b, e - b + 1);
    }
    return out;
}

bool parse_int(const std::string &f, std::int64_t &out) {
    const char *first = f.data();
    const char *last = f.data() + f.size();
    auto res = std::from_chars(first, last, out);
    return res.ec == std::errc{} && res.ptr == last && !f.empty();
}

struct RawRecord {
    std::int64_t a, b, s, e;
};

// A header line has no numeric field at all; a data line with one stray
// word in it does not qualify and gets reported as malformed instead.
bool looks_like_header(const std::vector<std::string> &fields) {
    std::int64_t ignored;
    for (const auto &f : fields)
        if (parse_int(f, ignored))
            return false;
    return !fields.empty();
}

// Core line reader shared by the windowed and window-inferring parsers.
std::vector<RawRecord> read_records(std::istream &text) {
    std::vector<RawRecord> raw;
    std::string line;
    std::size_t line_no = 0;
    bool seen_data = false;
    while (std::getline(text, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        auto fields = split_fields(line);
        // One optional column-header line is tolerated before any data.
        if (!seen_data && looks_like_header(fields))
            continue;
        if (fields.size() != 4)
            throw ParseError("line " + std::to_string(line_no) + ": expected 4 fields, got " +
                             std::to_string(fields.size()));
        std::int64_t v[4];
        bool ok = true;
        for (int i = 0; i < 4; ++i)
            ok = ok && parse_int(fields[i], v[i]);
        if (!ok)
            throw ParseError("line " + std::to_string(line_no) + ": non-integer field in '" +
                             line + "'");
        seen_data = true;
        if (v[0] < 0 || v[1] < 0 || v[0] > std::numeric_limits<NodeId>::max() ||
            v[1] > std::numeric_limits<NodeId>::max())
            throw ValidationError("line " + std::to_string(line_no) + ": node id out of range");
        try {
            // Validate invariants up front so errors carry the line number.
            ContactRecord::make(static_cast<NodeId>(v[0]), static_cast<NodeId>(v[1]), v[2], v[3]);
        } catch (const ValidationError &err) {
            throw ValidationError("line " + std::to_string(line_no) + ": " + err.what());
        }
        raw.push_back({v[0], v[1], v[2], v[3]});
    }
    return raw;
}

TemporalTrace assemble(const std::vector<RawRecord> &raw, ObservationWindow window) {
    std::vector<ContactRecord> records;
    std::vector<NodeId> nodes;
    for (const auto &r : raw) {
        // Every observed device joins the node set, even when its records
        // fall entirely outside the window.
        nodes.push_back(static_cast<NodeId>(r.a));
        nodes.push_back(static_cast<NodeId>(r.b));
        TimeSlot s = std::max<TimeSlot>(r.s, window.begin);
        TimeSlot e = std::min<TimeSlot>(r.e, window.end);
        if (s >= e)
            continue; // entirely outside the window
        records.push_back(
            ContactRecord::make(static_cast<NodeId>(r.a), static_cast<NodeId>(r.b), s, e));
    }
    return TemporalTrace::make(std::move(nodes), std::move(records), window);
}

} // namespace

TemporalTrace parse_trace(std::istream &text, ObservationWindow window) {
    return assemble(read_records(text), window);
}

TemporalTrace parse_trace(const std::string &text, ObservationWindow window) {
    std::istringstream in(text);
    return parse_trace(in, window);
}

TemporalTrace parse_trace_inferred(std::istream &text) {
    auto raw = read_records(text);
    if (raw.empty())
        throw ValidationError("cannot infer an observation window from a trace with no records");
    TimeSlot lo = raw.front().s, hi = raw.front().e;
    for (const auto &r : raw) {
        lo = std::min(lo, r.s);
        hi = std::max(hi, r.e);
    }
    return assemble(raw, ObservationWindow::make(lo, hi));
}

TemporalTrace load_trace_file(const std::string &path, std::optional<ObservationWindow> window) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open trace file: " + path);
    return window ? parse_trace(in, *window) : parse_trace_inferred(in);
}

void serialize_trace(const TemporalTrace &trace, std::ostream &out,
                     const std::vector<std::string> &comments) {
    for (const auto &c : comments)
        out << "# " << c << "\n";
    for (const auto &r : trace.records)
        out << r.a << ',' << r.b << ',' << r.t_start << ',' << r.t_end << "\n";
}

TimelineMap build_timelines(const TemporalTrace &trace) {
    std::map<NodePair, std::vector<Interval>> raw;
    for (const auto &r : trace.records)
        raw[{r.a, r.b}].push_back(r.interval());

    TimelineMap out;
    for (auto &[pair, ivs] : raw) {
        std::sort(ivs.begin(), ivs.end(),
                  [](const Interval &x, const Interval &y) {
                      return x.begin != y.begin ? x.begin < y.begin : x.end < y.end;
                  });
        std::vector<Interval> merged;
        for (const auto &iv : ivs) {
            // Abutting intervals are one uninterrupted encounter.
            if (!merged.empty() && iv.begin <= merged.back().end)
                merged.back().end = std::max(merged.back().end, iv.end);
            else
                merged.push_back(iv);
        }
        out.emplace(pair, ContactTimeline::from_encounters(pair, std::move(merged)));
    }
    return out;
}

std::pair<TemporalTrace, TemporalTrace> split_window(const TemporalTrace &trace, double fraction) {
    if (!(fraction > 0.0 && fraction < 1.0))
        throw ValidationError("split fraction must lie in (0,1)");
    TimeSlot T = trace.window.length();
    TimeSlot t_split = trace.window.begin + std::llround(fraction * static_cast<double>(T));
    if (t_split <= trace.window.begin || t_split >= trace.window.end)
        throw ValidationError("degenerate split: one side of the window would be empty");

    std::vector<ContactRecord> first, second;
    for (const auto &r : trace.records) {
        if (r.t_end <= t_split) {
            first.push_back(r);
        } else if (r.t_start >= t_split) {
            second.push_back(r);
        } else {
            first.push_back(ContactRecord::make(r.a, r.b, r.t_start, t_split));
            second.push_back(ContactRecord::make(r.a, r.b, t_split, r.t_end));
        }
    }
    auto nodes = trace.nodes; // both sides keep the full observed node set
    auto w1 = ObservationWindow::make(trace.window.begin, t_split);
    auto w2 = ObservationWindow::make(t_split, trace.window.end);
    return {TemporalTrace::make(nodes, std::move(first), w1),
            TemporalTrace::make(nodes, std::move(second), w2)};
}

} // namespace sorec
