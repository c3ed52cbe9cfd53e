#ifndef SOREC_TRACE_HPP
#define SOREC_TRACE_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sorec {

using NodeId = std::uint32_t;
using TimeSlot = std::int64_t;
using NodePair = std::pair<NodeId, NodeId>;

inline NodePair make_pair_canonical(NodeId a, NodeId b) {
    return a < b ? NodePair{a, b} : NodePair{b, a};
}

// Half-open slot interval [begin, end).
struct Interval {
    TimeSlot begin = 0;
    TimeSlot end = 0;

    TimeSlot length() const { return end - begin; }
    bool operator==(const Interval &) const = default;
};

// One encounter between a canonical node pair (a < b) over [t_start, t_end).
struct ContactRecord {
    NodeId a = 0;
    NodeId b = 0;
    TimeSlot t_start = 0;
    TimeSlot t_end = 0;

    // Validates and canonicalizes; throws ValidationError on a self-contact
    // or an empty/inverted interval.
    static ContactRecord make(NodeId a, NodeId b, TimeSlot t_start, TimeSlot t_end);

    Interval interval() const { return {t_start, t_end}; }
    auto operator<=>(const ContactRecord &) const = default;
};

// Finite observation window [begin, end); length() is the T every
// time-normalized quantity is measured against.
struct ObservationWindow {
    TimeSlot begin = 0;
    TimeSlot end = 0;

    static ObservationWindow make(TimeSlot begin, TimeSlot end);
    TimeSlot length() const { return end - begin; }
    bool contains(TimeSlot t) const { return t >= begin && t < end; }
    bool operator==(const ObservationWindow &) const = default;
};

// A batch of contact records over one observation window. Records are kept
// clipped to the window and in canonical sorted order; `nodes` holds every
// observed device, including ones with no surviving record.
struct TemporalTrace {
    std::vector<NodeId> nodes; // sorted, unique
    std::vector<ContactRecord> records;
    ObservationWindow window;

    static TemporalTrace make(std::vector<NodeId> nodes, std::vector<ContactRecord> records,
                              ObservationWindow window);

    std::size_t node_count() const { return nodes.size(); }
    bool has_node(NodeId v) const;
};

// Per-pair merged encounters; overlapping or abutting raw records collapse
// into maximal intervals, so encounters are disjoint with gaps between them.
struct ContactTimeline {
    NodePair nodes{0, 0};
    std::vector<Interval> encounters; // ascending, disjoint, non-abutting

    static ContactTimeline from_encounters(NodePair nodes, std::vector<Interval> encounters);

    std::size_t encounter_count() const { return encounters.size(); } // K
    std::vector<TimeSlot> durations() const;
    TimeSlot total_contact() const; // sum of durations
};

using TimelineMap = std::map<NodePair, ContactTimeline>;

// Parse `node_a,node_b,t_start,t_end` lines. '#' comments, blank lines and
// one optional leading header line are skipped. Records are clipped to the
// window; records entirely outside it are dropped. Malformed lines raise
// ParseError/ValidationError tagged with the line number.
TemporalTrace parse_trace(std::istream &text, ObservationWindow window);
TemporalTrace parse_trace(const std::string &text, ObservationWindow window);

// Same, but the window is inferred as [min t_start, max t_end) over the
// parsed records. Fails on a trace with no records.
TemporalTrace parse_trace_inferred(std::istream &text);

TemporalTrace load_trace_file(const std::string &path, std::optional<ObservationWindow> window);

// Canonical serialization: sorted records, one CSV line each. Any comment
// lines given are emitted first, '#'-prefixed.
void serialize_trace(const TemporalTrace &trace, std::ostream &out,
                     const std::vector<std::string> &comments = {});

// Merge each pair's records into maximal encounters. Pairs with no contact
// are absent from the result.
TimelineMap build_timelines(const TemporalTrace &trace);

// Cut the trace at t_begin + round(fraction * T) into two traces covering
// [t_begin, t_split) and [t_split, t_end). Records spanning the cut are
// split across both sides. Throws if either side would be empty.
std::pair<TemporalTrace, TemporalTrace> split_window(const TemporalTrace &trace, double fraction);

} // namespace sorec

#endif
