#ifndef SOREC_RELATIONS_HPP
#define SOREC_RELATIONS_HPP

#include <map>
#include <span>
#include <vector>

#include "sorec/trace.hpp"

namespace sorec {

// Dense symmetric node-pair table over a fixed node set. Diagonal is zero.
class PairValues {
public:
    PairValues() = default;
    explicit PairValues(std::vector<NodeId> nodes);

    std::size_t size() const { return nodes_.size(); }
    const std::vector<NodeId> &nodes() const { return nodes_; }
    std::size_t index_of(NodeId v) const; // throws if absent

    double at(NodeId a, NodeId b) const { return at_index(index_of(a), index_of(b)); }
    double at_index(std::size_t i, std::size_t j) const { return values_[i * size() + j]; }
    void set_index(std::size_t i, std::size_t j, double v);

private:
    std::vector<NodeId> nodes_; // sorted, unique
    std::vector<double> values_;
};

/*
 * Social-relation stability of one contact pattern: each encounter of
 * length theta contributes sin(pi*theta / 2T), normalized by pi/2 so the
 * total lands in [0,1]. The concave sine rewards frequent, long and
 * regular contact: splitting a fixed total duration over more encounters,
 * or evening out irregular durations, never lowers the value.
 */
double srs_from_durations(std::span<const double> durations, double window_length);
double srs(const ContactTimeline &timeline, TimeSlot window_length);

// Closed form for K equal encounters totalling t_meet contact slots.
double srs_regular(std::size_t encounter_count, double t_meet, double window_length);

// Prior direct-relation summaries, kept as references: encounter
// frequency, total contact duration, and average separation period (mean
// length of the maximal no-contact intervals inside the window).
struct ContactMetrics {
    std::size_t ef = 0;
    TimeSlot tcd = 0;
    double asp = 0.0;
};
ContactMetrics contact_metrics(const ContactTimeline &timeline, const ObservationWindow &window);

// Pairwise SRS over every node of a trace (window length T taken from the
// trace). Zero exactly for pairs with no contact.
struct SRSMatrix {
    PairValues values;
    TimeSlot window_length = 0;
};
SRSMatrix build_srs_matrix(const TemporalTrace &trace);
SRSMatrix build_srs_matrix(const TimelineMap &timelines, std::vector<NodeId> nodes,
                           TimeSlot window_length);

// A simple bridging path between two endpoints: 1..max intermediates, all
// distinct, every hop's SRS above the edge threshold.
struct IndirectPath {
    NodeId from = 0;
    NodeId to = 0;
    std::vector<NodeId> intermediates;
};

// All qualifying bridging paths from i to j, in lexicographic order of the
// intermediate sequence. The direct edge itself is never a path.
std::vector<IndirectPath> enumerate_indirect_paths(const SRSMatrix &srs, NodeId i, NodeId j,
                                                   int max_intermediates, double epsilon = 0.0);

// Product of the SRS values of every hop along the path.
double path_influence(const IndirectPath &path, const SRSMatrix &srs);

// Indirect relation: noisy-or of the per-path influences, treating paths
// as independent channels. Zero when no bridging path exists.
double indirect_srs(const SRSMatrix &srs, NodeId i, NodeId j, int max_intermediates,
                    double epsilon = 0.0);

// Whole-matrix indirect relations. Equals indirect_srs pair by pair;
// deterministic for any worker count.
PairValues build_indirect_matrix(const SRSMatrix &srs, int max_intermediates,
                                 double epsilon = 0.0, int workers = 1);

// A node's friends (anyone with a nonzero direct or indirect relation)
// and the combined influence strength on each:
//   w = 1 - (1 - SRS)(1 - in-SRS).
struct InfluenceSphere {
    NodeId owner = 0;
    std::map<NodeId, double> strengths;

    double total_weight() const;
};

InfluenceSphere influence_sphere(const SRSMatrix &srs, const PairValues &indirect, NodeId owner);
std::vector<InfluenceSphere> build_influence_spheres(const SRSMatrix &srs,
                                                     const PairValues &indirect);

} // namespace sorec

#endif
