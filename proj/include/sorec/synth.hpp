#ifndef SOREC_SYNTH_HPP
#define SOREC_SYNTH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sorec/trace.hpp"

namespace sorec {

// Encounter-length model for generated contacts.
struct DurationModel {
    enum class Kind { Fixed, Geometric };
    Kind kind = Kind::Geometric;
    double mean_slots = 5.0; // fixed: exact length; geometric: mean length (>= 1)
};

// Community-structured contact process with planted hub nodes. Every
// unordered pair runs an independent renewal process: per-slot start
// probability `rate`, encounter lengths from the duration model. The rate
// is intra for same-community pairs, hub for cross-community pairs
// touching a hub, and inter otherwise, so hubs accumulate both more
// contact volume and more cross-community reach than ordinary nodes.
struct SynthConfig {
    std::uint32_t node_count = 100;
    TimeSlot window_length = 10000;
    std::uint32_t communities = 4;
    std::vector<NodeId> hub_nodes;
    double intra_rate = 0.002;
    double inter_rate = 0.0001;
    double hub_rate = 0.001;
    DurationModel duration;
    std::uint64_t seed = 42;

    void validate() const; // throws ValidationError

    // Community of a node: contiguous blocks of node ids.
    std::uint32_t community_of(NodeId v) const;

    // First node of each of the first `count` communities.
    static std::vector<NodeId> default_hubs(std::uint32_t node_count, std::uint32_t communities,
                                            std::uint32_t count);

    static SynthConfig from_json_text(const std::string &text);
    std::string to_json_text() const;
};

// Deterministic given config.seed; per-pair sub-streams make the output
// independent of generation order.
TemporalTrace generate_synthetic(const SynthConfig &config);
TemporalTrace generate_synthetic(const SynthConfig &config, std::uint64_t seed);

} // namespace sorec

#endif
