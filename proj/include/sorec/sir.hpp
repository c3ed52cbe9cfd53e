#ifndef SOREC_SIR_HPP
#define SOREC_SIR_HPP

#include <array>
#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "sorec/trace.hpp"

namespace sorec {

// Per-slot recovery probability (memoryless).
struct GeometricRecovery {
    double mu = 0.02;
};
// Recovery exactly tau slots after infection.
struct FixedRecovery {
    TimeSlot tau = 50;
};
using Recovery = std::variant<GeometricRecovery, FixedRecovery>;

struct SIRConfig {
    double lambda = 0.1; // per-contact-slot infection probability
    Recovery recovery = GeometricRecovery{};
    int runs = 500;
    std::uint64_t rng_seed = 42;

    void validate() const;
};

// One realization: how many nodes ever got infected and their mean
// infection time (seed counts at time 0; the range-1 case has speed 0).
struct SirRunResult {
    std::uint32_t ever_infected = 1;
    double mean_infection_time = 0.0;
};

// Per-slot S/I/R census of a single run, for diagnostics.
struct SirTrajectory {
    std::vector<std::array<std::uint32_t, 3>> counts;
};

struct SIROutcome {
    NodeId seed_node = 0;
    double influence_range = 1.0; // mean ever-infected over runs
    double influence_speed = 0.0; // mean of per-run mean infection times
    std::vector<SirRunResult> per_run; // kept only on request
};

/*
 * Slot-synchronous SIR over the contact trace. At every slot, each contact
 * between an infected and a susceptible node triggers an independent
 * Bernoulli(lambda) infection attempt (a contact spanning k slots yields k
 * attempts); infections and recoveries apply at slot end, so nodes
 * infected in slot t transmit from slot t+1. Each run draws from a stream
 * keyed by (rng_seed, seed_node, run_index) and is reproducible for any
 * execution order or worker count.
 */
class SirSimulator {
public:
    explicit SirSimulator(const TemporalTrace &trace);

    SirRunResult run_single(NodeId seed_node, const SIRConfig &config, int run_index,
                            SirTrajectory *trajectory = nullptr) const;
    SIROutcome simulate_seed(NodeId seed_node, const SIRConfig &config,
                             bool keep_runs = false) const;
    std::map<NodeId, SIROutcome> monte_carlo(const SIRConfig &config, int workers = 1,
                                             bool keep_runs = false) const;

    std::size_t node_count() const { return nodes_.size(); }

private:
    std::vector<NodeId> nodes_;
    TimeSlot window_length_ = 0;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> slot_contacts_;
};

std::map<NodeId, SIROutcome> monte_carlo_influence(const TemporalTrace &trace,
                                                   const SIRConfig &config, int workers = 1,
                                                   bool keep_runs = false);

} // namespace sorec

#endif
