#include "sorec/sir.hpp"

#include <algorithm>
#include <array>

#include "sorec/errors.hpp"
#include "sorec/parallel.hpp"
#include "sorec/rng.hpp"

namespace sorec {

void SIRConfig::validate() const {
    if (lambda < 0.0 || lambda > 1.0)
        throw ValidationError("infection probability lambda must lie in [0,1]");
    if (runs < 1)
        throw ValidationError("at least one simulation run is required");
    if (const auto *g = std::get_if<GeometricRecovery>(&recovery)) {
        if (g->mu < 0.0 || g->mu > 1.0)
            throw ValidationError("recovery probability mu must lie in [0,1]");
    } else if (const auto *f = std::get_if<FixedRecovery>(&recovery)) {
        if (f->tau < 1)
            throw ValidationError("fixed recovery period must be >= 1 slot");
    }
}

SirSimulator::SirSimulator(const TemporalTrace &trace)
    : nodes_(trace.nodes), window_length_(trace.window.length()) {
    slot_contacts_.resize(static_cast<std::size_t>(window_length_));
    auto index_of = [&](NodeId v) {
        return static_cast<std::uint32_t>(
            std::lower_bound(nodes_.begin(), nodes_.end(), v) - nodes_.begin());
    };
    for (const auto &r : trace.records) {
        std::uint32_t i = index_of(r.a), j = index_of(r.b);
        for (TimeSlot t = r.t_start; t < r.t_end; ++t)
            slot_contacts_[static_cast<std::size_t>(t - trace.window.begin)].emplace_back(i, j);
    }
    for (auto &slot : slot_contacts_)
        std::sort(slot.begin(), slot.end());
}

SirRunResult SirSimulator::run_single(NodeId seed_node, const SIRConfig &config, int run_index,
                                      SirTrajectory *trajectory) const {
    config.validate();
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), seed_node);
    if (it == nodes_.end() || *it != seed_node)
        throw ValidationError("seed node " + std::to_string(seed_node) + " not in trace");
    const std::uint32_t seed_idx = static_cast<std::uint32_t>(it - nodes_.begin());
    const std::uint32_t n = static_cast<std::uint32_t>(nodes_.size());

    Rng rng(derive_seed(config.rng_seed,
                        {seed_node, static_cast<std::uint64_t>(run_index)}));

    enum : std::uint8_t { S, I, R };
    std::vector<std::uint8_t> state(n, S);
    std::vector<TimeSlot> infected_at(n, 0);
    std::vector<std::uint32_t> infected{seed_idx}; // ascending
    std::vector<std::uint32_t> hits;
    std::vector<bool> hit(n, false);

    state[seed_idx] = I;
    std::uint32_t ever_infected = 1;
    double time_sum = 0.0; // seed contributes 0

    const auto *geometric = std::get_if<GeometricRecovery>(&config.recovery);
    const auto *fixed = std::get_if<FixedRecovery>(&config.recovery);

    auto record_census = [&] {
        if (!trajectory)
            return;
        std::array<std::uint32_t, 3> c{0, 0, 0};
        for (std::uint8_t s : state)
            ++c[s];
        trajectory->counts.push_back(c);
    };
    record_census();

    for (TimeSlot k = 0; k < window_length_ && !infected.empty(); ++k) {
        // Infection attempts from start-of-slot states, one independent
        // draw per (infected neighbor, susceptible) contact.
        hits.clear();
        for (const auto &[u, v] : slot_contacts_[static_cast<std::size_t>(k)]) {
            std::uint32_t target = n;
            if (state[u] == I && state[v] == S)
                target = v;
            else if (state[v] == I && state[u] == S)
                target = u;
            else
                continue;
            if (rng.bernoulli(config.lambda) && !hit[target]) {
                hit[target] = true;
                hits.push_back(target);
            }
        }

        // Recoveries of nodes infected at slot start.
        std::size_t keep = 0;
        for (std::size_t idx = 0; idx < infected.size(); ++idx) {
            std::uint32_t v = infected[idx];
            bool recovers = geometric ? rng.bernoulli(geometric->mu)
                                      : (k - infected_at[v] + 1 >= fixed->tau);
            if (recovers)
                state[v] = R;
            else
                infected[keep++] = v;
        }
        infected.resize(keep);

        // Apply new infections at slot end; they transmit from slot k+1.
        std::sort(hits.begin(), hits.end());
        for (std::uint32_t v : hits) {
            hit[v] = false;
            state[v] = I;
            infected_at[v] = k + 1;
            time_sum += static_cast<double>(k + 1);
            ++ever_infected;
            infected.insert(std::lower_bound(infected.begin(), infected.end(), v), v);
        }
        record_census();
    }

    SirRunResult result;
    result.ever_infected = ever_infected;
    result.mean_infection_time = time_sum / static_cast<double>(ever_infected);
    return result;
}

SIROutcome SirSimulator::simulate_seed(NodeId seed_node, const SIRConfig &config,
                                       bool keep_runs) const {
    SIROutcome out;
    out.seed_node = seed_node;
    double range_sum = 0.0, speed_sum = 0.0;
    for (int r = 0; r < config.runs; ++r) {
        SirRunResult run = run_single(seed_node, config, r);
        range_sum += run.ever_infected;
        speed_sum += run.mean_infection_time;
        if (keep_runs)
            out.per_run.push_back(run);
    }
    out.influence_range = range_sum / config.runs;
    out.influence_speed = speed_sum / config.runs;
    return out;
}

std::map<NodeId, SIROutcome> SirSimulator::monte_carlo(const SIRConfig &config, int workers,
                                                       bool keep_runs) const {
    config.validate();
    std::vector<SIROutcome> outcomes(nodes_.size());
    parallel_for(nodes_.size(), workers, [&](std::size_t i) {
        outcomes[i] = simulate_seed(nodes_[i], config, keep_runs);
    });
    std::map<NodeId, SIROutcome> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        out.emplace(nodes_[i], std::move(outcomes[i]));
    return out;
}

std::map<NodeId, SIROutcome> monte_carlo_influence(const TemporalTrace &trace,
                                                   const SIRConfig &config, int workers,
                                                   bool keep_runs) {
    return SirSimulator(trace).monte_carlo(config, workers, keep_runs);
}

} // namespace sorec
