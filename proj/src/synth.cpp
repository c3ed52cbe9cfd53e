#include "sorec/synth.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "sorec/errors.hpp"
#include "sorec/rng.hpp"

namespace sorec {

namespace {
using json = nlohmann::ordered_json;

bool rate_ok(double r) { return r >= 0.0 && r <= 1.0; }
} // namespace

void SynthConfig::validate() const {
    if (node_count == 0)
        throw ValidationError("synthetic config: node_count must be positive");
    if (window_length <= 0)
        throw ValidationError("synthetic config: window_length must be positive");
    if (communities == 0 || communities > node_count)
        throw ValidationError("synthetic config: communities must lie in [1, node_count]");
    if (!rate_ok(intra_rate) || !rate_ok(inter_rate) || !rate_ok(hub_rate))
        throw ValidationError("synthetic config: contact rates must lie in [0,1]");
    if (duration.mean_slots < 1.0)
        throw ValidationError("synthetic config: mean encounter length must be >= 1 slot");
    for (NodeId h : hub_nodes)
        if (h >= node_count)
            throw ValidationError("synthetic config: hub node " + std::to_string(h) +
                                  " outside the node range");
}

std::uint32_t SynthConfig::community_of(NodeId v) const {
    // Contiguous blocks; the remainder spreads over the leading communities.
    std::uint64_t c = static_cast<std::uint64_t>(v) * communities / node_count;
    return static_cast<std::uint32_t>(c);
}

std::vector<NodeId> SynthConfig::default_hubs(std::uint32_t node_count, std::uint32_t communities,
                                              std::uint32_t count) {
    std::vector<NodeId> hubs;
    for (std::uint32_t c = 0; c < count && c < communities; ++c) {
        NodeId first = static_cast<NodeId>(
            (static_cast<std::uint64_t>(c) * node_count + communities - 1) / communities);
        hubs.push_back(first);
    }
    return hubs;
}

SynthConfig SynthConfig::from_json_text(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("synthetic config: ") + e.what());
    }
    SynthConfig c;
    try {
        c.node_count = j.at("node_count").get<std::uint32_t>();
        c.window_length = j.at("window_length").get<TimeSlot>();
        c.communities = j.value("communities", c.communities);
        if (j.contains("hub_nodes"))
            c.hub_nodes = j.at("hub_nodes").get<std::vector<NodeId>>();
        const auto &rates = j.at("rates");
        c.intra_rate = rates.at("intra").get<double>();
        c.inter_rate = rates.at("inter").get<double>();
        c.hub_rate = rates.value("hub", c.intra_rate);
        if (j.contains("duration")) {
            const auto &d = j.at("duration");
            std::string kind = d.value("kind", "geometric");
            if (kind == "fixed")
                c.duration.kind = DurationModel::Kind::Fixed;
            else if (kind == "geometric")
                c.duration.kind = DurationModel::Kind::Geometric;
            else
                throw ParseError("synthetic config: unknown duration kind '" + kind + "'");
        c.duration.mean_slots = d.value("mean_slots", c.duration.mean_slots);
        }
        c.seed = j.value("seed", c.seed);
    } catch (const json::exception &e) {
        throw ParseError(std::string("synthetic config: ") + e.what());
    }
    c.validate();
    return c;
}

std::string SynthConfig::to_json_text() const {
    json j;
    j["node_count"] = node_count;
    j["window_length"] = window_length;
    j["communities"] = communities;
    j["hub_nodes"] = hub_nodes;
    j["rates"] = {{"intra", intra_rate}, {"inter", inter_rate}, {"hub", hub_rate}};
    j["duration"] = {
        {"kind", duration.kind == DurationModel::Kind::Fixed ? "fixed" : "geometric"},
        {"mean_slots", duration.mean_slots}};
    j["seed"] = seed;
    return j.dump();
}

namespace {

TimeSlot draw_duration(const DurationModel &m, Rng &rng) {
    switch (m.kind) {
    case DurationModel::Kind::Fixed:
        return std::max<TimeSlot>(1, std::llround(m.mean_slots));
    case DurationModel::Kind::Geometric: {
        if (m.mean_slots <= 1.0)
            return 1;
        // 1 + Geometric(1/mean) has mean `mean_slots`.
        return 1 + rng.geometric_failures(1.0 / m.mean_slots);
    }
    }
    return 1;
}

} // namespace

TemporalTrace generate_synthetic(const SynthConfig &config, std::uint64_t seed) {
    config.validate();
    const std::uint32_t n = config.node_count;
    const TimeSlot L = config.window_length;

    std::vector<bool> is_hub(n, false);
    for (NodeId h : config.hub_nodes)
        is_hub[h] = true;

    std::vector<ContactRecord> records;
    std::vector<NodeId> nodes(n);
    for (NodeId v = 0; v < n; ++v)
        nodes[v] = v;

    for (NodeId a = 0; a < n; ++a) {
        for (NodeId b = a + 1; b < n; ++b) {
            double rate;
            if (config.community_of(a) == config.community_of(b))
                rate = config.intra_rate;
            else if (is_hub[a] || is_hub[b])
                rate = config.hub_rate;
            else
                rate = config.inter_rate;
            if (rate <= 0.0)
                continue;

            Rng rng(derive_seed(seed, {a, b}));
            TimeSlot t = 0;
            while (t < L) {
                TimeSlot start = t + rng.geometric_failures(rate);
                if (start >= L)
                    break;
                TimeSlot end = std::min<TimeSlot>(start + draw_duration(config.duration, rng), L);
                records.push_back(ContactRecord::make(a, b, start, end));
                t = end;
            }
        }
    }
    return TemporalTrace::make(std::move(nodes), std::move(records),
                               ObservationWindow::make(0, L));
}

TemporalTrace generate_synthetic(const SynthConfig &config) {
    return generate_synthetic(config, config.seed);
}

} // namespace sorec
