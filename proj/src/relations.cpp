#include "sorec/relations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "sorec/errors.hpp"
#include "sorec/parallel.hpp"

namespace sorec {

PairValues::PairValues(std::vector<NodeId> nodes) : nodes_(std::move(nodes)) {
    std::sort(nodes_.begin(), nodes_.end());
    nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
    values_.assign(nodes_.size() * nodes_.size(), 0.0);
}

std::size_t PairValues::index_of(NodeId v) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), v);
    if (it == nodes_.end() || *it != v)
        throw ValidationError("node " + std::to_string(v) + " not in pair table");
    return static_cast<std::size_t>(it - nodes_.begin());
}

void PairValues::set_index(std::size_t i, std::size_t j, double v) {
    values_[i * size() + j] = v;
    values_[j * size() + i] = v;
}

double srs_from_durations(std::span<const double> durations, double window_length) {
    if (window_length <= 0.0)
        throw ValidationError("window length must be positive");
    double sum = 0.0;
    double total = 0.0;
    for (double theta : durations) {
        if (theta <= 0.0 || theta > window_length)
            throw ValidationError("encounter duration outside (0, T]");
        total += theta;
        sum += std::sin(std::numbers::pi * theta / (2.0 * window_length));
    }
    if (total > window_length * (1.0 + 1e-12))
        throw ValidationError("total contact duration exceeds the window");
    return sum / (std::numbers::pi / 2.0);
}

double srs(const ContactTimeline &timeline, TimeSlot window_length) {
    std::vector<double> d;
    d.reserve(timeline.encounters.size());
    for (const auto &e : timeline.encounters)
        d.push_back(static_cast<double>(e.length()));
    return srs_from_durations(d, static_cast<double>(window_length));
}

double srs_regular(std::size_t encounter_count, double t_meet, double window_length) {
    if (encounter_count == 0)
        return 0.0;
    double k = static_cast<double>(encounter_count);
    return (2.0 / std::numbers::pi) * k *
           std::sin(std::numbers::pi * t_meet / (2.0 * window_length * k));
}

ContactMetrics contact_metrics(const ContactTimeline &timeline, const ObservationWindow &window) {
    ContactMetrics m;
    m.ef = timeline.encounter_count();
    m.tcd = timeline.total_contact();

    // Gaps: window start to first encounter, between encounters, last
    // encounter to window end. Zero-length gaps are not separations.
    std::vector<TimeSlot> gaps;
    TimeSlot cursor = window.begin;
    for (const auto &e : timeline.encounters) {
        if (e.begin < window.begin || e.end > window.end)
            throw ValidationError("encounter outside the observation window");
        if (e.begin > cursor)
            gaps.push_back(e.begin - cursor);
        cursor = e.end;
    }
    if (window.end > cursor)
        gaps.push_back(window.end - cursor);

    if (gaps.empty()) {
        m.asp = 0.0;
    } else {
        TimeSlot sum = 0;
        for (TimeSlot g : gaps)
            sum += g;
        m.asp = static_cast<double>(sum) / static_cast<double>(gaps.size());
    }
    return m;
}

SRSMatrix build_srs_matrix(const TimelineMap &timelines, std::vector<NodeId> nodes,
                           TimeSlot window_length) {
    SRSMatrix m;
    m.values = PairValues(std::move(nodes));
    m.window_length = window_length;
    for (const auto &[pair, tl] : timelines) {
        std::size_t i = m.values.index_of(pair.first);
        std::size_t j = m.values.index_of(pair.second);
        m.values.set_index(i, j, srs(tl, window_length));
    }
    return m;
}

SRSMatrix build_srs_matrix(const TemporalTrace &trace) {
    return build_srs_matrix(build_timelines(trace), trace.nodes, trace.window.length());
}

namespace {

// Nonzero-SRS adjacency above the edge threshold, by matrix index,
// neighbors ascending.
std::vector<std::vector<std::size_t>> usable_edges(const SRSMatrix &srs, double epsilon) {
    std::size_t n = srs.values.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && srs.values.at_index(i, j) > epsilon)
                adj[i].push_back(j);
    return adj;
}

} // namespace

std::vector<IndirectPath> enumerate_indirect_paths(const SRSMatrix &srs, NodeId i, NodeId j,
                                                   int max_intermediates, double epsilon) {
    if (i == j)
        throw ValidationError("indirect paths need two distinct endpoints");
    if (max_intermediates < 1)
        throw ValidationError("max_intermediates must be >= 1");

    const auto adj = usable_edges(srs, epsilon);
    const std::size_t src = srs.values.index_of(i);
    const std::size_t dst = srs.values.index_of(j);
    const std::size_t n = srs.values.size();

    std::vector<IndirectPath> out;
    std::vector<std::size_t> stack;
    std::vector<bool> visited(n, false);
    visited[src] = true;
    visited[dst] = true;

    // Depth-first over intermediate sequences in ascending node order.
    // Closing a path to dst is emitted before any extension, which makes
    // the output lexicographic in the intermediate sequence.
    auto dfs = [&](auto &&self, std::size_t u) -> void {
        if (!stack.empty() && srs.values.at_index(u, dst) > epsilon) {
            IndirectPath p;
            p.from = i;
            p.to = j;
            p.intermediates.reserve(stack.size());
            for (std::size_t s : stack)
                p.intermediates.push_back(srs.values.nodes()[s]);
            out.push_back(std::move(p));
        }
        if (stack.size() >= static_cast<std::size_t>(max_intermediates))
            return;
        for (std::size_t v : adj[u]) {
            if (visited[v])
                continue;
            visited[v] = true;
            stack.push_back(v);
            self(self, v);
            stack.pop_back();
            visited[v] = false;
        }
    };
    dfs(dfs, src);
    return out;
}

double path_influence(const IndirectPath &path, const SRSMatrix &srs) {
    if (path.intermediates.empty())
        throw ValidationError("a bridging path needs at least one intermediate");
    double product = 1.0;
    NodeId prev = path.from;
    auto hop = [&](NodeId next) {
        double v = srs.values.at(prev, next);
        if (v <= 0.0)
            throw ValidationError("path hop (" + std::to_string(prev) + "," +
                                  std::to_string(next) + ") has zero SRS");
        product *= v;
        prev = next;
    };
    for (NodeId q : path.intermediates)
        hop(q);
    hop(path.to);
    return product;
}

namespace {

// Noisy-or accumulator over bridging paths out of `src`. Walks every
// simple intermediate sequence once and folds the terminal hop into each
// reachable endpoint, so one sweep covers all pairs (src, *).
struct IndirectSweep {
    const SRSMatrix &srs;
    const std::vector<std::vector<std::size_t>> &adj;
    int max_intermediates;
    double epsilon;
    std::vector<double> survive;  // per endpoint: product of (1 - PI)
    std::vector<bool> visited;

    void run(std::size_t src, bool only_above) {
        std::size_t n = srs.values.size();
        survive.assign(n, 1.0);
        visited.assign(n, false);
        visited[src] = true;
        walk(src, src, 1.0, 0, only_above);
    }

    void walk(std::size_t src, std::size_t u, double product, int depth, bool only_above) {
        for (std::size_t v : adj[u]) {
            if (visited[v])
                continue;
            double p = product * srs.values.at_index(u, v);
            if (depth >= 1 && (!only_above || v > src))
                survive[v] *= 1.0 - p; // path src..u -> v with u as last intermediate
            if (depth + 1 < max_intermediates + 1) {
                // v becomes an intermediate; one more hop must follow.
                visited[v] = true;
                walk(src, v, p, depth + 1, only_above);
                visited[v] = false;
            }
        }
    }
};

} // namespace

double indirect_srs(const SRSMatrix &srs, NodeId i, NodeId j, int max_intermediates,
                    double epsilon) {
    if (i == j)
        throw ValidationError("indirect relation needs two distinct endpoints");
    // The relation is symmetric by construction; evaluate in canonical
    // endpoint order so both argument orders return bit-identical values.
    if (srs.values.index_of(j) < srs.values.index_of(i))
        std::swap(i, j);
    auto paths = enumerate_indirect_paths(srs, i, j, max_intermediates, epsilon);
    double survive = 1.0;
    for (const auto &p : paths)
        survive *= 1.0 - path_influence(p, srs);
    return 1.0 - survive;
}

PairValues build_indirect_matrix(const SRSMatrix &srs, int max_intermediates, double epsilon,
                                 int workers) {
    if (max_intermediates < 1)
        throw ValidationError("max_intermediates must be >= 1");
    const auto adj = usable_edges(srs, epsilon);
    const std::size_t n = srs.values.size();

    // Row sweeps are independent; each sweep fills pairs (i, j>i) only, so
    // the result is exactly symmetric and identical for any worker count.
    std::vector<std::vector<double>> rows(n);
    parallel_for(n, workers, [&](std::size_t i) {
        IndirectSweep sweep{srs, adj, max_intermediates, epsilon, {}, {}};
        sweep.run(i, /*only_above=*/true);
        rows[i] = std::move(sweep.survive);
    });

    PairValues out(srs.values.nodes());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            out.set_index(i, j, 1.0 - rows[i][j]);
    return out;
}

double InfluenceSphere::total_weight() const {
    double sum = 0.0;
    for (const auto &[node, w] : strengths)
        sum += w;
    return sum;
}

InfluenceSphere influence_sphere(const SRSMatrix &srs, const PairValues &indirect, NodeId owner) {
    InfluenceSphere sphere;
    sphere.owner = owner;
    std::size_t i = srs.values.index_of(owner);
    for (std::size_t j = 0; j < srs.values.size(); ++j) {
        if (j == i)
            continue;
        double direct = srs.values.at_index(i, j);
        double bridged = indirect.at_index(i, j);
        if (direct == 0.0 && bridged == 0.0)
            continue;
        double w = 1.0 - (1.0 - direct) * (1.0 - bridged);
        sphere.strengths.emplace(srs.values.nodes()[j], w);
    }
    return sphere;
}

std::vector<InfluenceSphere> build_influence_spheres(const SRSMatrix &srs,
                                                     const PairValues &indirect) {
    std::vector<InfluenceSphere> out;
    out.reserve(srs.values.size());
    for (NodeId v : srs.values.nodes())
        out.push_back(influence_sphere(srs, indirect, v));
    return out;
}

} // namespace sorec
