#include "sorec/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "sorec/errors.hpp"

namespace sorec {

const std::vector<Measure> &all_measures() {
    static const std::vector<Measure> measures = {
        Measure::Sorec,     Measure::Degree, Measure::Betweenness, Measure::Closeness,
        Measure::Pagerank,  Measure::Ef,     Measure::Tcd};
    return measures;
}

std::string measure_name(Measure m) {
    switch (m) {
    case Measure::Sorec: return "sorec";
    case Measure::Degree: return "degree";
    case Measure::Betweenness: return "betweenness";
    case Measure::Closeness: return "closeness";
    case Measure::Pagerank: return "pagerank";
    case Measure::Ef: return "ef";
    case Measure::Tcd: return "tcd";
    }
    return "?";
}

Measure measure_from_name(const std::string &name) {
    for (Measure m : all_measures())
        if (measure_name(m) == name)
            return m;
    throw ValidationError("unknown measure '" + name + "'");
}

std::map<NodeId, double> influence_probabilities(const InfluenceSphere &sphere) {
    if (sphere.strengths.empty())
        throw ValidationError("influence sphere of node " + std::to_string(sphere.owner) +
                              " is empty");
    double total = sphere.total_weight();
    if (total <= 0.0)
        throw ValidationError("influence sphere of node " + std::to_string(sphere.owner) +
                              " has zero total weight");
    std::map<NodeId, double> probs;
    for (const auto &[node, w] : sphere.strengths)
        probs.emplace(node, w / total);
    return probs;
}

double influence_entropy(const std::map<NodeId, double> &probabilities) {
    double h = 0.0;
    for (const auto &[node, p] : probabilities)
        if (p > 0.0)
            h -= p * std::log2(p);
    return h;
}

double sorec_score(const InfluenceSphere &sphere) {
    if (sphere.strengths.empty())
        return 0.0;
    double total = sphere.total_weight();
    if (total <= 0.0)
        return 0.0;
    return influence_entropy(influence_probabilities(sphere)) * total;
}

ScoreTable sorec_scores(const std::vector<InfluenceSphere> &spheres) {
    ScoreTable t;
    t.measure = Measure::Sorec;
    for (const auto &s : spheres)
        t.scores.emplace(s.owner, sorec_score(s));
    return t;
}

namespace {

// Brandes' dependency accumulation, one BFS per source. Pair counts are
// halved at the end so each unordered pair contributes once.
std::vector<double> betweenness(const StaticGraph &g) {
    const std::size_t n = g.size();
    std::vector<double> score(n, 0.0);
    std::vector<std::int64_t> sigma(n);
    std::vector<std::int64_t> dist(n);
    std::vector<double> delta(n);
    std::vector<std::vector<std::size_t>> pred(n);
    std::vector<std::size_t> order;
    order.reserve(n);

    for (std::size_t s = 0; s < n; ++s) {
        std::fill(sigma.begin(), sigma.end(), 0);
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto &p : pred)
            p.clear();
        order.clear();

        sigma[s] = 1;
        dist[s] = 0;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (std::size_t w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    pred[w].push_back(v);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            std::size_t w = *it;
            for (std::size_t v : pred[w])
                delta[v] += static_cast<double>(sigma[v]) / static_cast<double>(sigma[w]) *
                            (1.0 + delta[w]);
            if (w != s)
                score[w] += delta[w];
        }
    }
    for (double &x : score)
        x /= 2.0;
    return score;
}

// Harmonic closeness: sum of 1/d over reachable nodes, 0 contribution
// from unreachable ones. Well defined on disconnected graphs.
std::vector<double> harmonic_closeness(const StaticGraph &g) {
    const std::size_t n = g.size();
    std::vector<double> score(n, 0.0);
    std::vector<std::int64_t> dist(n);
    for (std::size_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::deque<std::size_t> queue{s};
        double sum = 0.0;
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            if (v != s)
                sum += 1.0 / static_cast<double>(dist[v]);
            for (std::size_t w : g.neighbors(v))
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
        }
        score[s] = sum;
    }
    return score;
}

} // namespace

std::vector<double> pagerank(const StaticGraph &g, const PagerankOptions &opts) {
    const std::size_t n = g.size();
    if (n == 0)
        return {};
    const double d = opts.damping;
    std::vector<double> rank(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n);

    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        double dangling = 0.0;
        for (std::size_t v = 0; v < n; ++v)
            if (g.degree(v) == 0)
                dangling += rank[v];
        double base = (1.0 - d) / static_cast<double>(n) +
                      d * dangling / static_cast<double>(n);
        std::fill(next.begin(), next.end(), base);
        for (std::size_t v = 0; v < n; ++v) {
            if (g.degree(v) == 0)
                continue;
            double share = d * rank[v] / static_cast<double>(g.degree(v));
            for (std::size_t w : g.neighbors(v))
                next[w] += share;
        }
        double residual = 0.0;
        for (std::size_t v = 0; v < n; ++v)
            residual += std::abs(next[v] - rank[v]);
        rank.swap(next);
        if (residual < opts.tolerance)
            break;
    }
    return rank;
}

ScoreTable baseline_centrality(const StaticGraph &graph, Measure measure) {
    std::vector<double> values;
    switch (measure) {
    case Measure::Degree:
        values.resize(graph.size());
        for (std::size_t v = 0; v < graph.size(); ++v)
            values[v] = static_cast<double>(graph.degree(v));
        break;
    case Measure::Betweenness:
        values = betweenness(graph);
        break;
    case Measure::Closeness:
        values = harmonic_closeness(graph);
        break;
    case Measure::Pagerank:
        values = pagerank(graph);
        break;
    default:
        throw ValidationError("measure '" + measure_name(measure) +
                              "' is not a static-graph baseline");
    }
    ScoreTable t;
    t.measure = measure;
    for (std::size_t v = 0; v < graph.size(); ++v)
        t.scores.emplace(graph.nodes()[v], values[v]);
    return t;
}

ScoreTable contact_volume_scores(const TimelineMap &timelines, const std::vector<NodeId> &nodes,
                                 Measure measure) {
    if (measure != Measure::Ef && measure != Measure::Tcd)
        throw ValidationError("contact volume scores are only defined for ef/tcd");
    ScoreTable t;
    t.measure = measure;
    for (NodeId v : nodes)
        t.scores.emplace(v, 0.0);
    for (const auto &[pair, tl] : timelines) {
        double value = measure == Measure::Ef ? static_cast<double>(tl.encounter_count())
                                              : static_cast<double>(tl.total_contact());
        t.scores.at(pair.first) += value;
        t.scores.at(pair.second) += value;
    }
    return t;
}

RankingList rank_values(const std::string &measure, const std::map<NodeId, double> &values,
                        bool ascending) {
    for (const auto &[node, score] : values)
        if (!std::isfinite(score))
            throw ValidationError("non-finite score for node " + std::to_string(node));

    std::vector<RankEntry> entries;
    entries.reserve(values.size());
    for (const auto &[node, score] : values)
        entries.push_back({node, score, 0.0});
    std::sort(entries.begin(), entries.end(), [&](const RankEntry &x, const RankEntry &y) {
        if (x.score != y.score)
            return ascending ? x.score < y.score : x.score > y.score;
        return x.node < y.node;
    });

    // Average-rank ties: every member of a tie group gets the mean of the
    // positions the group spans.
    std::size_t i = 0;
    while (i < entries.size()) {
        std::size_t j = i;
        while (j + 1 < entries.size() && entries[j + 1].score == entries[i].score)
            ++j;
        double avg = static_cast<double>(i + 1 + j + 1) / 2.0;
        for (std::size_t k = i; k <= j; ++k)
            entries[k].rank = avg;
        i = j + 1;
    }

    RankingList list;
    list.measure = measure;
    list.entries = std::move(entries);
    return list;
}

RankingList rank_nodes(const ScoreTable &scores) {
    return rank_values(measure_name(scores.measure), scores.scores, false);
}

} // namespace sorec
