#ifndef SOREC_CENTRALITY_HPP
#define SOREC_CENTRALITY_HPP

#include <map>
#include <string>
#include <vector>

#include "sorec/graph.hpp"
#include "sorec/relations.hpp"
#include "sorec/trace.hpp"

namespace sorec {

enum class Measure { Sorec, Degree, Betweenness, Closeness, Pagerank, Ef, Tcd };

const std::vector<Measure> &all_measures();
std::string measure_name(Measure m);
Measure measure_from_name(const std::string &name); // throws on unknown name

// One score per node of some node set; isolated nodes are present too.
struct ScoreTable {
    Measure measure = Measure::Sorec;
    std::map<NodeId, double> scores;
};

struct RankEntry {
    NodeId node = 0;
    double score = 0.0;
    double rank = 0.0; // 1 = highest score; ties get the average of their span
};

// Scores ordered best-first (score descending, node id breaking ties).
struct RankingList {
    std::string measure;
    std::vector<RankEntry> entries;
};

// Normalized influence strengths of one sphere: w / sum(w). Throws
// ValidationError for an empty sphere; callers map that to SoReC = 0.
std::map<NodeId, double> influence_probabilities(const InfluenceSphere &sphere);

// Shannon entropy (base 2) of a normalized strength distribution.
double influence_entropy(const std::map<NodeId, double> &probabilities);

// Entropy of the sphere's normalized strengths times its total strength.
// Empty and single-friend spheres score 0 (entropy is 0 there).
double sorec_score(const InfluenceSphere &sphere);

ScoreTable sorec_scores(const std::vector<InfluenceSphere> &spheres);

ScoreTable baseline_centrality(const StaticGraph &graph, Measure measure);

// Node-level encounter frequency / total contact duration: the pair
// metric summed over every partner of the node.
ScoreTable contact_volume_scores(const TimelineMap &timelines, const std::vector<NodeId> &nodes,
                                 Measure measure);

// Descending-score ranking with average-rank ties.
RankingList rank_nodes(const ScoreTable &scores);
RankingList rank_values(const std::string &measure, const std::map<NodeId, double> &values,
                        bool ascending = false);

struct PagerankOptions {
    double damping = 0.85;
    double tolerance = 1e-10; // L1 residual between iterations
    int max_iterations = 100000;
};
std::vector<double> pagerank(const StaticGraph &graph, const PagerankOptions &opts = {});

} // namespace sorec

#endif
