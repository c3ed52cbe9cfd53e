#ifndef SOREC_EVAL_HPP
#define SOREC_EVAL_HPP

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sorec/centrality.hpp"
#include "sorec/sir.hpp"
#include "sorec/trace.hpp"

namespace sorec {

struct PearsonResult {
    double rho = 0.0;
    bool degenerate = false; // some rank vector was constant; rho reported as 0
};

PearsonResult pearson(std::span<const double> x, std::span<const double> y);

// Pearson correlation of the tie-averaged rank vectors of two rankings
// over the same node set (Spearman with average ties).
PearsonResult pearson_rank_correlation(const RankingList &x, const RankingList &y);

struct CorrelationReport {
    std::string measure;
    std::string target; // "range" | "speed"
    double rho = 0.0;
    bool degenerate = false;
    std::size_t n = 0;
};

// values[L-1] = mean actual influence of the L best-ranked nodes.
struct TopLCurve {
    std::string measure;
    std::vector<double> values;
};

TopLCurve top_l_curve(const RankingList &predicted, const std::map<NodeId, double> &actual);

// The unbeatable reference: nodes ordered by the actual influence itself.
TopLCurve benchmark_curve(const std::map<NodeId, double> &actual);

struct RelationConfig {
    int max_intermediates = 2;
    double epsilon = 0.0;
};

struct EvalConfig {
    double split_fraction = 0.6;
    RelationConfig relations;
    SIRConfig sir;
    int sweep_segments = 1; // >1: per-segment correlations over the test window
    int workers = 1;
};

struct SweepPoint {
    int segment = 0;
    ObservationWindow window{};
    std::vector<CorrelationReport> correlations;
};

struct EvalReport {
    EvalConfig config;
    ObservationWindow trace_window{};
    ObservationWindow train_window{};
    ObservationWindow test_window{};
    std::size_t node_count = 0;
    std::size_t record_count = 0;

    std::map<std::string, RankingList> rankings;      // per measure, on the training window
    std::map<NodeId, SIROutcome> actual;              // SIR ground truth on the test window
    std::vector<CorrelationReport> correlations;      // measure x {range, speed}
    std::map<std::string, TopLCurve> curves;          // vs actual range
    TopLCurve benchmark;
    std::vector<SweepPoint> sweep;                    // only when sweep_segments > 1
};

// Train on the former window, measure actual influence by SIR on the
// latter, and correlate every measure's ranking with the ground truth.
// Deterministic given the configured seeds.
EvalReport evaluate_pipeline(const TemporalTrace &trace, const EvalConfig &config);

std::string report_to_json(const EvalReport &report);

// report.json plus CSV tables; optional per-measure gnuplot curve files.
void write_report_bundle(const EvalReport &report, const std::filesystem::path &dir,
                         bool curve_files = false);

} // namespace sorec

#endif
