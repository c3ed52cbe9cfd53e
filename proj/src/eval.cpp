#include "sorec/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "sorec/errors.hpp"
#include "sorec/relations.hpp"

namespace sorec {

namespace {
using json = nlohmann::ordered_json;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}
} // namespace

PearsonResult pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.empty())
        throw ValidationError("correlation needs two equally sized non-empty vectors");
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        return {0.0, true};
    return {sxy / std::sqrt(sxx * syy), false};
}

PearsonResult pearson_rank_correlation(const RankingList &x, const RankingList &y) {
    if (x.entries.size() != y.entries.size())
        throw ValidationError("rankings cover different node sets");
    std::map<NodeId, double> yrank;
    for (const auto &e : y.entries)
        yrank.emplace(e.node, e.rank);
    std::vector<double> xs, ys;
    xs.reserve(x.entries.size());
    ys.reserve(x.entries.size());
    for (const auto &e : x.entries) {
        auto it = yrank.find(e.node);
        if (it == yrank.end())
            throw ValidationError("rankings cover different node sets");
        xs.push_back(e.rank);
        ys.push_back(it->second);
    }
    return pearson(xs, ys);
}

TopLCurve top_l_curve(const RankingList &predicted, const std::map<NodeId, double> &actual) {
    TopLCurve curve;
    curve.measure = predicted.measure;
    curve.values.reserve(predicted.entries.size());
    double sum = 0.0;
    std::size_t l = 0;
    for (const auto &e : predicted.entries) {
        auto it = actual.find(e.node);
        if (it == actual.end())
            throw ValidationError("no actual influence for node " + std::to_string(e.node));
        sum += it->second;
        ++l;
        curve.values.push_back(sum / static_cast<double>(l));
    }
    return curve;
}

TopLCurve benchmark_curve(const std::map<NodeId, double> &actual) {
    auto curve = top_l_curve(rank_values("benchmark", actual), actual);
    return curve;
}

namespace {

struct TrainedScores {
    std::map<std::string, ScoreTable> tables;
};

// All seven measures on the training window.
TrainedScores score_training_window(const TemporalTrace &train, const RelationConfig &rc,
                                    int workers) {
    TrainedScores out;

    auto timelines = build_timelines(train);
    auto srs_matrix = build_srs_matrix(timelines, train.nodes, train.window.length());
    auto indirect = build_indirect_matrix(srs_matrix, rc.max_intermediates, rc.epsilon, workers);
    auto spheres = build_influence_spheres(srs_matrix, indirect);
    out.tables.emplace(measure_name(Measure::Sorec), sorec_scores(spheres));

    auto graph = aggregate_graph(train);
    for (Measure m : {Measure::Degree, Measure::Betweenness, Measure::Closeness,
                      Measure::Pagerank})
        out.tables.emplace(measure_name(m), baseline_centrality(graph, m));

    for (Measure m : {Measure::Ef, Measure::Tcd})
        out.tables.emplace(measure_name(m), contact_volume_scores(timelines, train.nodes, m));
    return out;
}

std::vector<CorrelationReport> correlate_all(const std::map<std::string, RankingList> &rankings,
                                             const std::map<NodeId, SIROutcome> &actual) {
    std::map<NodeId, double> range, speed;
    for (const auto &[node, outcome] : actual) {
        range.emplace(node, outcome.influence_range);
        speed.emplace(node, outcome.influence_speed);
    }
    // Range: larger is better. Speed: smaller mean infection time means a
    // faster spreader, so the actual-speed ranking is ascending.
    RankingList range_rank = rank_values("range", range, false);
    RankingList speed_rank = rank_values("speed", speed, true);

    std::vector<CorrelationReport> out;
    for (const auto &[name, ranking] : rankings) {
        for (const auto *target : {"range", "speed"}) {
            const RankingList &actual_rank =
                std::string(target) == "range" ? range_rank : speed_rank;
            PearsonResult r = pearson_rank_correlation(ranking, actual_rank);
            out.push_back({name, target, r.rho, r.degenerate, ranking.entries.size()});
        }
    }
    return out;
}

} // namespace

EvalReport evaluate_pipeline(const TemporalTrace &trace, const EvalConfig &config) {
    config.sir.validate();
    if (config.sweep_segments < 1)
        throw ValidationError("sweep_segments must be >= 1");

    EvalReport report;
    report.config = config;
    report.trace_window = trace.window;
    report.node_count = trace.node_count();
    report.record_count = trace.records.size();

    auto [train, test] = split_window(trace, config.split_fraction);
    report.train_window = train.window;
    report.test_window = test.window;

    TrainedScores trained = score_training_window(train, config.relations, config.workers);
    for (const auto &[name, table] : trained.tables)
        report.rankings.emplace(name, rank_nodes(table));

    report.actual = monte_carlo_influence(test, config.sir, config.workers);
    report.correlations = correlate_all(report.rankings, report.actual);

    std::map<NodeId, double> range;
    for (const auto &[node, outcome] : report.actual)
        range.emplace(node, outcome.influence_range);
    report.benchmark = benchmark_curve(range);
    for (const auto &[name, ranking] : report.rankings)
        report.curves.emplace(name, top_l_curve(ranking, range));

    // Optional sweep: the test window is cut into equal segments and the
    // ground truth is re-measured on each, so the prediction horizon grows
    // with the segment index.
    if (config.sweep_segments > 1) {
        TimeSlot seg_len = test.window.length() / config.sweep_segments;
        if (seg_len < 1)
            throw ValidationError("test window too short for the requested sweep segments");
        TemporalTrace rest = test;
        for (int s = 0; s < config.sweep_segments; ++s) {
            TemporalTrace segment;
            if (s + 1 == config.sweep_segments) {
                segment = rest;
            } else {
                double frac = static_cast<double>(seg_len) /
                              static_cast<double>(rest.window.length());
                auto cut = split_window(rest, frac);
                segment = cut.first;
                rest = cut.second;
            }
            SweepPoint point;
            point.segment = s;
            point.window = segment.window;
            auto actual = monte_carlo_influence(segment, config.sir, config.workers);
            point.correlations = correlate_all(report.rankings, actual);
            report.sweep.push_back(std::move(point));
        }
    }
    return report;
}

namespace {

json recovery_to_json(const Recovery &rec) {
    json j;
    if (const auto *g = std::get_if<GeometricRecovery>(&rec)) {
        j["kind"] = "geometric";
        j["mu"] = g->mu;
    } else {
        const auto &f = std::get<FixedRecovery>(rec);
        j["kind"] = "fixed";
        j["tau"] = f.tau;
    }
    return j;
}

json config_to_json(const EvalReport &r) {
    json j;
    j["time_unit"] = "trace slots; the slot granularity is whatever the input file used";
    j["trace"] = {{"nodes", r.node_count},
                  {"records", r.record_count},
                  {"window", {r.trace_window.begin, r.trace_window.end}}};
    j["split_fraction"] = r.config.split_fraction;
    j["train_window"] = {r.train_window.begin, r.train_window.end};
    j["test_window"] = {r.test_window.begin, r.test_window.end};
    j["max_intermediates"] = r.config.relations.max_intermediates;
    j["edge_threshold"] = r.config.relations.epsilon;
    j["sir"] = {{"lambda", r.config.sir.lambda},
                {"recovery", recovery_to_json(r.config.sir.recovery)},
                {"runs", r.config.sir.runs},
                {"rng_seed", r.config.sir.rng_seed}};
    j["speed_rank_order"] = "ascending mean infection time (rank 1 = fastest spreader)";
    j["sweep_segments"] = r.config.sweep_segments;
    j["workers"] = r.config.workers;
    return j;
}

json correlations_to_json(const std::vector<CorrelationReport> &cs) {
    json arr = json::array();
    for (const auto &c : cs) {
        json j;
        j["measure"] = c.measure;
        j["target"] = c.target;
        j["rho"] = c.rho;
        j["degenerate"] = c.degenerate;
        j["n"] = c.n;
        arr.push_back(std::move(j));
    }
    return arr;
}

} // namespace

std::string report_to_json(const EvalReport &report) {
    json j;
    j["config"] = config_to_json(report);
    j["correlations"] = correlations_to_json(report.correlations);

    json actual = json::array();
    for (const auto &[node, outcome] : report.actual)
        actual.push_back({{"node", node},
                          {"mean_range", outcome.influence_range},
                          {"mean_speed", outcome.influence_speed}});
    j["actual_influence"] = std::move(actual);

    json scores = json::object();
    for (const auto &[name, ranking] : report.rankings) {
        json rows = json::array();
        for (const auto &e : ranking.entries)
            rows.push_back({{"node", e.node}, {"score", e.score}, {"rank", e.rank}});
        scores[name] = std::move(rows);
    }
    j["rankings"] = std::move(scores);

    json curves = json::object();
    curves["benchmark"] = report.benchmark.values;
    for (const auto &[name, curve] : report.curves)
        curves[name] = curve.values;
    j["top_l_range"] = std::move(curves);

    if (!report.sweep.empty()) {
        json sweep = json::array();
        for (const auto &p : report.sweep)
            sweep.push_back({{"segment", p.segment},
                             {"window", {p.window.begin, p.window.end}},
                             {"correlations", correlations_to_json(p.correlations)}});
        j["sweep"] = std::move(sweep);
    }
    return j.dump(2) + "\n";
}

void write_report_bundle(const EvalReport &report, const std::filesystem::path &dir,
                         bool curve_files) {
    std::filesystem::create_directories(dir);
    const std::string echo = "# config: " + config_to_json(report).dump() + "\n";
    auto open = [&](const std::filesystem::path &name) {
        std::ofstream out(dir / name, std::ios::binary);
        if (!out)
            throw ValidationError("cannot write " + (dir / name).string());
        out << echo;
        return out;
    };

    {
        std::ofstream out(dir / "report.json", std::ios::binary);
        if (!out)
            throw ValidationError("cannot write " + (dir / "report.json").string());
        out << report_to_json(report);
    }
    {
        auto out = open("correlations.csv");
        out << "measure,target,rho,degenerate,n\n";
        for (const auto &c : report.correlations)
            out << c.measure << ',' << c.target << ',' << fmt_double(c.rho) << ','
                << (c.degenerate ? 1 : 0) << ',' << c.n << "\n";
    }
    for (const auto &[name, ranking] : report.rankings) {
        auto out = open("scores_" + name + ".csv");
        out << "node,score,rank\n";
        for (const auto &e : ranking.entries)
            out << e.node << ',' << fmt_double(e.score) << ',' << fmt_double(e.rank) << "\n";
    }
    {
        auto out = open("sir_actual.csv");
        out << "node,mean_range,mean_speed,runs\n";
        for (const auto &[node, outcome] : report.actual)
            out << node << ',' << fmt_double(outcome.influence_range) << ','
                << fmt_double(outcome.influence_speed) << ',' << report.config.sir.runs << "\n";
    }
    {
        auto out = open("topl_range.csv");
        out << "L,benchmark";
        for (const auto &[name, curve] : report.curves)
            out << ',' << name;
        out << "\n";
        for (std::size_t l = 0; l < report.benchmark.values.size(); ++l) {
            out << (l + 1) << ',' << fmt_double(report.benchmark.values[l]);
            for (const auto &[name, curve] : report.curves)
                out << ',' << fmt_double(curve.values[l]);
            out << "\n";
        }
    }
    if (!report.sweep.empty()) {
        auto out = open("sweep.csv");
        out << "segment,window_begin,window_end,measure,target,rho,degenerate\n";
        for (const auto &p : report.sweep)
            for (const auto &c : p.correlations)
                out << p.segment << ',' << p.window.begin << ',' << p.window.end << ','
                    << c.measure << ',' << c.target << ',' << fmt_double(c.rho) << ','
                    << (c.degenerate ? 1 : 0) << "\n";
    }
    if (curve_files) {
        auto curves_dir = dir / "curves";
        std::filesystem::create_directories(curves_dir);
        auto write_curve = [&](const std::string &name, const TopLCurve &curve) {
            std::ofstream out(curves_dir / (name + ".dat"), std::ios::binary);
            out << "# L  mean_actual_influence_range\n";
            for (std::size_t l = 0; l < curve.values.size(); ++l)
                out << (l + 1) << ' ' << fmt_double(curve.values[l]) << "\n";
        };
        write_curve("benchmark", report.benchmark);
        for (const auto &[name, curve] : report.curves)
            write_curve(name, curve);
    }
}

} // namespace sorec
