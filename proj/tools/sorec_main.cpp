// sorec: temporal contact-network relation and centrality toolkit.
//
// Subcommands mirror the pipeline stages (synth, srs, centrality, sir,
// evaluate) so every intermediate artifact can be produced and inspected
// on its own. All randomness flows from explicit --seed flags; identical
// invocations produce byte-identical outputs.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sorec/centrality.hpp"
#include "sorec/errors.hpp"
#include "sorec/eval.hpp"
#include "sorec/relations.hpp"
#include "sorec/sir.hpp"
#include "sorec/synth.hpp"
#include "sorec/trace.hpp"

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

// Shortest round-trippable decimal form, so outputs are byte-stable.
std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct GlobalOptions {
    std::string out_dir = ".";
    std::uint64_t seed = 42;
    std::string format = "csv";
    int workers = 1;
};

fs::path resolve_out(const GlobalOptions &global, const fs::path &path) {
    fs::path full = path.is_absolute() ? path : fs::path(global.out_dir) / path;
    if (full.has_parent_path())
        fs::create_directories(full.parent_path());
    return full;
}

std::ofstream open_out(const fs::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw sorec::ValidationError("cannot write " + path.string());
    return out;
}

sorec::ObservationWindow parse_window_spec(const std::string &spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--window", "expected BEGIN:END, got '" + spec + "'");
    try {
        sorec::TimeSlot begin = std::stoll(spec.substr(0, colon));
        sorec::TimeSlot end = std::stoll(spec.substr(colon + 1));
        return sorec::ObservationWindow::make(begin, end);
    } catch (const sorec::Error &e) {
        throw CLI::ValidationError("--window", e.what());
    } catch (const std::exception &) {
        throw CLI::ValidationError("--window", "expected BEGIN:END, got '" + spec + "'");
    }
}

sorec::Recovery parse_recovery_spec(const std::string &spec) {
    std::string kind = spec;
    std::string value;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
        kind = spec.substr(0, colon);
        value = spec.substr(colon + 1);
    }
    try {
        if (kind == "geometric")
            return sorec::GeometricRecovery{value.empty() ? 0.02 : std::stod(value)};
        if (kind == "fixed")
            return sorec::FixedRecovery{value.empty() ? 50 : std::stoll(value)};
    } catch (const std::exception &) {
        throw CLI::ValidationError("--recovery", "bad parameter in '" + spec + "'");
    }
    throw CLI::ValidationError("--recovery",
                               "expected geometric:MU or fixed:TAU, got '" + spec + "'");
}

sorec::DurationModel parse_duration_spec(const std::string &spec) {
    std::string kind = spec;
    std::string value;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
        kind = spec.substr(0, colon);
        value = spec.substr(colon + 1);
    }
    sorec::DurationModel model;
    try {
        if (!value.empty())
            model.mean_slots = std::stod(value);
    } catch (const std::exception &) {
        throw CLI::ValidationError("--duration", "bad length in '" + spec + "'");
    }
    if (kind == "fixed")
        model.kind = sorec::DurationModel::Kind::Fixed;
    else if (kind == "geometric")
        model.kind = sorec::DurationModel::Kind::Geometric;
    else
        throw CLI::ValidationError("--duration",
                                   "expected fixed:LEN or geometric:MEAN, got '" + spec + "'");
    return model;
}

sorec::TemporalTrace load_input(const std::string &path, const std::string &window_spec) {
    std::optional<sorec::ObservationWindow> window;
    if (!window_spec.empty())
        window = parse_window_spec(window_spec);
    return sorec::load_trace_file(path, window);
}

json window_json(const sorec::ObservationWindow &w) {
    return json{w.begin, w.end};
}

json recovery_json(const sorec::Recovery &rec) {
    if (const auto *geo = std::get_if<sorec::GeometricRecovery>(&rec))
        return json{{"kind", "geometric"}, {"mu", geo->mu}};
    const auto &fixed = std::get<sorec::FixedRecovery>(rec);
    return json{{"kind", "fixed"}, {"tau", fixed.tau}};
}

// --- synth -----------------------------------------------------------

struct SynthArgs {
    std::string config_path;
    std::string out = "trace.csv";
    std::string duration_spec;
    sorec::SynthConfig config;
    std::vector<sorec::NodeId> hubs;
};

void run_synth(const GlobalOptions &global, const SynthArgs &args, const CLI::App &cmd) {
    sorec::SynthConfig config;
    if (!args.config_path.empty()) {
        std::ifstream in(args.config_path, std::ios::binary);
        if (!in)
            throw sorec::ValidationError("cannot read config " + args.config_path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        config = sorec::SynthConfig::from_json_text(buffer.str());
    }
    // Explicit flags override the config file (and the built-in defaults).
    if (cmd.count("--nodes"))
        config.node_count = args.config.node_count;
    if (cmd.count("--window-length"))
        config.window_length = args.config.window_length;
    if (cmd.count("--communities"))
        config.communities = args.config.communities;
    if (cmd.count("--hubs"))
        config.hub_nodes = args.hubs;
    if (cmd.count("--intra-rate"))
        config.intra_rate = args.config.intra_rate;
    if (cmd.count("--inter-rate"))
        config.inter_rate = args.config.inter_rate;
    if (cmd.count("--hub-rate"))
        config.hub_rate = args.config.hub_rate;
    if (!args.duration_spec.empty())
        config.duration = parse_duration_spec(args.duration_spec);
    config.seed = global.seed;

    sorec::TemporalTrace trace = sorec::generate_synthetic(config);

    fs::path path = resolve_out(global, args.out);
    auto out = open_out(path);
    sorec::serialize_trace(trace, out, {"config: " + json::parse(config.to_json_text()).dump()});
    std::cout << "wrote " << path.string() << " (" << trace.records.size() << " records, "
              << trace.node_count() << " nodes)\n";
}

// --- srs -------------------------------------------------------------

struct SrsArgs {
    std::string trace_path;
    std::string window_spec;
    int max_intermediates = 2;
    double epsilon = 0.0;
    std::string out = "srs.csv";
    std::string indirect_out;
    std::string spheres_out;
    std::string metrics_out;
};

void run_srs(const GlobalOptions &global, const SrsArgs &args) {
    sorec::TemporalTrace trace = load_input(args.trace_path, args.window_spec);
    sorec::TimelineMap timelines = sorec::build_timelines(trace);
    sorec::SRSMatrix srs =
        sorec::build_srs_matrix(timelines, trace.nodes, trace.window.length());

    json config{{"input", args.trace_path},
                {"window", window_json(trace.window)},
                {"max_intermediates", args.max_intermediates},
                {"epsilon", args.epsilon}};
    const std::string echo = "# config: " + config.dump() + "\n";

    bool need_indirect = !args.indirect_out.empty() || !args.spheres_out.empty();
    sorec::PairValues indirect;
    if (need_indirect)
        indirect = sorec::build_indirect_matrix(srs, args.max_intermediates, args.epsilon,
                                                global.workers);

    auto write_pairs = [&](const fs::path &path, const char *column,
                           auto value_of) {
        if (global.format == "json") {
            json rows = json::array();
            for (std::size_t i = 0; i < srs.values.size(); ++i)
                for (std::size_t j = i + 1; j < srs.values.size(); ++j)
                    if (double v = value_of(i, j); v != 0.0)
                        rows.push_back(json{{"a", srs.values.nodes()[i]},
                                            {"b", srs.values.nodes()[j]},
                                            {column, v}});
            auto out = open_out(path);
            out << json{{"config", config}, {"pairs", rows}}.dump(2) << "\n";
            return;
        }
        auto out = open_out(path);
        out << echo << "node_a,node_b," << column << "\n";
        for (std::size_t i = 0; i < srs.values.size(); ++i)
            for (std::size_t j = i + 1; j < srs.values.size(); ++j)
                if (double v = value_of(i, j); v != 0.0)
                    out << srs.values.nodes()[i] << "," << srs.values.nodes()[j] << ","
                        << fmt(v) << "\n";
    };

    fs::path srs_path = resolve_out(global, args.out);
    write_pairs(srs_path, "srs",
                [&](std::size_t i, std::size_t j) { return srs.values.at_index(i, j); });
    std::cout << "wrote " << srs_path.string() << "\n";

    if (!args.indirect_out.empty()) {
        fs::path path = resolve_out(global, args.indirect_out);
        write_pairs(path, "indirect_srs",
                    [&](std::size_t i, std::size_t j) { return indirect.at_index(i, j); });
        std::cout << "wrote " << path.string() << "\n";
    }
    if (!args.spheres_out.empty()) {
        auto spheres = sorec::build_influence_spheres(srs, indirect);
        json map = json::object();
        for (const auto &sphere : spheres) {
            json friends = json::object();
            for (const auto &[node, w] : sphere.strengths)
                friends[std::to_string(node)] = w;
            map[std::to_string(sphere.owner)] = std::move(friends);
        }
        fs::path path = resolve_out(global, args.spheres_out);
        auto out = open_out(path);
        out << json{{"config", config}, {"spheres", map}}.dump(2) << "\n";
        std::cout << "wrote " << path.string() << "\n";
    }
    if (!args.metrics_out.empty()) {
        fs::path path = resolve_out(global, args.metrics_out);
        auto out = open_out(path);
        out << echo << "node_a,node_b,ef,tcd,asp\n";
        for (const auto &[pair, timeline] : timelines) {
            auto m = sorec::contact_metrics(timeline, trace.window);
            out << pair.first << "," << pair.second << "," << m.ef << "," << m.tcd << ","
                << fmt(m.asp) << "\n";
        }
        std::cout << "wrote " << path.string() << "\n";
    }
}

// --- centrality ------------------------------------------------------

struct CentralityArgs {
    std::string trace_path;
    std::string window_spec;
    std::vector<std::string> measures{"all"};
    int max_intermediates = 2;
    double epsilon = 0.0;
    std::string bundle_out;
};

void run_centrality(const GlobalOptions &global, const CentralityArgs &args) {
    std::vector<sorec::Measure> wanted;
    for (const auto &name : args.measures) {
        if (name == "all") {
            wanted = sorec::all_measures();
            break;
        }
        wanted.push_back(sorec::measure_from_name(name));
    }

    sorec::TemporalTrace trace = load_input(args.trace_path, args.window_spec);
    sorec::TimelineMap timelines = sorec::build_timelines(trace);

    json config{{"input", args.trace_path},
                {"window", window_json(trace.window)},
                {"max_intermediates", args.max_intermediates},
                {"epsilon", args.epsilon},
                {"workers", global.workers}};

    std::optional<sorec::StaticGraph> graph;
    std::optional<sorec::ScoreTable> sorec_table;
    auto table_for = [&](sorec::Measure measure) -> sorec::ScoreTable {
        switch (measure) {
        case sorec::Measure::Sorec: {
            if (!sorec_table) {
                sorec::SRSMatrix srs =
                    sorec::build_srs_matrix(timelines, trace.nodes, trace.window.length());
                sorec::PairValues indirect = sorec::build_indirect_matrix(
                    srs, args.max_intermediates, args.epsilon, global.workers);
                sorec_table = sorec::sorec_scores(sorec::build_influence_spheres(srs, indirect));
            }
            return *sorec_table;
        }
        case sorec::Measure::Ef:
        case sorec::Measure::Tcd:
            return sorec::contact_volume_scores(timelines, trace.nodes, measure);
        default:
            if (!graph)
                graph = sorec::aggregate_graph(trace);
            return sorec::baseline_centrality(*graph, measure);
        }
    };

    json bundle_measures = json::object();
    for (sorec::Measure measure : wanted) {
        sorec::RankingList ranking = sorec::rank_nodes(table_for(measure));
        std::string name = sorec::measure_name(measure);

        if (global.format == "json") {
            json rows = json::array();
            for (const auto &e : ranking.entries)
                rows.push_back(json{{"node", e.node}, {"score", e.score}, {"rank", e.rank}});
            fs::path path = resolve_out(global, name + ".json");
            auto out = open_out(path);
            out << json{{"config", config}, {"measure", name}, {"scores", rows}}.dump(2)
                << "\n";
            std::cout << "wrote " << path.string() << "\n";
        } else {
            fs::path path = resolve_out(global, name + ".csv");
            auto out = open_out(path);
            out << "# config: " << config.dump() << "\n# measure: " << name << "\n"
                << "node,score,rank\n";
            for (const auto &e : ranking.entries)
                out << e.node << "," << fmt(e.score) << "," << fmt(e.rank) << "\n";
            std::cout << "wrote " << path.string() << "\n";
        }

        if (!args.bundle_out.empty()) {
            json rows = json::array();
            for (const auto &e : ranking.entries)
                rows.push_back(json{{"node", e.node}, {"score", e.score}, {"rank", e.rank}});
            bundle_measures[name] = std::move(rows);
        }
    }

    if (!args.bundle_out.empty()) {
        fs::path path = resolve_out(global, args.bundle_out);
        auto out = open_out(path);
        out << json{{"config", config}, {"measures", bundle_measures}}.dump(2) << "\n";
        std::cout << "wrote " << path.string() << "\n";
    }
}

// --- sir -------------------------------------------------------------

struct SirArgs {
    std::string trace_path;
    std::string window_spec;
    double lambda = 0.1;
    std::string recovery_spec = "geometric:0.02";
    int runs = 500;
    std::vector<sorec::NodeId> seed_nodes;
    std::string out = "sir.csv";
    std::string per_run_out;
};

void run_sir(const GlobalOptions &global, const SirArgs &args) {
    sorec::TemporalTrace trace = load_input(args.trace_path, args.window_spec);

    sorec::SIRConfig config;
    config.lambda = args.lambda;
    config.recovery = parse_recovery_spec(args.recovery_spec);
    config.runs = args.runs;
    config.rng_seed = global.seed;
    config.validate();

    json config_echo{{"input", args.trace_path},
                     {"window", window_json(trace.window)},
                     {"lambda", config.lambda},
                     {"recovery", recovery_json(config.recovery)},
                     {"runs", config.runs},
                     {"rng_seed", config.rng_seed},
                     {"workers", global.workers}};

    sorec::SirSimulator simulator(trace);
    bool keep_runs = !args.per_run_out.empty();

    std::map<sorec::NodeId, sorec::SIROutcome> outcomes;
    if (args.seed_nodes.empty()) {
        outcomes = simulator.monte_carlo(config, global.workers, keep_runs);
    } else {
        for (sorec::NodeId seed_node : args.seed_nodes) {
            if (!trace.has_node(seed_node))
                throw sorec::ValidationError("seed node " + std::to_string(seed_node) +
                                             " not in trace");
            outcomes[seed_node] = simulator.simulate_seed(seed_node, config, keep_runs);
        }
    }

    fs::path path = resolve_out(global, args.out);
    if (global.format == "json") {
        json rows = json::array();
        for (const auto &[node, outcome] : outcomes)
            rows.push_back(json{{"node", node},
                                {"mean_range", outcome.influence_range},
                                {"mean_speed", outcome.influence_speed},
                                {"runs", config.runs}});
        auto out = open_out(path);
        out << json{{"config", config_echo}, {"outcomes", rows}}.dump(2) << "\n";
    } else {
        auto out = open_out(path);
        out << "# config: " << config_echo.dump() << "\n"
            << "node,mean_range,mean_speed,runs\n";
        for (const auto &[node, outcome] : outcomes)
            out << node << "," << fmt(outcome.influence_range) << ","
                << fmt(outcome.influence_speed) << "," << config.runs << "\n";
    }
    std::cout << "wrote " << path.string() << "\n";

    if (keep_runs) {
        fs::path runs_path = resolve_out(global, args.per_run_out);
        auto out = open_out(runs_path);
        out << "# config: " << config_echo.dump() << "\n"
            << "node,run,ever_infected,mean_infection_time\n";
        for (const auto &[node, outcome] : outcomes)
            for (std::size_t r = 0; r < outcome.per_run.size(); ++r)
                out << node << "," << r << "," << outcome.per_run[r].ever_infected << ","
                    << fmt(outcome.per_run[r].mean_infection_time) << "\n";
        std::cout << "wrote " << runs_path.string() << "\n";
    }
}

// --- evaluate --------------------------------------------------------

struct EvaluateArgs {
    std::string trace_path;
    std::string window_spec;
    double split = 0.6;
    int max_intermediates = 2;
    double epsilon = 0.0;
    double lambda = 0.1;
    std::string recovery_spec = "geometric:0.02";
    int runs = 500;
    int sweep_segments = 1;
    bool curves = false;
};

void run_evaluate(const GlobalOptions &global, const EvaluateArgs &args) {
    sorec::TemporalTrace trace = load_input(args.trace_path, args.window_spec);

    sorec::EvalConfig config;
    config.split_fraction = args.split;
    config.relations.max_intermediates = args.max_intermediates;
    config.relations.epsilon = args.epsilon;
    config.sir.lambda = args.lambda;
    config.sir.recovery = parse_recovery_spec(args.recovery_spec);
    config.sir.runs = args.runs;
    config.sir.rng_seed = global.seed;
    config.sweep_segments = args.sweep_segments;
    config.workers = global.workers;

    sorec::EvalReport report = sorec::evaluate_pipeline(trace, config);
    sorec::write_report_bundle(report, fs::path(global.out_dir), args.curves);
    std::cout << "wrote report bundle to " << global.out_dir << "\n";

    for (const auto &corr : report.correlations)
        if (corr.target == "range")
            std::cout << "  rho(" << corr.measure << ", range) = " << fmt(corr.rho)
                      << (corr.degenerate ? " (degenerate)" : "") << "\n";
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Social-relation centrality toolkit for temporal contact networks"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--out-dir", global.out_dir, "Directory for output files")
        ->envname("SOREC_OUT_DIR")
        ->capture_default_str();
    app.add_option("--seed", global.seed, "Root RNG seed")->capture_default_str();
    app.add_option("--format", global.format, "Output format for srs/centrality/sir")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--workers", global.workers, "Worker threads for relations and sir stages")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    SynthArgs synth;
    CLI::App *cmd_synth = app.add_subcommand("synth", "Generate a synthetic contact trace");
    cmd_synth->add_option("--config", synth.config_path, "Generator config JSON file");
    cmd_synth->add_option("--nodes", synth.config.node_count, "Number of nodes");
    cmd_synth->add_option("--window-length", synth.config.window_length, "Window length (slots)")
        ->check(CLI::PositiveNumber);
    cmd_synth->add_option("--communities", synth.config.communities, "Community count");
    cmd_synth->add_option("--hubs", synth.hubs, "Hub node ids")->delimiter(',');
    cmd_synth->add_option("--intra-rate", synth.config.intra_rate,
                          "Per-slot encounter start rate inside a community");
    cmd_synth->add_option("--inter-rate", synth.config.inter_rate,
                          "Per-slot rate across communities");
    cmd_synth->add_option("--hub-rate", synth.config.hub_rate,
                          "Per-slot rate for cross-community hub pairs");
    cmd_synth->add_option("--duration", synth.duration_spec,
                          "Encounter length model: fixed:LEN or geometric:MEAN");
    cmd_synth->add_option("--out", synth.out, "Output trace file")->capture_default_str();
    cmd_synth->callback([&] { run_synth(global, synth, *cmd_synth); });

    SrsArgs srs;
    CLI::App *cmd_srs =
        app.add_subcommand("srs", "Compute pairwise relation stability for a trace");
    cmd_srs->add_option("trace", srs.trace_path, "Input trace CSV")->required();
    cmd_srs->add_option("--window", srs.window_spec, "Observation window BEGIN:END "
                                                     "(default: inferred from the trace)");
    cmd_srs->add_option("--max-intermediates", srs.max_intermediates,
                        "Longest bridging path: number of intermediate nodes")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_srs->add_option("--epsilon", srs.epsilon, "Minimum hop strength for bridging paths")
        ->capture_default_str();
    cmd_srs->add_option("--out", srs.out, "Pairwise stability CSV")->capture_default_str();
    cmd_srs->add_option("--indirect-out", srs.indirect_out, "Pairwise bridged-relation output");
    cmd_srs->add_option("--spheres-out", srs.spheres_out, "Influence spheres JSON output");
    cmd_srs->add_option("--metrics-out", srs.metrics_out,
                        "Per-pair frequency/duration/separation output");
    cmd_srs->callback([&] { run_srs(global, srs); });

    CentralityArgs centrality;
    CLI::App *cmd_centrality =
        app.add_subcommand("centrality", "Rank nodes by one or more measures");
    cmd_centrality->add_option("trace", centrality.trace_path, "Input trace CSV")->required();
    cmd_centrality->add_option("--window", centrality.window_spec,
                               "Observation window BEGIN:END");
    cmd_centrality
        ->add_option("--measure", centrality.measures,
                     "all | sorec | degree | betweenness | closeness | pagerank | ef | tcd")
        ->delimiter(',')
        ->check(CLI::IsMember({"all", "sorec", "degree", "betweenness", "closeness",
                               "pagerank", "ef", "tcd"}))
        ->capture_default_str();
    cmd_centrality->add_option("--max-intermediates", centrality.max_intermediates,
                               "Longest bridging path for the sorec measure")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_centrality->add_option("--epsilon", centrality.epsilon,
                               "Minimum hop strength for bridging paths")
        ->capture_default_str();
    cmd_centrality->add_option("--bundle", centrality.bundle_out,
                               "Also write one JSON bundle of all requested measures");
    cmd_centrality->callback([&] { run_centrality(global, centrality); });

    SirArgs sir;
    CLI::App *cmd_sir = app.add_subcommand("sir", "Monte Carlo spreading ground truth");
    cmd_sir->add_option("trace", sir.trace_path, "Input trace CSV")->required();
    cmd_sir->add_option("--window", sir.window_spec, "Observation window BEGIN:END");
    cmd_sir->add_option("--lambda", sir.lambda, "Per-contact-slot infection probability")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd_sir->add_option("--recovery", sir.recovery_spec, "geometric:MU or fixed:TAU")
        ->capture_default_str();
    cmd_sir->add_option("--runs", sir.runs, "Runs per seed node")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_sir->add_option("--seed-nodes", sir.seed_nodes,
                        "Seed nodes to simulate (default: every node)")
        ->delimiter(',');
    cmd_sir->add_option("--out", sir.out, "Per-node outcome file")->capture_default_str();
    cmd_sir->add_option("--per-run", sir.per_run_out, "Also write per-run outcomes CSV");
    cmd_sir->callback([&] { run_sir(global, sir); });

    EvaluateArgs evaluate;
    CLI::App *cmd_evaluate = app.add_subcommand(
        "evaluate", "Train/test evaluation of all measures against spreading ground truth");
    cmd_evaluate->add_option("trace", evaluate.trace_path, "Input trace CSV")->required();
    cmd_evaluate->add_option("--window", evaluate.window_spec, "Observation window BEGIN:END");
    cmd_evaluate->add_option("--split", evaluate.split, "Training fraction of the window")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd_evaluate->add_option("--max-intermediates", evaluate.max_intermediates,
                             "Longest bridging path: number of intermediate nodes")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_evaluate->add_option("--epsilon", evaluate.epsilon,
                             "Minimum hop strength for bridging paths")
        ->capture_default_str();
    cmd_evaluate->add_option("--lambda", evaluate.lambda,
                             "Per-contact-slot infection probability")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd_evaluate->add_option("--recovery", evaluate.recovery_spec, "geometric:MU or fixed:TAU")
        ->capture_default_str();
    cmd_evaluate->add_option("--runs", evaluate.runs, "SIR runs per seed node")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_evaluate->add_option("--sweep-segments", evaluate.sweep_segments,
                             "Split the test window into N equal segments and correlate each")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_evaluate->add_flag("--curves", evaluate.curves, "Also write per-measure curve files");
    cmd_evaluate->callback([&] { run_evaluate(global, evaluate); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 1;
    } catch (const sorec::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
