// Acceptance gate: every release-blocking property of the toolkit, one
// pass/fail line each. Runs standalone (no test framework) so the output
// reads as a checklist; exits nonzero if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#ifndef _WIN32
#include <sys/wait.h>
#endif

#include "oracles.hpp"
#include "sorec/centrality.hpp"
#include "sorec/eval.hpp"
#include "sorec/graph.hpp"
#include "sorec/relations.hpp"
#include "sorec/rng.hpp"
#include "sorec/sir.hpp"
#include "sorec/synth.hpp"
#include "sorec/trace.hpp"

using namespace sorec;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

// --- 1: stability bounds over randomized timelines -------------------

bool srs_bounds(std::string &detail) {
    auto t0 = Clock::now();
    Rng rng(derive_seed(90210, {1}));
    const int trials = 100000;
    for (int i = 0; i < trials; ++i) {
        double T = 10.0 + rng.next_double() * 9990.0;
        std::size_t count = rng.next_below(21); // 0..20 encounters
        std::vector<double> durations;
        if (count == 1 && i % 97 == 0) {
            durations.push_back(T); // boundary: one encounter filling the window
        } else {
            double remaining = T;
            for (std::size_t k = 0; k < count; ++k) {
                double len = remaining * (0.05 + 0.9 * rng.next_double());
                durations.push_back(len);
                remaining -= len;
            }
        }
        double s = srs_from_durations(durations, T);
        if (!(s >= 0.0 && s <= 1.0 + 1e-12)) {
            detail = "value " + fmt(s, 17) + " escaped [0, 1+1e-12]";
            return false;
        }
        if (durations.empty() != (s == 0.0)) {
            detail = "zero-iff-empty violated at trial " + std::to_string(i);
            return false;
        }
    }
    double secs = seconds_since(t0);
    detail = std::to_string(trials) + " timelines in " + fmt(secs, 3) + " s";
    return secs < 10.0;
}

// --- 2: strictly more encounters -> strictly larger stability --------

bool monotone_in_count(std::string &detail) {
    const double T = 1000.0;
    double prev = srs_regular(1, T / 2, T);
    for (std::size_t k = 2; k <= 1000; ++k) {
        double cur = srs_regular(k, T / 2, T);
        if (!(cur > prev)) {
            detail = "not strict at count " + std::to_string(k);
            return false;
        }
        prev = cur;
    }
    detail = "strict over counts 1..1000 at half-window contact";
    return true;
}

// --- 3: strictly more total contact -> strictly larger stability -----

bool monotone_in_duration(std::string &detail) {
    const double T = 1000.0;
    for (std::size_t count : {std::size_t(1), std::size_t(5), std::size_t(50)}) {
        double prev = -1.0;
        for (int step = 1; step <= 100; ++step) {
            double cur = srs_regular(count, T * step / 100.0, T);
            if (!(cur > prev)) {
                detail = "not strict at count " + std::to_string(count) + ", step " +
                         std::to_string(step);
                return false;
            }
            prev = cur;
        }
    }
    detail = "strict over 100 contact levels for 1, 5 and 50 encounters";
    return true;
}

// --- 4: regularizing durations never lowers stability ----------------

bool regularization_bonus(std::string &detail) {
    Rng rng(derive_seed(90210, {4}));
    const int trials = 10000;
    double worst = 0.0;
    for (int i = 0; i < trials; ++i) {
        double T = 100.0 + rng.next_double() * 9900.0;
        std::size_t count = 1 + rng.next_below(15);
        std::vector<double> durations;
        double remaining = T;
        for (std::size_t k = 0; k < count; ++k) {
            double len = remaining * (0.05 + 0.9 * rng.next_double());
            durations.push_back(len);
            remaining -= len;
        }
        double total = std::accumulate(durations.begin(), durations.end(), 0.0);
        double irregular = srs_from_durations(durations, T);
        double regular = srs_regular(count, total, T);
        worst = std::min(worst, regular - irregular);
        if (regular < irregular - 1e-12) {
            detail = "regular " + fmt(regular, 17) + " < irregular " + fmt(irregular, 17);
            return false;
        }
    }
    detail = std::to_string(trials) + " trials, worst margin " + fmt(worst, 3);
    return true;
}

// --- 5: controlled patterns order by duration, then frequency --------

bool pattern_discrimination(std::string &detail) {
    auto window = ObservationWindow::make(0, 100);
    auto tl = [](std::vector<Interval> enc) {
        return ContactTimeline::from_encounters({1, 2}, std::move(enc));
    };
    auto a = tl({{0, 5}, {20, 25}});                                     // short and rare
    auto b = tl({{0, 15}, {30, 45}});                                    // long but rare
    auto c = tl({{0, 5}, {10, 15}, {20, 25}, {30, 35}, {40, 45}, {50, 55}}); // frequent

    auto ma = contact_metrics(a, window);
    auto mb = contact_metrics(b, window);
    auto mc = contact_metrics(c, window);
    if (ma.ef != mb.ef || ma.tcd >= mb.tcd) {
        detail = "a/b controls broken (want equal frequency, larger duration)";
        return false;
    }
    if (mb.tcd != mc.tcd || mb.ef >= mc.ef) {
        detail = "b/c controls broken (want equal duration, larger frequency)";
        return false;
    }

    double sa = srs(a, window.length());
    double sb = srs(b, window.length());
    double sc = srs(c, window.length());
    if (!(sb > sa && sc > sb)) {
        detail = "ordering violated: " + fmt(sa) + ", " + fmt(sb) + ", " + fmt(sc);
        return false;
    }
    detail = "stability " + fmt(sa, 3) + " < " + fmt(sb, 3) + " < " + fmt(sc, 3);
    return true;
}

// --- 6: bridged relations vs exhaustive path enumeration -------------

bool indirect_oracle(std::string &detail) {
    Rng rng(derive_seed(90210, {6}));
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        auto n = static_cast<std::size_t>(2 + rng.next_below(6)); // 2..7 nodes
        std::vector<NodeId> nodes(n);
        for (std::size_t v = 0; v < n; ++v)
            nodes[v] = static_cast<NodeId>(v + 1);
        PairValues values(nodes);
        double density = 0.2 + 0.7 * rng.next_double();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (rng.next_double() < density)
                    values.set_index(i, j, 0.05 + 0.9 * rng.next_double());
        SRSMatrix matrix{values, 100};

        PairValues bridged = build_indirect_matrix(matrix, 5, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                double expected = oracles::noisy_or_paths(matrix, nodes[i], nodes[j], 5, 0.0);
                double diff = std::fabs(bridged.at_index(i, j) - expected);
                worst = std::max(worst, diff);
                if (diff > 1e-9) {
                    detail = "pair (" + std::to_string(nodes[i]) + "," +
                             std::to_string(nodes[j]) + ") off by " + fmt(diff, 3);
                    return false;
                }
            }
    }
    detail = "200 graphs, depth 5, worst gap " + fmt(worst, 3);
    return true;
}

// --- 7: entropy and centrality closed forms --------------------------

bool closed_forms(std::string &detail) {
    InfluenceSphere sphere;
    sphere.owner = 1;
    sphere.strengths = {{2, 0.5}, {3, 0.25}, {4, 0.25}};

    auto probs = influence_probabilities(sphere);
    double entropy = influence_entropy(probs);
    if (std::fabs(entropy - 1.5) > 1e-12) {
        detail = "entropy of {1/2, 1/4, 1/4} = " + fmt(entropy, 17);
        return false;
    }
    if (std::fabs(sorec_score(sphere) - entropy * sphere.total_weight()) > 1e-12) {
        detail = "score is not entropy x total weight";
        return false;
    }
    if (std::fabs(sorec_score(sphere) - 1.5) > 1e-12) {
        detail = "unit-weight sphere score = " + fmt(sorec_score(sphere), 17);
        return false;
    }

    InfluenceSphere doubled = sphere;
    for (auto &[node, w] : doubled.strengths)
        w *= 2.0;
    if (std::fabs(sorec_score(doubled) - 3.0) > 1e-12) {
        detail = "doubled-weight sphere score = " + fmt(sorec_score(doubled), 17);
        return false;
    }
    detail = "entropy 1.5 and score scaling verified to 1e-12";
    return true;
}

// --- 8: graph baselines vs oracles, exhaustively ----------------------

bool baseline_oracles(std::string &detail) {
    auto t0 = Clock::now();
    long graphs = 0;
    for (int n = 1; n <= 6; ++n) {
        std::vector<std::pair<int, int>> all_pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                all_pairs.emplace_back(i, j);
        std::vector<NodeId> nodes(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            nodes[static_cast<std::size_t>(v)] = static_cast<NodeId>(v + 1);

        for (std::uint32_t mask = 0; mask < (1u << all_pairs.size()); ++mask) {
            std::vector<std::pair<int, int>> edges;
            std::vector<int> parent(static_cast<std::size_t>(n));
            std::iota(parent.begin(), parent.end(), 0);
            std::function<int(int)> find = [&](int v) {
                return parent[static_cast<std::size_t>(v)] == v
                           ? v
                           : parent[static_cast<std::size_t>(v)] =
                                 find(parent[static_cast<std::size_t>(v)]);
            };
            for (std::size_t e = 0; e < all_pairs.size(); ++e)
                if (mask & (1u << e)) {
                    edges.push_back(all_pairs[e]);
                    parent[static_cast<std::size_t>(find(all_pairs[e].first))] =
                        find(all_pairs[e].second);
                }
            bool connected = true;
            for (int v = 0; v < n; ++v)
                connected = connected && find(v) == find(0);
            if (!connected)
                continue;
            ++graphs;

            StaticGraph graph(nodes);
            for (auto [i, j] : edges)
                graph.add_edge(nodes[static_cast<std::size_t>(i)],
                               nodes[static_cast<std::size_t>(j)]);

            struct Check {
                Measure measure;
                std::vector<double> expected;
                double tolerance;
            };
            std::vector<Check> checks = {
                {Measure::Betweenness, oracles::betweenness(n, edges), 1e-8},
                {Measure::Closeness, oracles::closeness(n, edges), 1e-8},
                {Measure::Pagerank, oracles::pagerank(n, edges, 0.85), 1e-8},
            };
            for (const auto &check : checks) {
                auto table = baseline_centrality(graph, check.measure);
                for (int v = 0; v < n; ++v) {
                    double got = table.scores.at(nodes[static_cast<std::size_t>(v)]);
                    double want = check.expected[static_cast<std::size_t>(v)];
                    if (std::fabs(got - want) > check.tolerance) {
                        detail = measure_name(check.measure) + " on " + std::to_string(n) +
                                 " nodes, mask " + std::to_string(mask) + ": got " +
                                 fmt(got, 12) + ", oracle " + fmt(want, 12);
                        return false;
                    }
                }
            }
        }
    }
    detail = std::to_string(graphs) + " connected graphs in " + fmt(seconds_since(t0), 3) + " s";
    return true;
}

// --- 9: spreading process vs exact outcome tree -----------------------

bool sir_oracle(std::string &detail) {
    auto trace = parse_trace("1,2,0,2\n2,3,1,3\n", ObservationWindow::make(0, 3));

    SIRConfig config;
    config.lambda = 0.5;
    config.recovery = FixedRecovery{2};
    config.runs = 100000;
    config.rng_seed = 42;
    SirSimulator sim(trace);
    auto outcome = sim.simulate_seed(1, config);
    auto expected = oracles::sir_expectation(trace, 1, 0.5, FixedRecovery{2});
    double gap = std::fabs(outcome.influence_range - expected.range);
    if (gap >= 0.01) {
        detail = "mean range " + fmt(outcome.influence_range, 8) + " vs exact " +
                 fmt(expected.range, 8);
        return false;
    }

    SIRConfig silent = config;
    silent.lambda = 0.0;
    silent.runs = 500;
    for (const auto &[seed, res] : monte_carlo_influence(trace, silent))
        if (res.influence_range != 1.0) {
            detail = "zero infectivity spread beyond seed " + std::to_string(seed);
            return false;
        }

    std::ostringstream chain;
    for (int i = 1; i < 6; ++i)
        chain << i << "," << i + 1 << ",0,10\n";
    auto chain_trace = parse_trace(chain.str(), ObservationWindow::make(0, 10));
    SIRConfig certain;
    certain.lambda = 1.0;
    certain.recovery = FixedRecovery{10};
    certain.runs = 10;
    for (const auto &[seed, res] : monte_carlo_influence(chain_trace, certain))
        if (res.influence_range != 6.0) {
            detail = "certain transmission missed the chain from seed " + std::to_string(seed);
            return false;
        }

    detail = "100000 runs within " + fmt(gap, 3) + " of exact " + fmt(expected.range, 8) +
             "; edge cases exact";
    return true;
}

// --- 10: rank correlation endpoints -----------------------------------

bool correlation_endpoints(std::string &detail) {
    auto x = rank_values("x", {{1, 4.0}, {2, 3.0}, {3, 2.0}, {4, 1.0}});
    if (pearson_rank_correlation(x, x).rho != 1.0) {
        detail = "self-correlation is not exactly 1";
        return false;
    }
    auto reversed = rank_values("y", {{1, 1.0}, {2, 2.0}, {3, 3.0}, {4, 4.0}});
    if (pearson_rank_correlation(x, reversed).rho != -1.0) {
        detail = "reversed correlation is not exactly -1";
        return false;
    }
    auto crossed = rank_values("y", {{1, 3.0}, {2, 4.0}, {3, 1.0}, {4, 2.0}});
    double rho = pearson_rank_correlation(x, crossed).rho;
    if (std::fabs(rho - 0.6) > 1e-12) {
        detail = "four-node cross = " + fmt(rho, 17);
        return false;
    }
    detail = "1, -1 exact; four-node cross 0.6 within 1e-12";
    return true;
}

// --- 11: end-to-end experiment on the planted-hub trace ---------------

std::string comparative_note;

bool end_to_end(std::string &detail) {
    SynthConfig synth; // 100 nodes, 4 communities, 10000 slots, seed 42
    synth.hub_nodes = SynthConfig::default_hubs(synth.node_count, synth.communities, 3);
    auto trace = generate_synthetic(synth);

    EvalConfig config;
    config.split_fraction = 0.6;
    config.sir.lambda = 0.1;
    config.sir.recovery = GeometricRecovery{0.02};
    config.sir.runs = 500;

    auto t0 = Clock::now();
    auto report = evaluate_pipeline(trace, config);
    double secs = seconds_since(t0);
    if (secs >= 300.0) {
        detail = "pipeline took " + fmt(secs, 4) + " s (budget 300)";
        return false;
    }

    double sorec_range_rho = 0.0;
    std::ostringstream ranges;
    for (const auto &c : report.correlations) {
        if (!std::isfinite(c.rho) || c.degenerate) {
            detail = "correlation " + c.measure + "/" + c.target + " is not finite";
            return false;
        }
        if (c.target == "range") {
            if (!ranges.str().empty())
                ranges << ", ";
            ranges << c.measure << "=" << fmt(c.rho, 3);
            if (c.measure == "sorec")
                sorec_range_rho = c.rho;
        }
    }
    if (!(sorec_range_rho > 0.0)) {
        detail = "sorec/range correlation " + fmt(sorec_range_rho, 4) + " is not positive";
        return false;
    }

    const auto &sorec_ranking = report.rankings.at("sorec").entries;
    std::set<NodeId> hubs(synth.hub_nodes.begin(), synth.hub_nodes.end());
    int hubs_in_top10 = 0;
    for (std::size_t i = 0; i < 10 && i < sorec_ranking.size(); ++i)
        hubs_in_top10 += hubs.count(sorec_ranking[i].node) ? 1 : 0;
    double hub_rate = hubs_in_top10 / 3.0;
    if (!(hub_rate > 0.1)) {
        detail = "no planted hub reached the sorec top-10";
        return false;
    }

    comparative_note = "rho vs influence range: " + ranges.str();
    detail = fmt(secs, 4) + " s; all 14 correlations finite; sorec/range rho " +
             fmt(sorec_range_rho, 3) + "; " + std::to_string(hubs_in_top10) +
             "/3 hubs in the top-10";
    return true;
}

// --- 12: byte-identical evaluation bundles ----------------------------

int run_cli(const std::string &args) {
    std::string cmd = std::string("\"") + SOREC_CLI_PATH + "\" " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
#ifndef _WIN32
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#else
    return status;
#endif
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool deterministic_bundles(std::string &detail) {
    fs::path base = fs::temp_directory_path() / "sorec_acceptance";
    fs::remove_all(base);
    fs::create_directories(base);
    if (run_cli("--out-dir \"" + base.string() +
                "\" synth --nodes 40 --window-length 800 --intra-rate 0.01"
                " --inter-rate 0.001 --out trace.csv") != 0) {
        detail = "trace generation failed";
        return false;
    }
    std::string evaluate = " evaluate \"" + (base / "trace.csv").string() +
                           "\" --runs 60 --lambda 0.15 --recovery geometric:0.05"
                           " --sweep-segments 2 --curves";
    for (const char *sub : {"a", "b"})
        if (run_cli("--out-dir \"" + (base / sub).string() + "\"" + evaluate) != 0) {
            detail = "evaluation run failed";
            return false;
        }

    std::size_t compared = 0;
    for (const auto &entry : fs::recursive_directory_iterator(base / "a")) {
        if (!entry.is_regular_file())
            continue;
        auto rel = fs::relative(entry.path(), base / "a");
        if (slurp(base / "a" / rel) != slurp(base / "b" / rel)) {
            detail = rel.string() + " differs between identical invocations";
            return false;
        }
        ++compared;
    }
    if (compared < 8) {
        detail = "bundle unexpectedly small (" + std::to_string(compared) + " files)";
        return false;
    }
    fs::remove_all(base);
    detail = std::to_string(compared) + " bundle files byte-identical";
    return true;
}

struct Criterion {
    const char *label;
    bool (*run)(std::string &);
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {"relation stability bounded in [0,1], zero only for empty timelines", srs_bounds},
        {"stability strictly grows with encounter count", monotone_in_count},
        {"stability strictly grows with total contact duration", monotone_in_duration},
        {"evening out irregular durations never lowers stability", regularization_bonus},
        {"controlled patterns order by duration, then by frequency", pattern_discrimination},
        {"bridged relations equal exhaustive path enumeration", indirect_oracle},
        {"entropy and score closed forms hold to 1e-12", closed_forms},
        {"graph baselines match oracles on all small connected graphs", baseline_oracles},
        {"spreading simulation matches the exact outcome tree", sir_oracle},
        {"rank correlation endpoints and four-node cross check", correlation_endpoints},
        {"end-to-end planted-hub experiment within budget", end_to_end},
        {"identical evaluation invocations give identical bundles", deterministic_bundles},
    };

    int failures = 0;
    int index = 0;
    for (const auto &criterion : criteria) {
        ++index;
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception &e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("%s — criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", index,
                    criterion.label, detail.empty() ? "" : " — ", detail.c_str());
        if (!comparative_note.empty() && index == 11) {
            std::printf("       note: %s (reported, not asserted)\n", comparative_note.c_str());
            comparative_note.clear();
        }
        failures += ok ? 0 : 1;
        std::fflush(stdout);
    }

    std::printf("%d/12 criteria passed\n", 12 - failures);
    return failures == 0 ? 0 : 1;
}
