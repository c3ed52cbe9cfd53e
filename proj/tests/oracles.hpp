// Brute-force reference implementations used only by the tests. Each one
// computes the same quantity as the library through a deliberately
// different route (exhaustive enumeration, dense linear algebra, full
// outcome-tree expansion), so agreement is meaningful.
#ifndef SOREC_TEST_ORACLES_HPP
#define SOREC_TEST_ORACLES_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "sorec/relations.hpp"
#include "sorec/sir.hpp"
#include "sorec/trace.hpp"

namespace oracles {

// Noisy-or over every simple bridging path with 1..max_intermediates
// distinct intermediates, found by permuting subsets of candidate nodes.
double noisy_or_paths(const sorec::SRSMatrix &srs, sorec::NodeId i, sorec::NodeId j,
                      int max_intermediates, double epsilon);

// Shortest-path betweenness over unordered pairs, counted by enumerating
// every simple path with a DFS and keeping the minimum-length ones.
std::vector<double> betweenness(int n, const std::vector<std::pair<int, int>> &edges);

// Harmonic closeness from a Floyd-Warshall distance matrix.
std::vector<double> closeness(int n, const std::vector<std::pair<int, int>> &edges);

// Stationary PageRank from the exact linear system solved by Gaussian
// elimination; dangling columns spread their mass uniformly.
std::vector<double> pagerank(int n, const std::vector<std::pair<int, int>> &edges,
                             double damping);

// Expected ever-infected count and mean infection time for one seed: full
// expansion of the outcome tree of the slot-synchronous process
// (per-contact Bernoulli(lambda) infection; geometric or fixed recovery).
struct SirExpectation {
    double range = 0.0;
    double speed = 0.0;
};
SirExpectation sir_expectation(const sorec::TemporalTrace &trace, sorec::NodeId seed,
                               double lambda, const sorec::Recovery &recovery);

} // namespace oracles

#endif
