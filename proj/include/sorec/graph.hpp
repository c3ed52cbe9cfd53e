#ifndef SOREC_GRAPH_HPP
#define SOREC_GRAPH_HPP

#include <vector>

#include "sorec/trace.hpp"

namespace sorec {

// Unweighted undirected simple graph over a fixed node set, adjacency by
// dense index. Isolated nodes are kept.
class StaticGraph {
public:
    StaticGraph() = default;
    explicit StaticGraph(std::vector<NodeId> nodes);

    void add_edge(NodeId a, NodeId b); // idempotent; self-loops rejected

    std::size_t size() const { return nodes_.size(); }
    const std::vector<NodeId> &nodes() const { return nodes_; }
    std::size_t index_of(NodeId v) const;
    const std::vector<std::size_t> &neighbors(std::size_t index) const { return adj_[index]; }
    std::size_t degree(std::size_t index) const { return adj_[index].size(); }
    std::size_t edge_count() const;

private:
    std::vector<NodeId> nodes_; // sorted, unique
    std::vector<std::vector<std::size_t>> adj_; // each list sorted, unique
};

// Collapse a trace onto the static graph with an edge for every pair that
// had at least one contact.
StaticGraph aggregate_graph(const TemporalTrace &trace);

} // namespace sorec

#endif
