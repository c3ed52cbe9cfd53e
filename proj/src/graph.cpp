#include "sorec/graph.hpp"

#include <algorithm>

#include "sorec/errors.hpp"

namespace sorec {

StaticGraph::StaticGraph(std::vector<NodeId> nodes) : nodes_(std::move(nodes)) {
    std::sort(nodes_.begin(), nodes_.end());
    nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
    adj_.resize(nodes_.size());
}

std::size_t StaticGraph::index_of(NodeId v) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), v);
    if (it == nodes_.end() || *it != v)
        throw ValidationError("node " + std::to_string(v) + " not in graph");
    return static_cast<std::size_t>(it - nodes_.begin());
}

void StaticGraph::add_edge(NodeId a, NodeId b) {
    if (a == b)
        throw ValidationError("self-loop rejected");
    std::size_t i = index_of(a), j = index_of(b);
    auto insert_sorted = [](std::vector<std::size_t> &list, std::size_t v) {
        auto it = std::lower_bound(list.begin(), list.end(), v);
        if (it == list.end() || *it != v)
            list.insert(it, v);
    };
    insert_sorted(adj_[i], j);
    insert_sorted(adj_[j], i);
}

std::size_t StaticGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto &list : adj_)
        twice += list.size();
    return twice / 2;
}

StaticGraph aggregate_graph(const TemporalTrace &trace) {
    StaticGraph g(trace.nodes);
    for (const auto &r : trace.records)
        g.add_edge(r.a, r.b);
    return g;
}

} // namespace sorec
