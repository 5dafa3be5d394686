#ifndef CARC_GRAPH_HPP
#define CARC_GRAPH_HPP

#include <vector>

#include "carc/bits.hpp"

namespace carc {

// Undirected simple graph on vertices 0..n-1, adjacency-matrix backed.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), rows_(n, Bits(n)) {}

    int vertex_count() const { return n_; }
    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    int degree(int v) const { return rows_[v].count(); }
    int edge_count() const;
    const Bits& row(int v) const { return rows_[v]; }

    std::vector<int> neighbors(int v) const;
    std::vector<int> closed_neighborhood(int v) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

private:
    int n_ = 0;
    std::vector<Bits> rows_;
};

Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
bool is_connected(const Graph& g);

// Partition of vertices into twin classes (N[v] == N[w]).
std::vector<std::vector<int>> twin_classes(const Graph& g);

} // namespace carc

#endif
