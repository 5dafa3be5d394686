#include "carc/graph.hpp"

#include <stdexcept>

namespace carc {

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop");
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("vertex out of range");
    rows_[u].set(v);
    rows_[v].set(u);
}

int Graph::edge_count() const {
    int d = 0;
    for (int v = 0; v < n_; v++) d += degree(v);
    return d / 2;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; u++)
        if (rows_[v].test(u)) out.push_back(u);
    return out;
}

std::vector<int> Graph::closed_neighborhood(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; u++)
        if (u == v || rows_[v].test(u)) out.push_back(u);
    return out;
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    Graph c(n);
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    Graph h((int)vertices.size());
    for (size_t i = 0; i < vertices.size(); i++)
        for (size_t j = i + 1; j < vertices.size(); j++)
            if (g.adjacent(vertices[i], vertices[j])) h.add_edge((int)i, (int)j);
    return h;
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; u++)
            if (g.adjacent(v, u) && !seen[u]) {
                seen[u] = true;
                reached++;
                stack.push_back(u);
            }
    }
    return reached == n;
}

std::vector<std::vector<int>> twin_classes(const Graph& g) {
    int n = g.vertex_count();
    std::vector<Bits> closed;
    closed.reserve(n);
    for (int v = 0; v < n; v++) {
        Bits b = g.row(v);
        b.set(v);
        closed.push_back(b);
    }
    std::vector<std::vector<int>> classes;
    std::vector<bool> used(n, false);
    for (int v = 0; v < n; v++) {
        if (used[v]) continue;
        std::vector<int> cls{v};
        used[v] = true;
        for (int w = v + 1; w < n; w++)
            if (!used[w] && closed[w] == closed[v]) {
                cls.push_back(w);
                used[w] = true;
            }
        classes.push_back(std::move(cls));
    }
    return classes;
}

} // namespace carc
