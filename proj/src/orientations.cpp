#include "carc/orientations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "carc/oracle.hpp"

namespace carc {

void OrientedGraph::add_arc(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop");
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("vertex out of range");
    if (out_[v].test(u)) throw std::invalid_argument("both directions on one edge");
    out_[u].set(v);
}

int OrientedGraph::in_degree(int v) const {
    int c = 0;
    for (int u = 0; u < n_; u++)
        if (arc(u, v)) c++;
    return c;
}

Graph OrientedGraph::underlying() const {
    Graph g(n_);
    for (int u = 0; u < n_; u++)
        for (int v = u + 1; v < n_; v++)
            if (adjacent(u, v)) g.add_edge(u, v);
    return g;
}

namespace {

bool is_permutation(const Enumeration& e, int n) {
    if ((int)e.order.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (int v : e.order) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

// out-set of the vertex at position i equals the cyclic (or linear) range of
// positions i+1 .. i+outdeg
bool range_ok(const OrientedGraph& d, const std::vector<int>& order, int i, bool outward,
              bool cyclic) {
    int n = (int)order.size();
    int v = order[i];
    int deg = outward ? d.out_degree(v) : d.in_degree(v);
    for (int s = 1; s <= deg; s++) {
        int p = outward ? i + s : i - s;
        if (cyclic) p = (p % n + n) % n;
        else if (p < 0 || p >= n) return false;
        int w = order[p];
        if (!(outward ? d.arc(v, w) : d.arc(w, v))) return false;
    }
    return true;
}

bool base_kind_ok(const OrientedGraph& d, const std::vector<int>& order, EnumKind kind) {
    int n = (int)order.size();
    bool cyclic = kind != EnumKind::OutStraight && kind != EnumKind::Straight;
    bool both = kind == EnumKind::Straight || kind == EnumKind::Round ||
                kind == EnumKind::LocallyStraight;
    for (int i = 0; i < n; i++) {
        if (!range_ok(d, order, i, true, cyclic)) return false;
        if (both && !range_ok(d, order, i, false, cyclic)) return false;
    }
    return true;
}

std::optional<std::pair<int, int>> scope_positions(const OrientedGraph& d, const std::vector<int>& order,
                                                   int i) {
    int n = (int)order.size();
    int v = order[i];
    int l = i, r = i;
    for (int s = 1; s < n; s++) {
        int p = ((i - s) % n + n) % n;
        if (d.arc(order[p], v)) l = p;
    }
    for (int s = 1; s < n; s++) {
        int p = (i + s) % n;
        if (d.arc(v, order[p])) r = p;
    }
    int len = ((r - l) % n + n) % n;
    if (((i - l) % n + n) % n > len) return std::nullopt; // v outside its own scope
    return std::pair<int, int>{l, r};
}

bool scopes_ok(const OrientedGraph& d, const std::vector<int>& order, EnumKind inner) {
    int n = (int)order.size();
    for (int i = 0; i < n; i++) {
        auto sc = scope_positions(d, order, i);
        if (!sc) return false;
        int len = (((sc->second - sc->first) % n + n) % n) + 1;
        std::vector<int> verts(len);
        for (int s = 0; s < len; s++) verts[s] = order[(sc->first + s) % n];
        // induced subdigraph in scope order
        OrientedGraph sub(len);
        for (int a = 0; a < len; a++)
            for (int b = 0; b < len; b++)
                if (a != b && d.arc(verts[a], verts[b])) sub.add_arc(a, b);
        Enumeration se;
        se.order.resize(len);
        std::iota(se.order.begin(), se.order.end(), 0);
        if (!verify_enumeration(sub, se, inner)) return false;
    }
    return true;
}

} // namespace

bool verify_enumeration(const OrientedGraph& d, const Enumeration& e, EnumKind kind) {
    int n = d.vertex_count();
    if (!is_permutation(e, n)) return false;
    if (n == 0) return true;
    switch (kind) {
    case EnumKind::OutStraight:
    case EnumKind::OutRound:
    case EnumKind::Straight:
    case EnumKind::Round:
        return base_kind_ok(d, e.order, kind);
    case EnumKind::LocallyOutStraight:
        return base_kind_ok(d, e.order, EnumKind::OutRound) &&
               scopes_ok(d, e.order, EnumKind::OutStraight);
    case EnumKind::LocallyStraight:
        return base_kind_ok(d, e.order, EnumKind::Round) &&
               scopes_ok(d, e.order, EnumKind::Straight);
    }
    return false;
}

std::optional<std::pair<int, int>> scope(const OrientedGraph& d, const Enumeration& e, int v) {
    if (!is_permutation(e, d.vertex_count())) throw std::invalid_argument("not a permutation");
    for (int i = 0; i < (int)e.order.size(); i++)
        if (e.order[i] == v) return scope_positions(d, e.order, i);
    throw std::invalid_argument("vertex not in enumeration");
}

std::pair<OrientedGraph, Enumeration> orient_from_model(const CircularArcModel& m, OrientFlavor flavor) {
    if (!is_normal_model(m))
        throw std::invalid_argument("orient_from_model: two arcs cover the circle");
    if (flavor == OrientFlavor::Round && !is_proper_model(m))
        throw std::invalid_argument("orient_from_model: round flavor needs a proper model");
    int n = m.arc_count();
    Enumeration e;
    for (int p = 0; p < m.size(); p++)
        if (m.at(p).kind == ExtremeKind::Beginning) e.order.push_back(m.at(p).arc);
    OrientedGraph d(n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            if (i != j && m.pos_inside(i, m.begin_pos(j))) d.add_arc(i, j);
    return {std::move(d), std::move(e)};
}

CircularArcModel model_from_enumeration(const OrientedGraph& d, const Enumeration& e) {
    if (!verify_enumeration(d, e, EnumKind::OutRound))
        throw std::invalid_argument("model_from_enumeration needs an out-round enumeration");
    int n = d.vertex_count();
    std::vector<std::vector<int>> gap(n); // endings placed after the gap's beginning
    std::vector<int> pos(n);
    for (int i = 0; i < n; i++) pos[e.order[i]] = i;
    for (int v = 0; v < n; v++) gap[(pos[v] + d.out_degree(v)) % n].push_back(v);
    std::vector<Extreme> ord;
    for (int i = 0; i < n; i++) {
        ord.push_back({e.order[i], ExtremeKind::Beginning});
        std::sort(gap[i].begin(), gap[i].end());
        for (int v : gap[i]) ord.push_back({v, ExtremeKind::Ending});
    }
    return CircularArcModel(std::move(ord));
}

namespace {

struct EnumSearch {
    const Graph& g;
    EnumKind kind;
    bool cyclic;
    int n;
    std::vector<int> order, pos, reach;

    explicit EnumSearch(const Graph& graph, EnumKind k)
        : g(graph), kind(k),
          cyclic(k != EnumKind::OutStraight && k != EnumKind::Straight), n(graph.vertex_count()) {}

    // longest run of consecutive neighbors after position i
    int max_run(int i) {
        int run = 0;
        int cap = cyclic ? n - 1 : n - 1 - i;
        for (int s = 1; s <= cap; s++) {
            int p = cyclic ? (i + s) % n : i + s;
            if (!g.adjacent(order[i], order[p])) break;
            run++;
        }
        return run;
    }

    bool consistent(int i) {
        // every edge between order[i] and an earlier position must be covered
        // by exactly one of the two prefixes
        for (int j = 0; j < i; j++) {
            if (!g.adjacent(order[i], order[j])) continue;
            int dj = cyclic ? (i - j) : i - j;
            bool j_covers = dj <= reach[j];
            int di = cyclic ? (n - dj) % n : -1;
            bool i_covers = cyclic ? (di > 0 && di <= reach[i]) : false;
            if (!cyclic) {
                // linear: only the earlier endpoint can cover
                if (!j_covers) return false;
            } else if (j_covers == i_covers) {
                return false;
            }
        }
        return true;
    }

    std::optional<OrientedGraph> assign(int i) {
        if (i == n) {
            OrientedGraph d(n);
            for (int a = 0; a < n; a++)
                for (int s = 1; s <= reach[a]; s++) {
                    int p = cyclic ? (a + s) % n : a + s;
                    d.add_arc(order[a], order[p]);
                }
            Enumeration e{order};
            if (verify_enumeration(d, e, kind)) return d;
            return std::nullopt;
        }
        int cap = max_run(i);
        for (int r = 0; r <= cap; r++) {
            reach[i] = r;
            if (!consistent(i)) continue;
            auto res = assign(i + 1);
            if (res) return res;
        }
        reach[i] = 0;
        return std::nullopt;
    }
};

} // namespace

std::optional<std::pair<OrientedGraph, Enumeration>> search_enumeration(const Graph& g, EnumKind kind) {
    int n = g.vertex_count();
    if (n > 7) throw std::invalid_argument("search_enumeration is capped at n <= 7");
    if (n == 0) return std::pair<OrientedGraph, Enumeration>{OrientedGraph(0), Enumeration{}};
    bool cyclic = kind != EnumKind::OutStraight && kind != EnumKind::Straight;
    std::vector<int> rest(n - (cyclic ? 1 : 0));
    std::iota(rest.begin(), rest.end(), cyclic ? 1 : 0);
    do {
        EnumSearch search(g, kind);
        search.order.clear();
        if (cyclic) search.order.push_back(0);
        search.order.insert(search.order.end(), rest.begin(), rest.end());
        search.reach.assign(n, 0);
        auto d = search.assign(0);
        if (d) return std::pair<OrientedGraph, Enumeration>{std::move(*d), Enumeration{search.order}};
    } while (std::next_permutation(rest.begin(), rest.end()));
    return std::nullopt;
}

} // namespace carc
