#include "carc/nhca.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "carc/cliques.hpp"
#include "carc/generators.hpp"
#include "carc/oracle.hpp"

namespace carc {

NextMap compute_next(const CircularArcModel& m) {
    NextMap nm;
    int n = m.arc_count();
    nm.next.assign(n, std::nullopt);
    if (n == 0) return nm;
    int sz = m.size();
    int start = m.begin_pos(0);
    // Two laps from s(A_1).  An arc's reach is the absolute coordinate of the
    // ending occurrence that follows its latest seen beginning; the running
    // maximum is exactly the farthest-reaching arc crossing the current point.
    long long best_tau = -1;
    int best_arc = -1;
    for (int lap = 0; lap < 2; lap++) {
        for (int i = 0; i < sz; i++) {
            long long coord = (long long)lap * sz + i;
            const Extreme& e = m.at((start + i) % sz);
            if (e.kind == ExtremeKind::Beginning) {
                long long tau = coord + m.span(e.arc);
                if (tau > best_tau) {
                    best_tau = tau;
                    best_arc = e.arc;
                }
            } else if (lap == 1) {
                nm.next[e.arc] = best_tau > coord ? std::optional<int>(best_arc) : std::nullopt;
            }
        }
    }
    return nm;
}

namespace {

// the stretch from `from` clockwise to t(reacher) strictly passes `target`
bool reaches_past(const CircularArcModel& m, int reacher, int from, int target) {
    int sz = m.size();
    auto fwd = [&](int p) { return ((p - from) % sz + sz) % sz; };
    return fwd(m.end_pos(reacher)) > fwd(target);
}

} // namespace

CoverCheck authenticate_nhca(const CircularArcModel& m) {
    CoverCheck res;
    int n = m.arc_count();
    if (n == 0) return res;
    NextMap nm = compute_next(m);
    // arcs in order of their beginnings from s(A_1)
    std::vector<int> by_begin;
    int sz = m.size(), start = m.begin_pos(0);
    for (int i = 0; i < sz; i++) {
        const Extreme& e = m.at((start + i) % sz);
        if (e.kind == ExtremeKind::Beginning) by_begin.push_back(e.arc);
    }
    // {A, NEXT(A)} covers the circle iff NEXT(A) reaches past s(A)
    for (int a : by_begin) {
        auto nx = nm.next[a];
        if (nx && reaches_past(m, *nx, m.end_pos(a), m.begin_pos(a)))
            return {CoverCheck::Kind::TwoCover, {a, *nx}};
    }
    for (int a : by_begin) {
        auto nx = nm.next[a];
        if (!nx) continue;
        auto nx2 = nm.next[*nx];
        if (nx2 && *nx2 != a && reaches_past(m, *nx2, m.end_pos(*nx), m.begin_pos(a)))
            return {CoverCheck::Kind::ThreeCover, {a, *nx, *nx2}};
    }
    return res;
}

namespace {

// Maximum-cardinality search + Tarjan-Yannakakis elimination check.
bool is_chordal(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> weight(n, 0), order;
    std::vector<bool> used(n, false);
    for (int it = 0; it < n; it++) {
        int best = -1;
        for (int v = 0; v < n; v++)
            if (!used[v] && (best == -1 || weight[v] > weight[best])) best = v;
        used[best] = true;
        order.push_back(best);
        for (int v = 0; v < n; v++)
            if (!used[v] && g.adjacent(best, v)) weight[v]++;
    }
    std::vector<int> pos(n);
    for (int i = 0; i < n; i++) pos[order[i]] = i;
    for (int i = n - 1; i >= 0; i--) {
        int v = order[i];
        int parent = -1;
        for (int u = 0; u < n; u++)
            if (g.adjacent(v, u) && pos[u] < i && (parent == -1 || pos[u] > pos[parent])) parent = u;
        if (parent == -1) continue;
        for (int u = 0; u < n; u++)
            if (u != parent && g.adjacent(v, u) && pos[u] < i && !g.adjacent(parent, u)) return false;
    }
    return true;
}

// Chordless cycle of length >= 4 in a non-chordal graph: for some vertex v
// with nonadjacent neighbors x, y, close a shortest x..y path that avoids the
// rest of N[v].
std::vector<int> find_hole(const Graph& g) {
    int n = g.vertex_count();
    for (int v = 0; v < n; v++)
        for (int x = 0; x < n; x++) {
            if (!g.adjacent(v, x)) continue;
            for (int y = x + 1; y < n; y++) {
                if (!g.adjacent(v, y) || g.adjacent(x, y)) continue;
                std::vector<int> prev(n, -2);
                for (int w = 0; w < n; w++)
                    if (w != x && w != y && (w == v || g.adjacent(v, w))) prev[w] = -3;
                std::vector<int> queue{x};
                prev[x] = -1;
                for (size_t qi = 0; qi < queue.size(); qi++)
                    for (int z = 0; z < n; z++)
                        if (g.adjacent(queue[qi], z) && prev[z] == -2) {
                            prev[z] = queue[qi];
                            queue.push_back(z);
                        }
                if (prev[y] < 0) continue;
                std::vector<int> path;
                for (int w = y; w != -1; w = prev[w]) path.push_back(w);
                // shorten to an induced path (skip to the farthest chord)
                for (size_t a = 0; a + 2 < path.size(); a++)
                    for (size_t b = path.size() - 1; b > a + 1; b--)
                        if (g.adjacent(path[a], path[b])) {
                            path.erase(path.begin() + a + 1, path.begin() + b);
                            break;
                        }
                std::vector<int> hole{v};
                hole.insert(hole.end(), path.begin(), path.end());
                return hole;
            }
        }
    throw std::logic_error("find_hole called on a chordal graph");
}

CircularArcModel interval_model_from_cliques(const std::vector<std::vector<int>>& cliques,
                                             const std::vector<int>& row_order, int n) {
    int k = (int)cliques.size();
    std::vector<int> first(n, -1), last(n, -1);
    for (int i = 0; i < k; i++)
        for (int v : cliques[row_order[i]]) {
            if (first[v] < 0) first[v] = i;
            last[v] = i;
        }
    std::vector<Extreme> ord;
    for (int i = 0; i < k; i++) {
        for (int v = 0; v < n; v++)
            if (first[v] == i) ord.push_back({v, ExtremeKind::Beginning});
        for (int v = 0; v < n; v++)
            if (last[v] == i) ord.push_back({v, ExtremeKind::Ending});
    }
    return CircularArcModel(std::move(ord));
}

std::optional<Obstruction> find_named_obstruction(const Graph& g) {
    int n = g.vertex_count();
    struct Try {
        ForbiddenKind kind;
        FamilySpec spec;
    };
    std::vector<Try> tries = {
        {ForbiddenKind::S3, {Family::Sun3}},
        {ForbiddenKind::Tent, {Family::Tent}},
        {ForbiddenKind::Umbrella, {Family::Umbrella}},
    };
    for (int r = 4; r + 3 <= n; r++) tries.push_back({ForbiddenKind::RisingSun, {Family::RisingSun, r}});
    for (const Try& t : tries) {
        auto map = find_induced(g, named_graph(t.spec));
        if (map) return Obstruction{t.kind, *map};
    }
    return std::nullopt;
}

std::optional<Obstruction> find_asteroidal_triple(const Graph& g) {
    int n = g.vertex_count();
    for (int x = 0; x < n; x++)
        for (int y = x + 1; y < n; y++) {
            if (g.adjacent(x, y)) continue;
            for (int z = y + 1; z < n; z++) {
                if (g.adjacent(x, z) || g.adjacent(y, z)) continue;
                Obstruction ob{ForbiddenKind::AsteroidalTriple, {x, y, z}};
                if (verify_obstruction(g, ob)) return ob;
            }
        }
    return std::nullopt;
}

} // namespace

IntervalResult recognize_interval(const Graph& g) {
    IntervalResult res;
    if (!is_chordal(g)) {
        res.witness = Obstruction{ForbiddenKind::Hole, find_hole(g)};
        return res;
    }
    auto cliques = maximal_cliques(g);
    CliqueMatrix q;
    q.cliques = cliques;
    q.cols = g.vertex_count();
    q.m.assign(cliques.size(), std::vector<uint8_t>(g.vertex_count(), 0));
    for (size_t i = 0; i < cliques.size(); i++)
        for (int v : cliques[i]) q.m[i][v] = 1;
    auto row_order = ones_property(q.m, OnesAxis::Columns, OnesMode::Consecutive);
    if (row_order) {
        res.model = interval_model_from_cliques(cliques, *row_order, g.vertex_count());
        return res;
    }
    res.witness = find_named_obstruction(g);
    if (!res.witness) res.witness = find_asteroidal_triple(g);
    if (!res.witness) throw std::logic_error("non-interval chordal graph without obstruction");
    return res;
}

Certificate recognize_nhca(const CircularArcModel& m) {
    Certificate cert;
    CoverCheck cover = authenticate_nhca(m);
    if (cover.kind == CoverCheck::Kind::Ok) {
        cert.kind = Certificate::Kind::Positive;
        cert.model = m;
        return cert;
    }
    IntervalResult ir = recognize_interval(intersection_graph(m));
    if (ir.positive()) {
        cert.kind = Certificate::Kind::Positive;
        cert.model = std::move(ir.model);
        return cert;
    }
    cert.kind = Certificate::Kind::Forbidden;
    cert.cover = cover.arcs;
    cert.obstruction = std::move(ir.witness);
    return cert;
}

bool check_local_interval(const CircularArcModel& m) {
    Graph g = intersection_graph(m);
    for (int a = 0; a < m.arc_count(); a++) {
        InducedSubmodel sub = induced_submodel(m, g.closed_neighborhood(a));
        int sz = sub.model.size();
        bool uncovered_segment = false;
        for (int seg = 0; seg < sz && !uncovered_segment; seg++) {
            bool covered = false;
            for (int b = 0; b < sub.model.arc_count() && !covered; b++)
                if (sub.model.covers_segment(b, seg)) covered = true;
            uncovered_segment = !covered;
        }
        if (!uncovered_segment) return false;
    }
    return true;
}

} // namespace carc
