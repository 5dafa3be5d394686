#include "carc/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace carc {

bool is_proper_model(const CircularArcModel& m) {
    int n = m.arc_count();
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
            if (a != b && m.arc_contains(a, b)) return false;
    return true;
}

bool is_normal_model(const CircularArcModel& m) {
    int n = m.arc_count();
    std::vector<Bits> seg;
    seg.reserve(n);
    for (int a = 0; a < n; a++) seg.push_back(m.segments(a));
    for (int a = 0; a < n; a++)
        for (int b = a + 1; b < n; b++)
            if (seg[a].union_full(seg[b])) return false;
    return true;
}

ClassReport classify(const CircularArcModel& m) {
    ClassReport r;
    int n = m.arc_count();
    std::vector<Bits> seg;
    seg.reserve(n);
    for (int a = 0; a < n; a++) seg.push_back(m.segments(a));

    r.proper = is_proper_model(m);

    for (int a = 0; a < n && !r.two_cover; a++)
        for (int b = a + 1; b < n && !r.two_cover; b++)
            if (seg[a].union_full(seg[b])) r.two_cover = {a, b};
    r.normal = !r.two_cover;

    for (int a = 0; a < n && !r.three_cover; a++)
        for (int b = a + 1; b < n && !r.three_cover; b++)
            for (int c = b + 1; c < n; c++)
                if (seg[a].union_full(seg[b], seg[c])) {
                    r.three_cover = {{a, b, c}};
                    break;
                }

    if (n == 0) {
        r.helly = true;
        r.normal = true;
        r.interval_point = true;
        return r;
    }

    Bits all(m.size());
    for (int a = 0; a < n; a++) all |= seg[a];
    r.interval_point = !all.full();

    // Helly: every maximal clique of the intersection graph shares a segment
    r.helly = true;
    Graph g = intersection_graph(m);
    for (const auto& q : maximal_cliques(g)) {
        Bits common = seg[q[0]];
        for (size_t i = 1; i < q.size(); i++) common &= seg[q[i]];
        if (common.none()) {
            r.helly = false;
            break;
        }
    }
    return r;
}

namespace {

void bron_kerbosch(const Graph& g, Bits R, Bits P, Bits X, std::vector<std::vector<int>>& out) {
    int n = g.vertex_count();
    if (P.none() && X.none()) {
        std::vector<int> q;
        for (int v = 0; v < n; v++)
            if (R.test(v)) q.push_back(v);
        out.push_back(std::move(q));
        return;
    }
    // pivot: vertex of P|X with most neighbors in P
    int pivot = -1, best = -1;
    for (int v = 0; v < n; v++)
        if (P.test(v) || X.test(v)) {
            Bits t = P;
            t &= g.row(v);
            int c = t.count();
            if (c > best) {
                best = c;
                pivot = v;
            }
        }
    for (int v = 0; v < n; v++) {
        if (!P.test(v) || (pivot >= 0 && g.adjacent(pivot, v))) continue;
        Bits R2 = R;
        R2.set(v);
        Bits P2 = P, X2 = X;
        P2 &= g.row(v);
        X2 &= g.row(v);
        bron_kerbosch(g, R2, P2, X2, out);
        P.reset(v);
        X.set(v);
    }
}

} // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> out;
    if (n == 0) return out;
    Bits P(n);
    for (int v = 0; v < n; v++) P.set(v);
    bron_kerbosch(g, Bits(n), P, Bits(n), out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool extend_embedding(const Graph& host, const Graph& pattern, const std::vector<int>& order,
                      size_t depth, std::vector<int>& img, std::vector<bool>& used) {
    if (depth == order.size()) return true;
    int pv = order[depth];
    for (int hv = 0; hv < host.vertex_count(); hv++) {
        if (used[hv]) continue;
        bool ok = true;
        for (size_t i = 0; i < depth && ok; i++) {
            int pu = order[i];
            if (pattern.adjacent(pv, pu) != host.adjacent(hv, img[pu])) ok = false;
        }
        if (!ok) continue;
        img[pv] = hv;
        used[hv] = true;
        if (extend_embedding(host, pattern, order, depth + 1, img, used)) return true;
        used[hv] = false;
        img[pv] = -1;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_induced(const Graph& host, const Graph& pattern) {
    int np = pattern.vertex_count();
    if (np > host.vertex_count()) return std::nullopt;
    if (np == 0) return std::vector<int>{};
    // place high-degree pattern vertices first
    std::vector<int> order(np);
    for (int i = 0; i < np; i++) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    std::vector<int> img(np, -1);
    std::vector<bool> used(host.vertex_count(), false);
    if (extend_embedding(host, pattern, order, 0, img, used)) return img;
    return std::nullopt;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    return find_induced(a, b).has_value();
}

std::vector<CircularArcModel> enumerate_models(const Graph& graph,
                                               const std::function<bool(const CircularArcModel&)>& filter) {
    int n = graph.vertex_count();
    if (n > 5) throw std::invalid_argument("enumerate_models is capped at n <= 5");
    std::vector<CircularArcModel> out;
    if (n == 0) return out;

    // all circular orders with s0 fixed first = all orders up to rotation
    std::vector<Extreme> rest;
    for (int a = 0; a < n; a++) {
        if (a > 0) rest.push_back({a, ExtremeKind::Beginning});
        rest.push_back({a, ExtremeKind::Ending});
    }
    std::sort(rest.begin(), rest.end(), [](const Extreme& x, const Extreme& y) {
        return std::pair(x.arc, (int)x.kind) < std::pair(y.arc, (int)y.kind);
    });
    std::vector<std::string> seen;
    do {
        std::vector<Extreme> ord;
        ord.reserve(2 * n);
        ord.push_back({0, ExtremeKind::Beginning});
        ord.insert(ord.end(), rest.begin(), rest.end());
        CircularArcModel m(std::move(ord));
        if (!(intersection_graph(m) == graph)) continue;
        if (filter && !filter(m)) continue;
        std::string canon = canonical_form(m);
        if (std::find(seen.begin(), seen.end(), canon) != seen.end()) continue;
        seen.push_back(canon);
        out.push_back(std::move(m));
    } while (std::next_permutation(rest.begin(), rest.end(), [](const Extreme& x, const Extreme& y) {
        return std::pair(x.arc, (int)x.kind) < std::pair(y.arc, (int)y.kind);
    }));

    // deterministic order
    std::vector<int> idx(out.size());
    for (size_t i = 0; i < idx.size(); i++) idx[i] = (int)i;
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return canonical_form(out[a]) < canonical_form(out[b]); });
    std::vector<CircularArcModel> sorted;
    sorted.reserve(out.size());
    for (int i : idx) sorted.push_back(std::move(out[i]));
    return sorted;
}

bool verify_unit_witness(const CircularArcModel& m, const UnitWitness& w) {
    int sz = m.size();
    if ((int)w.positions.size() != sz) return false;
    if (sz == 0) return w.circumference > 0 && w.arc_length > 0 && w.arc_length < w.circumference;
    for (int i = 0; i + 1 < sz; i++)
        if (!(w.positions[i] < w.positions[i + 1])) return false;
    if (!(w.positions[0] >= 0 && w.positions[sz - 1] < w.circumference)) return false;
    if (!(w.arc_length > 0 && w.arc_length < w.circumference)) return false;
    for (int a = 0; a < m.arc_count(); a++) {
        Rational d = w.positions[m.end_pos(a)] - w.positions[m.begin_pos(a)];
        if (m.end_pos(a) < m.begin_pos(a)) d += w.circumference;
        if (d != w.arc_length) return false;
    }
    return true;
}

} // namespace carc
