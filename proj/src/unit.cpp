#include "carc/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace carc {

namespace {

using boost::multiprecision::cpp_int;

// Constraint y_to - y_from <= c + ucoef*u + eps*epsilon, with epsilon an
// infinitesimal carrying strictness.
struct Edge {
    int from, to;
    int c;
    int ucoef;
    int eps;
};

struct Dist {
    Rational r;
    long long e;
    bool operator<(const Dist& o) const { return r != o.r ? r < o.r : e < o.e; }
};

struct CycleInfo {
    long long A; // sum of u coefficients
    long long C; // sum of constants
    long long E; // sum of eps terms
};

// Bellman-Ford from a virtual source (all distances 0); returns a violated
// cycle at the probe value, or nothing if feasible (distances filled).
std::optional<CycleInfo> feasible_at(const std::vector<Edge>& edges, int nodes, const Rational& u,
                                     std::vector<Dist>* dist_out) {
    std::vector<Dist> dist(nodes, Dist{0, 0});
    std::vector<int> pred(nodes, -1);
    auto weight = [&](const Edge& e) { return Dist{Rational(e.c) + Rational(e.ucoef) * u, e.eps}; };

    int relaxed_node = -1;
    for (int round = 0; round <= nodes; round++) {
        relaxed_node = -1;
        for (size_t ei = 0; ei < edges.size(); ei++) {
            const Edge& e = edges[ei];
            Dist w = weight(e);
            Dist cand{dist[e.from].r + w.r, dist[e.from].e + w.e};
            if (cand < dist[e.to]) {
                dist[e.to] = cand;
                pred[e.to] = (int)ei;
                relaxed_node = e.to;
            }
        }
        if (relaxed_node == -1) break;
    }
    if (relaxed_node == -1) {
        if (dist_out) *dist_out = dist;
        return std::nullopt;
    }
    // walk predecessors to land on the cycle
    int v = relaxed_node;
    for (int i = 0; i < nodes; i++) v = edges[pred[v]].from;
    CycleInfo ci{0, 0, 0};
    int w = v;
    do {
        const Edge& e = edges[pred[w]];
        ci.A += e.ucoef;
        ci.C += e.c;
        ci.E += e.eps;
        w = e.from;
    } while (w != v);
    return ci;
}

// Simplest rational in [lo, hi] (Stern-Brocot / continued fractions).
Rational simplest_in(const Rational& lo, const Rational& hi) {
    using boost::multiprecision::numerator;
    using boost::multiprecision::denominator;
    cpp_int fl = numerator(lo) / denominator(lo);
    if (lo <= 0 && numerator(lo) % denominator(lo) != 0) fl -= 1; // floor for negatives
    Rational ceil_lo = (numerator(lo) % denominator(lo) == 0) ? lo : Rational(fl + 1);
    if (ceil_lo <= hi) return ceil_lo;
    Rational a = lo - Rational(fl), b = hi - Rational(fl); // both in (0,1]
    return Rational(fl) + Rational(1) / simplest_in(Rational(1) / b, Rational(1) / a);
}

} // namespace

std::optional<UnitWitness> unit_realizable(const CircularArcModel& m) {
    int n = m.arc_count();
    if (n == 0) return UnitWitness{1, Rational(1, 2), {}};
    int sz = m.size();

    std::vector<Edge> edges;
    for (int j = 0; j + 1 < sz; j++) edges.push_back({j + 1, j, 0, 0, -1}); // y_j - y_{j+1} <= -eps
    edges.push_back({0, sz - 1, 1, 0, -1});                                // y_{sz-1} - y_0 <= 1 - eps
    for (int a = 0; a < n; a++) {
        int i = m.begin_pos(a), j = m.end_pos(a);
        int wrap = j < i ? 1 : 0;
        edges.push_back({i, j, -wrap, 1, 0}); // y_j - y_i <= u - wrap
        edges.push_back({j, i, wrap, -1, 0}); // y_i - y_j <= wrap - u
    }

    Rational lo = 0, hi = 1;
    bool lo_strict = true, hi_strict = true;
    Rational threshold = Rational(1, 4 * (long long)sz * sz + 1);
    std::vector<Dist> dist;
    Rational good_u;
    bool found = false;

    for (int iter = 0; iter < 300; iter++) {
        if (lo > hi || (lo == hi && (lo_strict || hi_strict))) return std::nullopt;
        Rational probe;
        if (hi - lo < threshold) {
            // at most one candidate boundary value remains
            probe = lo == hi ? lo : simplest_in(lo, hi);
            if (probe <= 0 || probe >= 1) return std::nullopt;
            auto cyc = feasible_at(edges, sz, probe, &dist);
            if (!cyc) {
                good_u = probe;
                found = true;
            }
            break;
        }
        probe = (lo + hi) / 2;
        auto cyc = feasible_at(edges, sz, probe, &dist);
        if (!cyc) {
            good_u = probe;
            found = true;
            break;
        }
        if (cyc->A == 0) return std::nullopt; // violated independently of u
        Rational beta = Rational(-cyc->C) / Rational(cyc->A);
        bool strict = cyc->E < 0;
        // the violated cycle always cuts past the probe point
        if (cyc->A > 0) { // need u >= beta (or > if strict), beta >= probe > lo
            assert(beta >= probe);
            lo = beta;
            lo_strict = strict;
        } else { // need u <= beta (or <), beta <= probe < hi
            assert(beta <= probe);
            hi = beta;
            hi_strict = strict;
        }
    }
    if (!found) return std::nullopt;

    // substitute a concrete epsilon small enough for every slack constraint
    Rational eps = Rational(1, 2);
    for (const Edge& e : edges) {
        Rational cval = Rational(e.c) + Rational(e.ucoef) * good_u;
        Rational slack = cval - (dist[e.to].r - dist[e.from].r);
        long long k = e.eps - (dist[e.to].e - dist[e.from].e);
        if (slack > 0 && k < 0) eps = std::min(eps, slack / Rational(-2 * k));
    }
    std::vector<Rational> pos(sz);
    for (int v = 0; v < sz; v++) pos[v] = dist[v].r + Rational(dist[v].e) * eps;
    Rational shift = pos[0];
    for (auto& p : pos) p -= shift;

    // rescale to a common denominator for readable output
    cpp_int lcm = 1;
    auto fold = [&](const Rational& q) {
        cpp_int d = boost::multiprecision::denominator(q);
        lcm = boost::multiprecision::lcm(lcm, d);
    };
    for (const auto& p : pos) fold(p);
    fold(good_u);
    UnitWitness w;
    w.circumference = Rational(lcm);
    w.arc_length = good_u * Rational(lcm);
    w.positions.reserve(sz);
    for (const auto& p : pos) w.positions.push_back(p * Rational(lcm));

    if (!verify_unit_witness(m, w)) throw std::logic_error("unit solver produced an invalid witness");
    return w;
}

} // namespace carc
