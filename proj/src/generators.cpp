#include "carc/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "carc/bits.hpp"
#include "carc/oracle.hpp"

namespace carc {

namespace {

long long mod4n(long long x, long long m) { return ((x % m) + m) % m; }

struct Keyed {
    long long key; // 2*position + sub-slot, so half-steps stay exact
    Extreme e;
};

CircularArcModel from_keyed(std::vector<Keyed> ks) {
    std::sort(ks.begin(), ks.end(), [](const Keyed& a, const Keyed& b) { return a.key < b.key; });
    for (size_t i = 0; i + 1 < ks.size(); i++)
        if (ks[i].key == ks[i + 1].key) throw std::logic_error("coinciding extremes in construction");
    std::vector<Extreme> ord;
    ord.reserve(ks.size());
    for (const Keyed& k : ks) ord.push_back(k.e);
    return CircularArcModel(std::move(ord));
}

// Zone construction: k clique points in circular order; vertex v occupies the
// circular range of points [a_v, b_v].  Between consecutive points, endings
// come before beginnings, so arcs meet exactly when their ranges share a point.
CircularArcModel model_from_clique_ranges(int k, const std::vector<std::pair<int, int>>& range) {
    std::vector<Extreme> ord;
    int n = (int)range.size();
    for (int i = 0; i < k; i++) {
        for (int v = 0; v < n; v++)
            if (range[v].second == i) ord.push_back({v, ExtremeKind::Ending});
        for (int v = 0; v < n; v++)
            if (range[v].first == (i + 1) % k) ord.push_back({v, ExtremeKind::Beginning});
    }
    return CircularArcModel(std::move(ord));
}

CircularArcModel parse_fixture(int n, const char* tokens) {
    std::vector<Extreme> ord;
    const char* p = tokens;
    while (*p) {
        while (*p == ' ') p++;
        if (!*p) break;
        ExtremeKind kind = *p == 's' ? ExtremeKind::Beginning : ExtremeKind::Ending;
        p++;
        int id = 0;
        while (*p >= '0' && *p <= '9') id = id * 10 + (*p++ - '0');
        ord.push_back({id, kind});
    }
    if ((int)ord.size() != 2 * n) throw std::logic_error("bad fixture");
    return CircularArcModel(std::move(ord));
}

} // namespace

CircularArcModel ci_model(int n, int k) {
    if (n <= 0 || k <= 0 || std::gcd(n, k) != 1 || n <= 2 * k)
        throw std::invalid_argument("ci_model needs gcd(n,k)=1 and n>2k");
    long long m = 4LL * n;
    std::vector<Keyed> ks;
    ks.reserve(4 * n);
    for (int i = 0; i < n; i++) {
        ks.push_back({2 * mod4n(4LL * k * i, m) + 1, {i, ExtremeKind::Beginning}});
        ks.push_back({2 * mod4n(4LL * k * (i + 1) + 1, m), {i, ExtremeKind::Ending}});
    }
    if (k % 2 == 1) {
        // Tucker's layout verbatim; at shared positions endings precede
        // beginnings (key parity does it: endings at even keys).
        for (int i = 0; i < n; i++) {
            ks.push_back({2 * mod4n(4LL * k * i + 2 * k + 1, m) + 1, {n + i, ExtremeKind::Beginning}});
            ks.push_back({2 * mod4n(4LL * k * (i + 1) + 2 * k, m), {n + i, ExtremeKind::Ending}});
        }
    } else {
        // For even k the verbatim short arcs fall strictly inside long arcs;
        // slide each one half a unit counterclockwise to restore properness
        // without disturbing any intersection.
        for (int i = 0; i < n; i++) {
            ks.push_back({2 * mod4n(4LL * k * i + 2 * k - 1, m) + 1, {n + i, ExtremeKind::Beginning}});
            ks.push_back({2 * mod4n(4LL * k * (i + 1) + 2 * k - 1, m), {n + i, ExtremeKind::Ending}});
        }
    }
    CircularArcModel model = from_keyed(std::move(ks));
    if (!is_proper_model(model)) throw std::logic_error("ci_model produced a non-proper model");
    return model;
}

Graph named_graph(const FamilySpec& spec) {
    switch (spec.family) {
    case Family::CI:
        return intersection_graph(ci_model(spec.n, spec.k));
    case Family::Wheel: {
        if (spec.n < 4) throw std::invalid_argument("wheel needs n >= 4");
        Graph g(spec.n + 1);
        for (int i = 0; i < spec.n; i++) {
            g.add_edge(i, (i + 1) % spec.n);
            g.add_edge(i, spec.n);
        }
        return g;
    }
    case Family::RisingSun: {
        // v_1..v_n = 0..n-1 (v_1, v_n adjacent to every v), w_1 = n, w_{n-1} = n+1, w_n = n+2
        if (spec.n < 4) throw std::invalid_argument("rising sun needs n >= 4");
        int n = spec.n;
        Graph g(n + 3);
        for (int i = 1; i + 2 < n; i++) g.add_edge(i, i + 1); // path v_2..v_{n-1}
        for (int i = 1; i < n - 1; i++) {
            g.add_edge(0, i);
            g.add_edge(n - 1, i);
        }
        g.add_edge(0, n - 1);
        g.add_edge(n, 0), g.add_edge(n, 1);
        g.add_edge(n + 1, n - 2), g.add_edge(n + 1, n - 1);
        g.add_edge(n + 2, n - 1), g.add_edge(n + 2, 0);
        return g;
    }
    case Family::Sun3: {
        Graph g(6);
        g.add_edge(0, 1), g.add_edge(1, 2), g.add_edge(0, 2);
        g.add_edge(3, 0), g.add_edge(3, 1);
        g.add_edge(4, 1), g.add_edge(4, 2);
        g.add_edge(5, 2), g.add_edge(5, 0);
        return g;
    }
    case Family::Umbrella: {
        // fan over the path 4-3-0-2-5 with apex 1, handle 6 on the path's middle
        Graph g(7);
        g.add_edge(4, 3), g.add_edge(3, 0), g.add_edge(0, 2), g.add_edge(2, 5);
        for (int v : {0, 2, 3, 4, 5}) g.add_edge(1, v);
        g.add_edge(0, 6);
        return g;
    }
    case Family::Tent: {
        // complement of the 3-sun: triangle with a pendant at each corner
        Graph g(6);
        g.add_edge(0, 1), g.add_edge(1, 2), g.add_edge(0, 2);
        g.add_edge(3, 0), g.add_edge(4, 1), g.add_edge(5, 2);
        return g;
    }
    case Family::K13: {
        Graph g(4);
        g.add_edge(0, 1), g.add_edge(0, 2), g.add_edge(0, 3);
        return g;
    }
    case Family::Hole: {
        if (spec.n < 4) throw std::invalid_argument("hole needs n >= 4");
        Graph g(spec.n);
        for (int i = 0; i < spec.n; i++) g.add_edge(i, (i + 1) % spec.n);
        return g;
    }
    case Family::Path: {
        if (spec.n < 1) throw std::invalid_argument("path needs n >= 1");
        Graph g(spec.n);
        for (int i = 0; i + 1 < spec.n; i++) g.add_edge(i, i + 1);
        return g;
    }
    case Family::CompleteGraph: {
        if (spec.n < 1) throw std::invalid_argument("complete graph needs n >= 1");
        Graph g(spec.n);
        for (int i = 0; i < spec.n; i++)
            for (int j = i + 1; j < spec.n; j++) g.add_edge(i, j);
        return g;
    }
    }
    throw std::invalid_argument("unknown family");
}

CircularArcModel named_model(const FamilySpec& spec) {
    switch (spec.family) {
    case Family::CI:
        return ci_model(spec.n, spec.k);
    case Family::Hole: {
        if (spec.n < 4) throw std::invalid_argument("hole needs n >= 4");
        std::vector<Extreme> ord;
        for (int i = 0; i < spec.n; i++) {
            ord.push_back({i, ExtremeKind::Beginning});
            ord.push_back({(i + spec.n - 1) % spec.n, ExtremeKind::Ending});
        }
        return CircularArcModel(std::move(ord));
    }
    case Family::Wheel: {
        // hole model wrapped by a near-full hub arc covering every clique point
        if (spec.n < 4) throw std::invalid_argument("wheel needs n >= 4");
        std::vector<Extreme> ord;
        ord.push_back({spec.n, ExtremeKind::Beginning});
        for (int i = 0; i < spec.n; i++) {
            ord.push_back({i, ExtremeKind::Beginning});
            ord.push_back({(i + spec.n - 1) % spec.n, ExtremeKind::Ending});
        }
        ord.push_back({spec.n, ExtremeKind::Ending});
        return CircularArcModel(std::move(ord));
    }
    case Family::RisingSun: {
        if (spec.n < 4) throw std::invalid_argument("rising sun needs n >= 4");
        int n = spec.n, k = n;
        // clique order: {w_1,v_1,v_2}, {v_1,v_n,v_j,v_{j+1}} for j=2..n-2,
        // {w_{n-1},v_{n-1},v_n}, {w_n,v_n,v_1}
        std::vector<std::pair<int, int>> range(n + 3);
        range[0] = {n - 1, n - 3};     // v_1 wraps
        range[n - 1] = {1, n - 1};     // v_n
        range[1] = {0, 1};             // v_2
        for (int id = 2; id <= n - 3; id++) range[id] = {id - 1, id};
        range[n - 2] = {n - 3, n - 2}; // v_{n-1}
        range[n] = {0, 0};
        range[n + 1] = {n - 2, n - 2};
        range[n + 2] = {n - 1, n - 1};
        return model_from_clique_ranges(k, range);
    }
    case Family::Sun3:
        return parse_fixture(6, "t3 s2 t0 s4 t1 t4 s0 s5 t2 t5 s1 s3");
    case Family::Umbrella:
        return parse_fixture(7, "t0 s5 t2 t5 s3 s4 t4 s0 t1 t3 s6 t6 s1 s2");
    case Family::Tent:
        return parse_fixture(6, "s3 t3 s1 t0 s4 t4 s2 t1 s5 t5 s0 t2");
    case Family::K13:
        return parse_fixture(4, "s0 s1 t1 s2 t2 s3 t3 t0");
    case Family::Path: {
        if (spec.n < 1) throw std::invalid_argument("path needs n >= 1");
        std::vector<Extreme> ord;
        ord.push_back({0, ExtremeKind::Beginning});
        for (int i = 1; i < spec.n; i++) {
            ord.push_back({i, ExtremeKind::Beginning});
            ord.push_back({i - 1, ExtremeKind::Ending});
        }
        ord.push_back({spec.n - 1, ExtremeKind::Ending});
        return CircularArcModel(std::move(ord));
    }
    case Family::CompleteGraph: {
        if (spec.n < 1) throw std::invalid_argument("complete graph needs n >= 1");
        std::vector<Extreme> ord;
        for (int i = 0; i < spec.n; i++) ord.push_back({i, ExtremeKind::Beginning});
        for (int i = 0; i < spec.n; i++) ord.push_back({i, ExtremeKind::Ending});
        return CircularArcModel(std::move(ord));
    }
    }
    throw std::invalid_argument("family has no fixture model");
}

CircularArcModel random_model(int n, uint64_t seed, RandomConstraint constraint) {
    if (n < 1) throw std::invalid_argument("random_model needs n >= 1");
    Rng rng(seed);
    if (constraint == RandomConstraint::Any) {
        std::vector<Extreme> ord;
        ord.reserve(2 * n);
        for (int a = 0; a < n; a++) {
            ord.push_back({a, ExtremeKind::Beginning});
            ord.push_back({a, ExtremeKind::Ending});
        }
        for (int i = 2 * n - 1; i > 0; i--)
            std::swap(ord[i], ord[rng.below(i + 1)]);
        return CircularArcModel(std::move(ord));
    }
    // Proper: random B/E pattern; circular FIFO matching keeps the cyclic
    // order of endings equal to the cyclic order of beginnings.  The number
    // of arcs crossing the cut is the worst prefix deficit of endings.
    std::vector<int> pattern(2 * n); // 1 = beginning slot
    for (int i = 0; i < n; i++) pattern[i] = 1;
    for (int i = 2 * n - 1; i > 0; i--)
        std::swap(pattern[i], pattern[rng.below(i + 1)]);
    int deficit = 0, worst = 0;
    for (int p = 0; p < 2 * n; p++) {
        deficit += pattern[p] ? -1 : 1;
        worst = std::max(worst, deficit);
    }
    std::vector<Extreme> ord(2 * n, Extreme{-1, ExtremeKind::Beginning});
    int next_begin = 0, next_end = 0;
    for (int p = 0; p < 2 * n; p++) {
        if (pattern[p]) ord[p] = {next_begin++, ExtremeKind::Beginning};
        else ord[p] = {(next_end++ + n - worst) % n, ExtremeKind::Ending};
    }
    return CircularArcModel(std::move(ord));
}

} // namespace carc
