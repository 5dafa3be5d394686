#include <doctest.h>

#include "carc/generators.hpp"
#include "carc/model.hpp"
#include "carc/oracle.hpp"
#include "test_util.hpp"

using namespace carc;

TEST_CASE("ci model structure") {
    CHECK_THROWS(ci_model(4, 2));  // gcd != 1
    CHECK_THROWS(ci_model(5, 3));  // n <= 2k
    for (auto [n, k] : {std::pair{3, 1}, {4, 1}, {5, 1}, {5, 2}, {7, 2}, {7, 3}, {8, 3}}) {
        CircularArcModel m = ci_model(n, k);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(m.arc_count() == 2 * n);
        ClassReport r = classify(m);
        CHECK(r.proper);
        CHECK(r.normal);
        Graph g = intersection_graph(m);
        for (int i = 0; i < n; i++) {
            CHECK(g.adjacent(i, (i + 1) % n));          // A_i ~ A_{i+1}
            CHECK(g.adjacent(i, n + i));                // A_i ~ B_i
            CHECK(g.adjacent(i, n + (i + n - 1) % n));  // A_i ~ B_{i-1}
            CHECK(!g.adjacent(n + i, n + (i + 1) % n)); // B_i, B_{i+1} disjoint
        }
    }
    CHECK(is_isomorphic(intersection_graph(ci_model(3, 1)), named_graph({Family::Sun3})));
}

TEST_CASE("ci model against positions brute force") {
    // independent oracle: doubled positions, endings at even keys so touching
    // arcs stay disjoint (odd k layout, where Tucker's formulas apply verbatim)
    for (auto [n, k] : {std::pair{3, 1}, {4, 1}, {7, 3}}) {
        long long m4 = 4LL * n;
        std::vector<std::pair<long long, long long>> arc(2 * n);
        for (int i = 0; i < n; i++) {
            arc[i] = {2 * ((4LL * k * i) % m4) + 1, 2 * ((4LL * k * (i + 1) + 1) % m4)};
            arc[n + i] = {2 * ((4LL * k * i + 2 * k + 1) % m4) + 1,
                          2 * ((4LL * k * (i + 1) + 2 * k) % m4)};
        }
        auto inside = [&](std::pair<long long, long long> a, long long q) {
            long long span = ((a.second - a.first) % (2 * m4) + 2 * m4) % (2 * m4);
            long long off = ((q - a.first) % (2 * m4) + 2 * m4) % (2 * m4);
            return off != 0 && off < span;
        };
        Graph expect(2 * n);
        for (int a = 0; a < 2 * n; a++)
            for (int b = a + 1; b < 2 * n; b++)
                if (inside(arc[a], arc[b].first) || inside(arc[b], arc[a].first))
                    expect.add_edge(a, b);
        CHECK(intersection_graph(ci_model(n, k)) == expect);
    }
}

TEST_CASE("named graphs") {
    Graph w4 = named_graph({Family::Wheel, 4});
    CHECK(w4.vertex_count() == 5);
    CHECK(w4.degree(4) == 4);
    // rim is C_4
    Graph rim = induced_subgraph(w4, {0, 1, 2, 3});
    CHECK(rim.edge_count() == 4);
    CHECK(named_graph({Family::RisingSun, 4}).vertex_count() == 7);
    CHECK(is_isomorphic(named_graph({Family::Tent}), complement(named_graph({Family::Sun3}))));
    CHECK(named_graph({Family::K13}).edge_count() == 3);
    CHECK_THROWS(named_graph({Family::Wheel, 3}));
    CHECK_THROWS(named_graph({Family::Hole, 3}));
}

TEST_CASE("fixture models match their graphs") {
    std::vector<FamilySpec> specs = {
        {Family::Sun3},        {Family::Umbrella},     {Family::Tent},         {Family::K13},
        {Family::Wheel, 4},    {Family::Wheel, 5},     {Family::Wheel, 7},     {Family::Hole, 4},
        {Family::Hole, 6},     {Family::RisingSun, 4}, {Family::RisingSun, 5}, {Family::RisingSun, 7},
        {Family::Path, 1},     {Family::Path, 4},      {Family::CompleteGraph, 3},
    };
    for (const FamilySpec& spec : specs) {
        CAPTURE((int)spec.family);
        CAPTURE(spec.n);
        CHECK(is_isomorphic(intersection_graph(named_model(spec)), named_graph(spec)));
    }
}

TEST_CASE("fixture class verdicts") {
    // Helly but not normal
    for (const FamilySpec& spec :
         {FamilySpec{Family::Sun3}, {Family::Umbrella}, {Family::Wheel, 4}, {Family::Wheel, 5},
          {Family::RisingSun, 4}, {Family::RisingSun, 6}}) {
        ClassReport r = classify(named_model(spec));
        CAPTURE((int)spec.family);
        CHECK(r.helly);
        CHECK(!r.normal);
    }
    // normal but not Helly
    ClassReport tent = classify(named_model({Family::Tent}));
    CHECK(tent.normal);
    CHECK(!tent.helly);
    // NHCA fixtures
    for (int k = 4; k <= 8; k++) {
        ClassReport r = classify(named_model({Family::Hole, k}));
        CHECK(r.normal);
        CHECK(r.helly);
        CHECK(!r.interval_point);
    }
    ClassReport k13 = classify(named_model({Family::K13}));
    CHECK(k13.interval_point);
}

TEST_CASE("random models") {
    CHECK(random_model(1, 7, RandomConstraint::Any).arc_count() == 1);
    // reproducibility
    CHECK(equal_models(random_model(9, 42, RandomConstraint::Any),
                       random_model(9, 42, RandomConstraint::Any)));
    CHECK(equal_models(random_model(9, 42, RandomConstraint::Proper),
                       random_model(9, 42, RandomConstraint::Proper)));
    SUBCASE("proper constraint holds and never nests") {
        for (uint64_t seed = 0; seed < 10000; seed++) {
            CircularArcModel m = random_model(1 + (int)(seed % 12), seed, RandomConstraint::Proper);
            CHECK(is_proper_model(m));
        }
    }
}
