#include <doctest.h>

#include <algorithm>
#include <set>

#include "carc/cliques.hpp"
#include "carc/generators.hpp"
#include "carc/nhca.hpp"
#include "carc/oracle.hpp"
#include "carc/phca.hpp"
#include "test_util.hpp"

using namespace carc;

namespace {

// clique matrices of K13, W4, W5, S3 (hand-checked)
BinaryMatrix cm_k13() {
    return {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}};
}
BinaryMatrix cm_w4() {
    return {{1, 1, 0, 0, 1}, {1, 1, 1, 0, 0}, {1, 0, 1, 1, 0}, {1, 0, 0, 1, 1}};
}
BinaryMatrix cm_w5() {
    return {{1, 1, 0, 0, 0, 1},
            {1, 1, 1, 0, 0, 0},
            {1, 0, 1, 1, 0, 0},
            {1, 0, 0, 1, 1, 0},
            {1, 0, 0, 0, 1, 1}};
}
BinaryMatrix cm_s3() {
    return {{1, 0, 1, 0, 1, 0}, {1, 1, 0, 0, 0, 1}, {1, 1, 1, 0, 0, 0}, {0, 1, 1, 1, 0, 0}};
}

bool same_matrix_up_to_permutation(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    if (a[0].size() != b[0].size()) return false;
    // canonical: sort rows after sorting columns by column content; cheap and
    // adequate at these sizes: try all column permutations of b
    std::vector<int> perm(a[0].size());
    for (size_t i = 0; i < perm.size(); i++) perm[i] = (int)i;
    std::sort(perm.begin(), perm.end());
    do {
        std::multiset<std::vector<uint8_t>> ra, rb;
        for (const auto& r : a) ra.insert(r);
        for (const auto& r : b) {
            std::vector<uint8_t> pr(r.size());
            for (size_t j = 0; j < r.size(); j++) pr[j] = r[perm[j]];
            rb.insert(pr);
        }
        if (ra == rb) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace

TEST_CASE("clique matrix") {
    CliqueMatrix q = clique_matrix(named_graph({Family::K13}));
    CHECK(q.m.size() == 3);
    CHECK(same_matrix_up_to_permutation(q.m, cm_k13()));
    CliqueMatrix kn = clique_matrix(named_graph({Family::CompleteGraph, 4}));
    CHECK(kn.m.size() == 1);
    CHECK(std::count(kn.m[0].begin(), kn.m[0].end(), (uint8_t)1) == 4);
    CHECK(same_matrix_up_to_permutation(clique_matrix(named_graph({Family::Wheel, 4})).m, cm_w4()));
    CHECK(same_matrix_up_to_permutation(clique_matrix(named_graph({Family::Sun3})).m, cm_s3()));
}

TEST_CASE("clique segments") {
    CHECK_THROWS(clique_segments(named_model({Family::Tent})));
    auto single = clique_segments(mk(1, "s0 t0"));
    REQUIRE(single.size() == 1);
    CHECK(single[0].second == std::vector<int>{0});
    auto h5 = clique_segments(named_model({Family::Hole, 5}));
    CHECK(h5.size() == 5);
    for (const auto& [seg, arcs] : h5) CHECK(arcs.size() == 2);
    SUBCASE("bijection with maximal cliques on NHCA models") {
        for (uint64_t seed = 0; seed < 800; seed++) {
            CircularArcModel m = random_model(1 + (int)(seed % 8), seed, RandomConstraint::Any);
            if (authenticate_nhca(m).kind != CoverCheck::Kind::Ok) continue;
            auto segs = clique_segments(m);
            auto cliques = maximal_cliques(intersection_graph(m));
            std::set<std::vector<int>> a, b;
            for (const auto& [seg, arcs] : segs) a.insert(arcs);
            for (const auto& q : cliques) b.insert(q);
            CHECK(a == b);
            CHECK(segs.size() == cliques.size());
        }
    }
}

TEST_CASE("ones property") {
    // identity matrix: any axis and mode
    BinaryMatrix id = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(ones_property(id, OnesAxis::Rows, OnesMode::Consecutive).has_value());
    CHECK(ones_property(id, OnesAxis::Columns, OnesMode::Circular).has_value());
    // K13 clique matrix: no circular ones for rows
    CHECK(!ones_property(cm_k13(), OnesAxis::Rows, OnesMode::Circular).has_value());
    CHECK(!ones_property_exhaustive(cm_k13(), OnesAxis::Rows, OnesMode::Circular).has_value());
    for (const BinaryMatrix& m : {cm_w4(), cm_w5(), cm_s3()}) {
        CHECK(!ones_property(m, OnesAxis::Rows, OnesMode::Circular).has_value());
        CHECK(!ones_property_exhaustive(m, OnesAxis::Rows, OnesMode::Circular).has_value());
    }
    // HCA implies circular ones for columns
    auto h6 = ones_property(clique_matrix(named_graph({Family::Hole, 6})).m, OnesAxis::Columns,
                            OnesMode::Circular);
    CHECK(h6.has_value());

    SUBCASE("reduction tester agrees with exhaustive permutation search") {
        // full enumeration over small matrices (up to 4 distinct rows, 5 columns)
        for (int cols = 1; cols <= 5; cols += 2) {
            int limit = 1 << cols;
            Rng rng(99);
            for (int trial = 0; trial < 600; trial++) {
                int rows = 1 + (int)rng.below(4);
                BinaryMatrix m(rows, std::vector<uint8_t>(cols));
                for (int r = 0; r < rows; r++) {
                    int bits = (int)rng.below(limit);
                    for (int c = 0; c < cols; c++) m[r][c] = (bits >> c) & 1;
                }
                for (OnesMode mode : {OnesMode::Consecutive, OnesMode::Circular}) {
                    bool fast = ones_property(m, OnesAxis::Rows, mode).has_value();
                    bool slow = ones_property_exhaustive(m, OnesAxis::Rows, mode).has_value();
                    CHECK(fast == slow);
                }
            }
        }
        // random matrices with up to 9 columns
        Rng rng(7);
        for (int trial = 0; trial < 1500; trial++) {
            int cols = 2 + (int)rng.below(8);
            int rows = 1 + (int)rng.below(5);
            BinaryMatrix m(rows, std::vector<uint8_t>(cols));
            for (int r = 0; r < rows; r++)
                for (int c = 0; c < cols; c++) m[r][c] = (uint8_t)rng.below(2);
            for (OnesMode mode : {OnesMode::Consecutive, OnesMode::Circular}) {
                auto fast = ones_property(m, OnesAxis::Rows, mode);
                auto slow = ones_property_exhaustive(m, OnesAxis::Rows, mode);
                CHECK(fast.has_value() == slow.has_value());
                if (fast) {
                    // verify the witness directly
                    for (const auto& row : m) {
                        int k = (int)fast->size();
                        int trans = 0, any = 0, first = -1, last = -1, cnt = 0;
                        for (int i = 0; i < k; i++) {
                            int va = row[(*fast)[i]];
                            any |= va;
                            if (va) {
                                if (first < 0) first = i;
                                last = i;
                                cnt++;
                            }
                            if (!va && row[(*fast)[(i + 1) % k]]) trans++;
                        }
                        if (mode == OnesMode::Consecutive) {
                            CHECK((cnt == 0 || last - first + 1 == cnt));
                        } else {
                            CHECK((!any || trans <= 1));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("phca via matrix") {
    CHECK(!phca_via_matrix(named_graph({Family::Sun3})));
    CHECK(!phca_via_matrix(named_graph({Family::K13})));
    CHECK(!phca_via_matrix(named_graph({Family::Wheel, 4})));
    CHECK(!phca_via_matrix(named_graph({Family::Wheel, 5})));
    CHECK(phca_via_matrix(named_graph({Family::Hole, 5})));
    CHECK(phca_via_matrix(named_graph({Family::Path, 1})));
    SUBCASE("matches phca_from_pca on random proper models") {
        for (uint64_t seed = 0; seed < 700; seed++) {
            CircularArcModel m = random_model(1 + (int)(seed % 9), seed, RandomConstraint::Proper);
            Graph g = intersection_graph(m);
            CHECK(phca_via_matrix(g) == phca_from_pca(m).positive());
        }
    }
    SUBCASE("false whenever K13, W4, W5 or S3 is induced") {
        int hits = 0;
        for (uint64_t seed = 0; seed < 500; seed++) {
            CircularArcModel m = random_model(4 + (int)(seed % 5), seed, RandomConstraint::Any);
            Graph g = intersection_graph(m);
            bool bad = find_induced(g, named_graph({Family::K13})).has_value() ||
                       find_induced(g, named_graph({Family::Wheel, 4})).has_value() ||
                       (g.vertex_count() >= 6 &&
                        (find_induced(g, named_graph({Family::Wheel, 5})).has_value() ||
                         find_induced(g, named_graph({Family::Sun3})).has_value()));
            if (!bad) continue;
            hits++;
            CHECK(!phca_via_matrix(g));
        }
        CHECK(hits > 0);
    }
}
