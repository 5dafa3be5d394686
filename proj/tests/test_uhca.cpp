#include <doctest.h>

#include "carc/generators.hpp"
#include "carc/nhca.hpp"
#include "carc/oracle.hpp"
#include "carc/uhca.hpp"
#include "test_util.hpp"

using namespace carc;

TEST_CASE("find ci") {
    CHECK(find_ci(named_graph({Family::Sun3}), 6, CiRegime::AboveTwoK).has_value());
    auto s3 = find_ci(named_graph({Family::Sun3}), 6, CiRegime::AboveTwoK);
    CHECK(s3->n == 3);
    CHECK(s3->k == 1);
    CHECK(!find_ci(named_graph({Family::Hole, 7}), 14, CiRegime::AboveTwoK).has_value());
    auto ci52 = find_ci(intersection_graph(ci_model(5, 2)), 10, CiRegime::AboveTwoK);
    REQUIRE(ci52.has_value());
    CHECK(ci52->n == 5);
    CHECK(ci52->k == 2);
    // regime filter: the 3-sun is CI(3,1) but 3 <= 3*1
    CHECK(!find_ci(named_graph({Family::Sun3}), 6, CiRegime::AboveThreeK).has_value());
}

TEST_CASE("uhca from phca") {
    CHECK_THROWS(uhca_from_phca(mk(2, "s0 s1 t1 t0"))); // not proper
    for (int k = 4; k <= 8; k++) {
        UhcaResult r = uhca_from_phca(named_model({Family::Hole, k}));
        CAPTURE(k);
        REQUIRE(r.positive);
        CHECK(verify_unit_witness(*r.model, *r.witness));
    }
    UhcaResult neg = uhca_from_phca(ci_model(4, 1));
    REQUIRE(!neg.positive);
    REQUIRE(neg.ci.has_value());
    CHECK(neg.ci->n == 4);
    CHECK(neg.ci->k == 1);
    UhcaResult single = uhca_from_phca(mk(1, "s0 t0"));
    CHECK(single.positive);
}

TEST_CASE("uhca from uca") {
    // hand unit model of K_4 with two covering arcs -> staircase UIG model
    CircularArcModel k4 = mk(4, "s0 s1 t2 s3 s2 t0 t1 t3");
    UnitWitness w;
    w.circumference = 100;
    w.arc_length = 60;
    for (int p : {0, 10, 15, 20, 55, 60, 70, 80}) w.positions.push_back(p);
    REQUIRE(verify_unit_witness(k4, w));
    UhcaResult r = uhca_from_uca(k4, w);
    REQUIRE(r.positive);
    CHECK(classify(*r.model).interval_point);
    CHECK(is_isomorphic(intersection_graph(*r.model), named_graph({Family::CompleteGraph, 4})));
    CHECK(verify_unit_witness(*r.model, *r.witness));

    // witness mismatch is rejected
    UnitWitness bad = w;
    bad.arc_length = 59;
    CHECK_THROWS(uhca_from_uca(k4, bad));

    // unit hole stays put
    CircularArcModel h5 = named_model({Family::Hole, 5});
    auto hw = unit_realizable(h5);
    REQUIRE(hw.has_value());
    UhcaResult rh = uhca_from_uca(h5, *hw);
    REQUIRE(rh.positive);
    CHECK(equal_models(*rh.model, h5));

    // a unit model containing W_4: hub arc over a unit C_4
    CircularArcModel w4 = mk(5, "s0 t3 s1 s4 t0 s2 t1 s3 t4 t2");
    auto ww = unit_realizable(w4);
    REQUIRE(ww.has_value());
    REQUIRE(is_isomorphic(intersection_graph(w4), named_graph({Family::Wheel, 4})));
    UhcaResult rw = uhca_from_uca(w4, *ww);
    REQUIRE(!rw.positive);
    REQUIRE(rw.obstruction.has_value());
    CHECK(rw.obstruction->kind == ForbiddenKind::W4);
    CHECK(verify_obstruction(intersection_graph(w4), *rw.obstruction));

    SUBCASE("random unit-realizable models round through correctly") {
        int negatives = 0, positives = 0;
        for (uint64_t seed = 0; seed < 1500; seed++) {
            CircularArcModel m = random_model(1 + (int)(seed % 7), seed, RandomConstraint::Proper);
            auto uw = unit_realizable(m);
            if (!uw) continue;
            UhcaResult r2 = uhca_from_uca(m, *uw);
            Graph g = intersection_graph(m);
            bool expect = !find_induced(g, named_graph({Family::Wheel, 4}));
            CHECK(r2.positive == expect);
            if (r2.positive) {
                positives++;
                CHECK(verify_unit_witness(*r2.model, *r2.witness));
            } else {
                negatives++;
                REQUIRE(r2.obstruction.has_value());
                CHECK(verify_obstruction(g, *r2.obstruction));
            }
        }
        CHECK(positives > 0);
    }
}

TEST_CASE("regime consistency along Tucker's chain") {
    // a PHCA-accepted model whose graph has no induced CI(n,k) with n > 2k
    // inside the exhaustive bound must be unit realizable
    int applied = 0;
    for (uint64_t seed = 0; seed < 500; seed++) {
        CircularArcModel m = random_model(1 + (int)(seed % 7), seed, RandomConstraint::Proper);
        if (authenticate_nhca(m).kind != CoverCheck::Kind::Ok) continue;
        Graph g = intersection_graph(m);
        if (find_ci(g, g.vertex_count(), CiRegime::AboveTwoK)) continue;
        applied++;
        CHECK(uhca_from_phca(m).positive);
    }
    CHECK(applied > 0);
}

TEST_CASE("UHCA equals PHCA plus unit at desk scale") {
    // for PHCA-accepted models: uhca positive iff unit realizable
    for (uint64_t seed = 0; seed < 600; seed++) {
        CircularArcModel m = random_model(1 + (int)(seed % 7), seed, RandomConstraint::Proper);
        if (authenticate_nhca(m).kind != CoverCheck::Kind::Ok) continue;
        UhcaResult r = uhca_from_phca(m);
        CHECK(r.positive == unit_realizable(m).has_value());
        if (r.positive) {
            ClassReport rep = classify(*r.model);
            CHECK(rep.proper);
            CHECK(rep.helly);
            CHECK(verify_unit_witness(*r.model, *r.witness));
        }
    }
}
