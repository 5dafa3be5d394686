#include "carc/uhca.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "carc/generators.hpp"
#include "carc/nhca.hpp"
#include "carc/phca.hpp"

namespace carc {

std::optional<CiWitness> find_ci(const Graph& g, int max_vertices, CiRegime regime) {
    int bound = std::min(max_vertices, g.vertex_count());
    for (int nn = 3; 2 * nn <= bound; nn++) {
        int kmax = regime == CiRegime::AboveTwoK ? (nn - 1) / 2 : (nn - 1) / 3;
        for (int kk = 1; kk <= kmax; kk++) {
            if (std::gcd(nn, kk) != 1) continue;
            Graph pattern = intersection_graph(ci_model(nn, kk));
            auto map = find_induced(g, pattern);
            if (map) return CiWitness{nn, kk, *map};
        }
    }
    return std::nullopt;
}

UhcaResult uhca_from_phca(const CircularArcModel& m) {
    if (!is_proper_model(m) || authenticate_nhca(m).kind != CoverCheck::Kind::Ok)
        throw std::invalid_argument("uhca_from_phca needs an authenticated PHCA model");
    UhcaResult res;
    auto w = unit_realizable(m);
    if (w) {
        res.positive = true;
        res.model = m;
        res.witness = std::move(w);
        return res;
    }
    Graph g = intersection_graph(m);
    res.ci = find_ci(g, g.vertex_count(), CiRegime::AboveThreeK);
    if (!res.ci) res.note = "infeasible (witness search exhausted at bound " +
                            std::to_string(g.vertex_count()) + ")";
    return res;
}

UhcaResult uhca_from_uca(const CircularArcModel& m, const UnitWitness& witness) {
    if (!verify_unit_witness(m, witness)) throw std::invalid_argument("unit witness mismatch");
    UhcaResult res;
    int n = m.arc_count();
    if (n == 0) {
        res.positive = true;
        res.model = m;
        res.witness = witness;
        return res;
    }
    // two covering arcs force a complete graph; emit the staircase UIG model
    if (!is_normal_model(m)) {
        Graph g = intersection_graph(m);
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++) assert(g.adjacent(u, v));
        std::vector<Extreme> ord;
        for (int i = 0; i < n; i++) ord.push_back({i, ExtremeKind::Beginning});
        for (int i = 0; i < n; i++) ord.push_back({i, ExtremeKind::Ending});
        CircularArcModel stair(std::move(ord));
        UnitWitness sw;
        sw.circumference = 2 * n;
        sw.arc_length = n;
        for (int p = 0; p < 2 * n; p++) sw.positions.push_back(p);
        res.positive = true;
        res.model = std::move(stair);
        res.witness = std::move(sw);
        return res;
    }
    // normal UCA model: U_1 / U_0 dispatch of the PCA machinery
    Certificate cert = phca_from_pca(m);
    if (cert.positive()) {
        res.positive = true;
        res.witness = unit_realizable(*cert.model);
        // the extreme order is preserved, so unit lengths survive
        if (!res.witness) throw std::logic_error("restored model lost unit realizability");
        res.model = std::move(cert.model);
        return res;
    }
    res.obstruction = std::move(cert.obstruction);
    return res;
}

} // namespace carc
