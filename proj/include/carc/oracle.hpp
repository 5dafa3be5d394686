#ifndef CARC_ORACLE_HPP
#define CARC_ORACLE_HPP

#include <array>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "carc/graph.hpp"
#include "carc/model.hpp"

namespace carc {

using Rational = boost::multiprecision::cpp_rational;

// Ground-truth report computed by exhaustive definitional checks.
struct ClassReport {
    bool proper = false;
    bool normal = false;
    bool helly = false;
    bool interval_point = false;                  // some segment covered by no arc
    std::optional<std::pair<int, int>> two_cover; // lexicographically first covering pair
    std::optional<std::array<int, 3>> three_cover;
};

ClassReport classify(const CircularArcModel& m);

bool is_proper_model(const CircularArcModel& m);
bool is_normal_model(const CircularArcModel& m);

// Maximal cliques, each sorted, list sorted lexicographically.
std::vector<std::vector<int>> maximal_cliques(const Graph& g);

// Injective map realizing pattern as an induced subgraph of host
// (mapping[i] = host vertex for pattern vertex i), lexicographically first.
std::optional<std::vector<int>> find_induced(const Graph& host, const Graph& pattern);
bool is_isomorphic(const Graph& a, const Graph& b);

// All models (up to rotation and arc relabeling) whose intersection graph
// equals `graph` exactly and which pass `filter`.  Guarded to n <= 5.
std::vector<CircularArcModel> enumerate_models(const Graph& graph,
                                               const std::function<bool(const CircularArcModel&)>& filter);

struct UnitWitness {
    Rational circumference; // L
    Rational arc_length;    // u
    std::vector<Rational> positions; // one per extreme, in model order
};

// Decide whether the extreme order admits a realization with all arcs of
// equal length; exact rational feasibility over the induced difference
// constraints, parametric in u (L normalized to 1, then rescaled).
std::optional<UnitWitness> unit_realizable(const CircularArcModel& m);

bool verify_unit_witness(const CircularArcModel& m, const UnitWitness& w);

} // namespace carc

#endif
