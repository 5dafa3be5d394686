#ifndef CARC_UHCA_HPP
#define CARC_UHCA_HPP

#include <optional>
#include <string>
#include <vector>

#include "carc/certificates.hpp"
#include "carc/graph.hpp"
#include "carc/model.hpp"
#include "carc/oracle.hpp"

namespace carc {

struct CiWitness {
    int n, k;
    std::vector<int> mapping; // CI(n,k) vertex -> host vertex
};

struct UhcaResult {
    bool positive = false;
    std::optional<CircularArcModel> model;
    std::optional<UnitWitness> witness;     // positive: equal-length realization
    std::optional<CiWitness> ci;            // negative: induced CI(n,k), n > 3k
    std::optional<Obstruction> obstruction; // negative on the UCA route: W4 / S3
    std::string note;                       // set when the CI search ran out of room
};

enum class CiRegime { AboveTwoK, AboveThreeK }; // n > 2k, n > 3k

// Smallest induced CI(n,k) of the given regime with 2n <= max_vertices.
std::optional<CiWitness> find_ci(const Graph& g, int max_vertices, CiRegime regime);

// PHCA model -> UHCA model with unit witness, or a negative answer with a
// CI(n,k) witness (n > 3k) when one fits inside the graph.
UhcaResult uhca_from_phca(const CircularArcModel& m);

// UCA model + validated witness -> UHCA model, or a W4/S3 certificate.
UhcaResult uhca_from_uca(const CircularArcModel& m, const UnitWitness& witness);

} // namespace carc

#endif
