#ifndef CARC_CLIQUES_HPP
#define CARC_CLIQUES_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "carc/graph.hpp"
#include "carc/model.hpp"

namespace carc {

using BinaryMatrix = std::vector<std::vector<uint8_t>>;

// Clique-vertex incidence matrix; rows in lexicographic clique order.
struct CliqueMatrix {
    std::vector<std::vector<int>> cliques;
    int cols = 0;
    BinaryMatrix m;
};

CliqueMatrix clique_matrix(const Graph& g);

// Clique segments of an NHCA (or interval) model: segments whose left
// boundary is a beginning and right boundary an ending, with the arcs
// containing them.  In bijection with the maximal cliques.
std::vector<std::pair<int, std::vector<int>>> clique_segments(const CircularArcModel& m);

enum class OnesAxis { Rows, Columns };
enum class OnesMode { Consecutive, Circular };

// Witnessing order of the other axis (columns for Rows, rows for Columns),
// or nothing.  Circular mode runs the complementation reduction onto the
// consecutive tester (pivot = line 0).
std::optional<std::vector<int>> ones_property(const BinaryMatrix& m, OnesAxis axis, OnesMode mode);

// Independent exhaustive permutation search, for cross-checking the reduction
// tester at desk scale (guarded to <= 10 orderable lines).
std::optional<std::vector<int>> ones_property_exhaustive(const BinaryMatrix& m, OnesAxis axis, OnesMode mode);

// Circular-ones property for both rows and columns of the clique matrix.
bool phca_via_matrix(const Graph& g);

} // namespace carc

#endif
