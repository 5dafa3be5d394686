#ifndef CARC_PHCA_HPP
#define CARC_PHCA_HPP

#include <optional>
#include <vector>

#include "carc/certificates.hpp"
#include "carc/model.hpp"

namespace carc {

// U_k view: the model with all but k universal arcs removed, plus the
// bookkeeping needed to lift certificates back and restore duplicates.
struct UkView {
    CircularArcModel reduced;
    std::vector<int> removed_universal; // old ids, highest first removed
    std::optional<int> kept_universal;  // lowest universal old id, if any kept
    std::vector<int> id_map;            // old -> new, -1 if removed
    std::vector<int> orig_ids;          // new -> old
};

UkView u_k(const CircularArcModel& m, int k);

struct NormalizeResult {
    CircularArcModel model;
    std::vector<int> arc_map; // input arc -> output arc (removed universals map to their twin copies)
};

// Normalization: keep one universal arc, drop the rest, re-duplicate.  Output
// is a twin-consecutive NPCA model of the same graph.
NormalizeResult normalize_pca(const CircularArcModel& m);

// Sort every t-sequence by the order of the beginnings and every s-sequence
// by the order of the endings.  Intersections are unchanged.  Input must be
// NHCA-authenticated.
CircularArcModel sort_extreme_sequences(const CircularArcModel& m);

// NHCA model -> PHCA model, or a K_{1,3} submodel witness.
Certificate phca_from_nhca(const CircularArcModel& m);

// PCA model -> PHCA model, or a W_4 / S_3 submodel witness (ids in the input
// model's numbering).
Certificate phca_from_pca(const CircularArcModel& m);

} // namespace carc

#endif
