#ifndef CARC_NHCA_HPP
#define CARC_NHCA_HPP

#include <optional>
#include <vector>

#include "carc/certificates.hpp"
#include "carc/graph.hpp"
#include "carc/model.hpp"

namespace carc {

// next[a]: among the arcs whose open range contains t(a), the one whose ending
// point is reached last clockwise from t(a); nothing if no arc crosses t(a).
struct NextMap {
    std::vector<std::optional<int>> next;
};

NextMap compute_next(const CircularArcModel& m);

struct CoverCheck {
    enum class Kind { Ok, TwoCover, ThreeCover };
    Kind kind = Kind::Ok;
    std::vector<int> arcs;
};

// NHCA model authentication: no two and no three arcs cover the circle.
CoverCheck authenticate_nhca(const CircularArcModel& m);

struct IntervalResult {
    std::optional<CircularArcModel> model; // interval model, same vertex ids
    std::optional<Obstruction> witness;
    bool positive() const { return model.has_value(); }
};

// Interval recognition with certificates: chordality via maximum-cardinality
// search, then a consecutive-ones arrangement of the clique matrix; negative
// answers carry a hole or a Lekkerkerker-Boland style obstruction.
IntervalResult recognize_interval(const Graph& g);

Certificate recognize_nhca(const CircularArcModel& m);

// Every arc's closed neighborhood induces a submodel with an uncovered segment.
bool check_local_interval(const CircularArcModel& m);

} // namespace carc

#endif
