#ifndef CARC_CERTIFICATES_HPP
#define CARC_CERTIFICATES_HPP

#include <optional>
#include <string>
#include <vector>

#include "carc/model.hpp"

namespace carc {

enum class ForbiddenKind {
    K13,
    W4,
    S3,
    Wheel,
    RisingSun,
    Umbrella,
    Tent,
    Hole,
    AsteroidalTriple,
};

const char* forbidden_kind_name(ForbiddenKind k);

// A small re-verifiable witness: a named forbidden structure given by vertex
// (or arc) ids in the host's numbering.
struct Obstruction {
    ForbiddenKind kind;
    std::vector<int> vertices;
};

// Outcome of a recognition run.  Positive carries a model of the target
// class; negative verdicts carry covering arcs and/or a forbidden structure.
struct Certificate {
    enum class Kind { Positive, TwoCover, ThreeCover, Forbidden };
    Kind kind = Kind::Positive;
    std::optional<CircularArcModel> model; // Positive
    std::vector<int> cover;                // TwoCover / ThreeCover; optional context for Forbidden
    std::optional<Obstruction> obstruction;

    bool positive() const { return kind == Kind::Positive; }
};

// Check an obstruction against the graph it is claimed to live in.
bool verify_obstruction(const Graph& host, const Obstruction& ob);

} // namespace carc

#endif
