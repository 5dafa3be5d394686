#ifndef CARC_GENERATORS_HPP
#define CARC_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "carc/graph.hpp"
#include "carc/model.hpp"

namespace carc {

enum class Family {
    CI,
    Wheel,
    RisingSun,
    Sun3,
    Umbrella,
    Tent,
    K13,
    Hole,
    Path,
    CompleteGraph,
};

struct FamilySpec {
    Family family;
    int n = 0;
    int k = 0;
};

// Tucker's CI(n,k) model on the length-4n circle, as an extreme order.
// Requires gcd(n,k)=1 and n > 2k.
CircularArcModel ci_model(int n, int k);

Graph named_graph(const FamilySpec& spec);

// A fixture model whose intersection graph is isomorphic to named_graph(spec).
// Sun3/Umbrella/Wheel/RisingSun fixtures are Helly and not normal; the Tent
// fixture is normal and not Helly; Hole/K13/Path/Complete fixtures are NHCA.
CircularArcModel named_model(const FamilySpec& spec);

enum class RandomConstraint { Any, Proper };

CircularArcModel random_model(int n, uint64_t seed, RandomConstraint constraint);

} // namespace carc

#endif
