#ifndef CARC_ORIENTATIONS_HPP
#define CARC_ORIENTATIONS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "carc/bits.hpp"
#include "carc/graph.hpp"
#include "carc/model.hpp"

namespace carc {

// Oriented graph: at most one direction per pair.
class OrientedGraph {
public:
    OrientedGraph() = default;
    explicit OrientedGraph(int n) : n_(n), out_(n, Bits(n)) {}

    int vertex_count() const { return n_; }
    void add_arc(int u, int v);
    bool arc(int u, int v) const { return out_[u].test(v); }
    bool adjacent(int u, int v) const { return arc(u, v) || arc(v, u); }
    int out_degree(int v) const { return out_[v].count(); }
    int in_degree(int v) const;
    Graph underlying() const;

    bool operator==(const OrientedGraph& o) const { return n_ == o.n_ && out_ == o.out_; }

private:
    int n_ = 0;
    std::vector<Bits> out_;
};

enum class EnumKind { OutStraight, OutRound, Straight, Round, LocallyOutStraight, LocallyStraight };

struct Enumeration {
    std::vector<int> order;
};

// Literal check of the claimed kind; Locally* kinds verify the scope of every
// vertex as a linear enumeration of the induced subdigraph.
bool verify_enumeration(const OrientedGraph& d, const Enumeration& e, EnumKind kind);

// Scope of v in the enumeration, as a pair of order positions (leftmost
// in-neighbor-or-self, rightmost out-neighbor-or-self); nothing when v falls
// outside the range, which we reject as non-verifying.
std::optional<std::pair<int, int>> scope(const OrientedGraph& d, const Enumeration& e, int v);

enum class OrientFlavor { OutRound, Round };

// Orientation by the crossing rule: v_i -> v_j iff A_i crosses s(A_j),
// vertices enumerated by beginning points.
std::pair<OrientedGraph, Enumeration> orient_from_model(const CircularArcModel& m, OrientFlavor flavor);

// Converse construction: an NCA model realizing an out-round enumeration.
CircularArcModel model_from_enumeration(const OrientedGraph& d, const Enumeration& e);

// Exhaustive search over enumerations and compatible orientations (n <= 7).
std::optional<std::pair<OrientedGraph, Enumeration>> search_enumeration(const Graph& g, EnumKind kind);

} // namespace carc

#endif
