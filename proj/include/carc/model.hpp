#ifndef CARC_MODEL_HPP
#define CARC_MODEL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "carc/bits.hpp"
#include "carc/graph.hpp"

namespace carc {

enum class ExtremeKind : uint8_t { Beginning, Ending };

struct Extreme {
    int arc;
    ExtremeKind kind;
    bool operator==(const Extreme&) const = default;
};

// A circular-arc model reduced to pure combinatorics: the clockwise circular
// sequence of its 2n extremes.  Arcs are open; arc a runs clockwise from the
// position of s(a) to the position of t(a).  Segments of the circle are
// indexed by the extreme that begins them clockwise, so arc a covers exactly
// the segments begin_pos(a) .. end_pos(a)-1 (mod 2n).
class CircularArcModel {
public:
    CircularArcModel() = default;
    explicit CircularArcModel(std::vector<Extreme> order);

    int arc_count() const { return n_; }
    int size() const { return (int)order_.size(); } // 2n
    bool empty() const { return n_ == 0; }
    const std::vector<Extreme>& order() const { return order_; }
    const Extreme& at(int pos) const { return order_[pos]; }

    int begin_pos(int arc) const { return spos_[arc]; }
    int end_pos(int arc) const { return tpos_[arc]; }

    // number of segments covered by the arc, in [1, 2n-1]
    int span(int arc) const {
        int m = size();
        return ((tpos_[arc] - spos_[arc]) % m + m) % m;
    }
    // extreme position strictly inside the open arc
    bool pos_inside(int arc, int pos) const {
        if (pos == spos_[arc]) return false;
        int m = size();
        return ((pos - spos_[arc]) % m + m) % m < span(arc);
    }
    bool covers_segment(int arc, int seg) const {
        int m = size();
        return ((seg - spos_[arc]) % m + m) % m < span(arc);
    }
    Bits segments(int arc) const;

    bool arcs_intersect(int a, int b) const {
        return pos_inside(a, spos_[b]) || pos_inside(b, spos_[a]);
    }
    // strict containment: inner lies inside outer as arcs
    bool arc_contains(int outer, int inner) const {
        if (outer == inner) return false;
        if (!pos_inside(outer, spos_[inner]) || !pos_inside(outer, tpos_[inner])) return false;
        int m = size();
        int a = ((spos_[inner] - spos_[outer]) % m + m) % m;
        int b = ((tpos_[inner] - spos_[outer]) % m + m) % m;
        return a < b;
    }

    std::string to_string() const;

private:
    int n_ = 0;
    std::vector<Extreme> order_;
    std::vector<int> spos_, tpos_;
};

struct InducedSubmodel {
    CircularArcModel model;
    std::vector<int> orig_ids; // new id -> old id
    std::vector<int> new_ids;  // old id -> new id, -1 if dropped
};

struct ExtremeRun {
    ExtremeKind kind;
    std::vector<int> positions; // consecutive circular positions in the model
};

Graph intersection_graph(const CircularArcModel& m);
InducedSubmodel induced_submodel(const CircularArcModel& m, const std::vector<int>& arcs);
CircularArcModel complement_model(const CircularArcModel& m);
CircularArcModel duplicate_arc(const CircularArcModel& m, int arc);
CircularArcModel reverse_model(const CircularArcModel& m);

// Equality of circular orders: some rotation of m2 matches m1 exactly with a
// consistent arc-id bijection.  Reflection is deliberately not quotiented.
bool equal_models(const CircularArcModel& m1, const CircularArcModel& m2);
std::string canonical_form(const CircularArcModel& m);

// Arcs containing at least n-1 extremes of the model.
// Meaningful for proper models, where these are exactly the universal arcs.
std::vector<int> universal_arcs(const CircularArcModel& m);

std::vector<ExtremeRun> extreme_sequences(const CircularArcModel& m);

// Every maximal family of twin arcs (N[v]=N[w]) has consecutive beginnings
// and consecutive endings.
bool is_twin_consecutive(const CircularArcModel& m);

} // namespace carc

#endif
