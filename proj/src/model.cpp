#include "carc/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace carc {

CircularArcModel::CircularArcModel(std::vector<Extreme> order) : order_(std::move(order)) {
    if (order_.size() % 2 != 0) throw std::invalid_argument("model needs 2n extremes");
    n_ = (int)order_.size() / 2;
    spos_.assign(n_, -1);
    tpos_.assign(n_, -1);
    for (int p = 0; p < (int)order_.size(); p++) {
        const Extreme& e = order_[p];
        if (e.arc < 0 || e.arc >= n_) throw std::invalid_argument("arc id out of range");
        int& slot = e.kind == ExtremeKind::Beginning ? spos_[e.arc] : tpos_[e.arc];
        if (slot != -1) throw std::invalid_argument("duplicate extreme");
        slot = p;
    }
    for (int a = 0; a < n_; a++)
        if (spos_[a] == -1 || tpos_[a] == -1) throw std::invalid_argument("missing extreme");
}

Bits CircularArcModel::segments(int arc) const {
    Bits b(size());
    int m = size(), s = spos_[arc], len = span(arc);
    for (int i = 0; i < len; i++) b.set((s + i) % m);
    return b;
}

std::string CircularArcModel::to_string() const {
    std::string out;
    for (const Extreme& e : order_) {
        if (!out.empty()) out += ' ';
        out += e.kind == ExtremeKind::Beginning ? 's' : 't';
        out += std::to_string(e.arc);
    }
    return out;
}

Graph intersection_graph(const CircularArcModel& m) {
    int n = m.arc_count();
    Graph g(n);
    for (int a = 0; a < n; a++)
        for (int b = a + 1; b < n; b++)
            if (m.arcs_intersect(a, b)) g.add_edge(a, b);
    return g;
}

InducedSubmodel induced_submodel(const CircularArcModel& m, const std::vector<int>& arcs) {
    InducedSubmodel out;
    out.new_ids.assign(m.arc_count(), -1);
    out.orig_ids = arcs;
    std::sort(out.orig_ids.begin(), out.orig_ids.end());
    out.orig_ids.erase(std::unique(out.orig_ids.begin(), out.orig_ids.end()), out.orig_ids.end());
    for (int old : out.orig_ids)
        if (old < 0 || old >= m.arc_count()) throw std::invalid_argument("arc id out of range");
    for (int i = 0; i < (int)out.orig_ids.size(); i++) out.new_ids[out.orig_ids[i]] = i;
    std::vector<Extreme> ord;
    for (const Extreme& e : m.order())
        if (out.new_ids[e.arc] != -1) ord.push_back({out.new_ids[e.arc], e.kind});
    out.model = CircularArcModel(std::move(ord));
    return out;
}

CircularArcModel complement_model(const CircularArcModel& m) {
    std::vector<Extreme> ord = m.order();
    for (Extreme& e : ord)
        e.kind = e.kind == ExtremeKind::Beginning ? ExtremeKind::Ending : ExtremeKind::Beginning;
    return CircularArcModel(std::move(ord));
}

CircularArcModel duplicate_arc(const CircularArcModel& m, int arc) {
    if (arc < 0 || arc >= m.arc_count()) throw std::invalid_argument("arc id out of range");
    int fresh = m.arc_count();
    std::vector<Extreme> ord;
    ord.reserve(m.size() + 2);
    for (int p = 0; p < m.size(); p++) {
        ord.push_back(m.at(p));
        if (p == m.begin_pos(arc)) ord.push_back({fresh, ExtremeKind::Beginning});
        if (p == m.end_pos(arc)) ord.push_back({fresh, ExtremeKind::Ending});
    }
    return CircularArcModel(std::move(ord));
}

CircularArcModel reverse_model(const CircularArcModel& m) {
    std::vector<Extreme> ord;
    ord.reserve(m.size());
    for (int p = m.size() - 1; p >= 0; p--) {
        Extreme e = m.at(p);
        e.kind = e.kind == ExtremeKind::Beginning ? ExtremeKind::Ending : ExtremeKind::Beginning;
        ord.push_back(e);
    }
    return CircularArcModel(std::move(ord));
}

// Minimal rotation string with arcs relabeled by first appearance, so two
// orders compare equal exactly when some rotation matches under a consistent
// arc-id bijection.
std::string canonical_form(const CircularArcModel& m) {
    int sz = m.size();
    if (sz == 0) return "";
    std::string best;
    std::vector<int> label(m.arc_count());
    for (int r = 0; r < sz; r++) {
        std::fill(label.begin(), label.end(), -1);
        int next = 0;
        std::string s;
        s.reserve((size_t)sz * 3);
        for (int i = 0; i < sz; i++) {
            const Extreme& e = m.at((r + i) % sz);
            if (label[e.arc] == -1) label[e.arc] = next++;
            s += e.kind == ExtremeKind::Beginning ? 's' : 't';
            s += std::to_string(label[e.arc]);
            s += ' ';
        }
        if (best.empty() || s < best) best = std::move(s);
    }
    return best;
}

bool equal_models(const CircularArcModel& m1, const CircularArcModel& m2) {
    if (m1.arc_count() != m2.arc_count()) return false;
    return canonical_form(m1) == canonical_form(m2);
}

std::vector<int> universal_arcs(const CircularArcModel& m) {
    std::vector<int> out;
    for (int a = 0; a < m.arc_count(); a++)
        if (m.span(a) - 1 >= m.arc_count() - 1) out.push_back(a);
    return out;
}

std::vector<ExtremeRun> extreme_sequences(const CircularArcModel& m) {
    std::vector<ExtremeRun> runs;
    int sz = m.size();
    if (sz == 0) return runs;
    // start at the first run boundary
    int start = 0;
    for (int p = 0; p < sz; p++)
        if (m.at(p).kind != m.at((p + sz - 1) % sz).kind) {
            start = p;
            break;
        }
    int p = start;
    do {
        ExtremeRun run{m.at(p).kind, {}};
        while (run.positions.size() < (size_t)sz && m.at(p).kind == run.kind) {
            run.positions.push_back(p);
            p = (p + 1) % sz;
            if (p == start) break;
        }
        runs.push_back(std::move(run));
    } while (p != start);
    return runs;
}

bool is_twin_consecutive(const CircularArcModel& m) {
    if (m.arc_count() <= 1) return true;
    Graph g = intersection_graph(m);
    int sz = m.size();
    for (const auto& cls : twin_classes(g)) {
        if (cls.size() < 2) continue;
        for (bool beginnings : {true, false}) {
            std::vector<bool> mark(sz, false);
            for (int a : cls) mark[beginnings ? m.begin_pos(a) : m.end_pos(a)] = true;
            // one circular block of marked positions
            int blocks = 0;
            for (int p = 0; p < sz; p++)
                if (mark[p] && !mark[(p + sz - 1) % sz]) blocks++;
            if (blocks > 1) return false;
        }
    }
    return true;
}

} // namespace carc
