#include "carc/phca.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "carc/nhca.hpp"
#include "carc/oracle.hpp"

namespace carc {

UkView u_k(const CircularArcModel& m, int k) {
    if (k < 0) throw std::invalid_argument("u_k needs k >= 0");
    if (!is_proper_model(m)) throw std::invalid_argument("u_k needs a proper model");
    UkView view;
    std::vector<int> universal = universal_arcs(m);
    int u = (int)universal.size();
    int drop = std::max(0, u - k);
    view.removed_universal.assign(universal.end() - drop, universal.end());
    if (u > drop) view.kept_universal = universal.front();
    std::vector<int> keep;
    for (int a = 0; a < m.arc_count(); a++)
        if (std::find(view.removed_universal.begin(), view.removed_universal.end(), a) ==
            view.removed_universal.end())
            keep.push_back(a);
    InducedSubmodel sub = induced_submodel(m, keep);
    view.reduced = std::move(sub.model);
    view.id_map = std::move(sub.new_ids);
    view.orig_ids = std::move(sub.orig_ids);
    return view;
}

NormalizeResult normalize_pca(const CircularArcModel& m) {
    if (!is_proper_model(m)) throw std::invalid_argument("normalize_pca needs a proper model");
    NormalizeResult res;
    std::vector<int> universal = universal_arcs(m);
    if (universal.size() <= 1) {
        res.model = m;
        res.arc_map.resize(m.arc_count());
        std::iota(res.arc_map.begin(), res.arc_map.end(), 0);
        return res;
    }
    UkView view = u_k(m, 1);
    int kept = view.id_map[*view.kept_universal];
    CircularArcModel cur = view.reduced;
    res.arc_map.assign(m.arc_count(), -1);
    for (int a = 0; a < m.arc_count(); a++)
        if (view.id_map[a] != -1) res.arc_map[a] = view.id_map[a];
    std::vector<int> removed = view.removed_universal;
    std::sort(removed.begin(), removed.end());
    for (int old : removed) {
        res.arc_map[old] = cur.arc_count(); // the duplicate about to be created
        cur = duplicate_arc(cur, kept);
    }
    res.model = std::move(cur);
    return res;
}

namespace {

// Stable re-ordering of every t-sequence so endings follow the
// order of their beginnings (arcs crossing s(A_1) first).
CircularArcModel sort_t_sequences(const CircularArcModel& m) {
    int sz = m.size();
    std::vector<bool> marked(m.arc_count(), false);
    int start = m.begin_pos(0);
    for (int a = 0; a < m.arc_count(); a++) marked[a] = m.pos_inside(a, start);

    // maximal runs of endings, by run id per position
    std::vector<int> run_of(sz, -1);
    int runs = 0;
    for (int p = 0; p < sz; p++) {
        if (m.at(p).kind != ExtremeKind::Ending) continue;
        if (run_of[p] != -1) continue;
        // walk back to the run start
        int s = p;
        while (m.at((s + sz - 1) % sz).kind == ExtremeKind::Ending && (s + sz - 1) % sz != p)
            s = (s + sz - 1) % sz;
        int id = runs++;
        int q = s;
        while (m.at(q).kind == ExtremeKind::Ending) {
            run_of[q] = id;
            q = (q + 1) % sz;
            if (q == s) break;
        }
    }
    std::vector<std::vector<int>> bucket_marked(runs), bucket_rest(runs);
    for (int i = 0; i < sz; i++) {
        const Extreme& e = m.at((start + i) % sz);
        if (e.kind != ExtremeKind::Beginning) continue;
        int r = run_of[m.end_pos(e.arc)];
        (marked[e.arc] ? bucket_marked[r] : bucket_rest[r]).push_back(e.arc);
    }
    std::vector<Extreme> ord = m.order();
    std::vector<int> cursor(runs, 0);
    std::vector<std::vector<int>> filled(runs);
    for (int r = 0; r < runs; r++) {
        filled[r] = bucket_marked[r];
        filled[r].insert(filled[r].end(), bucket_rest[r].begin(), bucket_rest[r].end());
    }
    // positions of each run in circular walk order from its start
    for (int p = 0; p < sz; p++) {
        if (m.at(p).kind != ExtremeKind::Ending) continue;
        // is p the start of its run?
        if (m.at((p + sz - 1) % sz).kind == ExtremeKind::Ending && sz > 1) continue;
        int r = run_of[p];
        int q = p;
        int i = 0;
        while (m.at(q).kind == ExtremeKind::Ending) {
            ord[q] = {filled[r][i++], ExtremeKind::Ending};
            q = (q + 1) % sz;
            if (q == p) break;
        }
    }
    return CircularArcModel(std::move(ord));
}

} // namespace

CircularArcModel sort_extreme_sequences(const CircularArcModel& m) {
    if (authenticate_nhca(m).kind != CoverCheck::Kind::Ok)
        throw std::invalid_argument("sort_extreme_sequences needs an NHCA model");
    if (m.arc_count() <= 1) return m;
    CircularArcModel t_sorted = sort_t_sequences(m);
    // the symmetric s-sequence sort is the t-sort of the reversed model
    return reverse_model(sort_t_sequences(reverse_model(t_sorted)));
}

namespace {

// first ending strictly after `from`, walking clockwise
int first_ending_after(const CircularArcModel& m, int from) {
    int sz = m.size();
    for (int i = 1; i < sz; i++) {
        int p = (from + i) % sz;
        if (m.at(p).kind == ExtremeKind::Ending) return m.at(p).arc;
    }
    return -1;
}

// first beginning strictly before `from`, walking counterclockwise
int first_beginning_before(const CircularArcModel& m, int from) {
    int sz = m.size();
    for (int i = 1; i < sz; i++) {
        int p = (from - i % sz + sz) % sz;
        if (m.at(p).kind == ExtremeKind::Beginning) return m.at(p).arc;
    }
    return -1;
}

} // namespace

Certificate phca_from_nhca(const CircularArcModel& m) {
    CircularArcModel sorted = sort_extreme_sequences(m);
    Certificate cert;
    int sz = sorted.size();
    // properness check over consecutive beginnings (complete: a containment
    // always survives to some consecutive pair)
    std::vector<int> begins;
    for (int p = 0; p < sz; p++)
        if (sorted.at(p).kind == ExtremeKind::Beginning) begins.push_back(sorted.at(p).arc);
    int n = (int)begins.size();
    for (int i = 0; i < n; i++) {
        int a = begins[i], b = begins[(i + 1) % n];
        if (!sorted.arc_contains(a, b)) continue;
        int L = first_ending_after(sorted, sorted.begin_pos(a));
        int R = first_beginning_before(sorted, sorted.end_pos(a));
        if (L == -1 || R == -1 || L == R || sorted.arcs_intersect(L, R))
            throw std::logic_error("claw witness arcs are not disjoint");
        cert.kind = Certificate::Kind::Forbidden;
        cert.obstruction = Obstruction{ForbiddenKind::K13, {a, b, L, R}};
        return cert;
    }
    cert.kind = Certificate::Kind::Positive;
    cert.model = std::move(sorted);
    return cert;
}

namespace {

// NEXT for proper normal models: the arc of the last beginning strictly
// inside A, if any (one pass; all arcs of a t-sequence share it).
std::vector<int> next_pca(const CircularArcModel& m) {
    int sz = m.size();
    std::vector<int> prev_begin(sz, -1);
    int last = -1;
    for (int lap = 0; lap < 2; lap++)
        for (int p = 0; p < sz; p++) {
            if (last != -1) prev_begin[p] = last;
            if (m.at(p).kind == ExtremeKind::Beginning) last = m.at(p).arc;
        }
    std::vector<int> next(m.arc_count(), -1);
    for (int a = 0; a < m.arc_count(); a++) {
        int cand = prev_begin[m.end_pos(a)];
        if (cand != -1 && cand != a && m.pos_inside(a, m.begin_pos(cand))) next[a] = cand;
    }
    return next;
}

// Three arcs covering the circle of a proper normal model, via the simplified
// sweep; nothing if the model is NHCA.
std::optional<std::array<int, 3>> pca_three_cover(const CircularArcModel& m) {
    if (m.arc_count() == 0) return std::nullopt;
    std::vector<int> next = next_pca(m);
    int sz = m.size();
    auto fwd = [&](int from, int p) { return ((p - from) % sz + sz) % sz; };
    int start = m.begin_pos(0);
    for (int i = 0; i < sz; i++) {
        const Extreme& e = m.at((start + i) % sz);
        if (e.kind != ExtremeKind::Beginning) continue;
        int a = e.arc;
        int n1 = next[a];
        if (n1 == -1) continue;
        assert(fwd(m.end_pos(a), m.end_pos(n1)) <= fwd(m.end_pos(a), m.begin_pos(a))); // normal
        int n2 = next[n1];
        if (n2 == -1 || n2 == a) continue;
        if (fwd(m.end_pos(n1), m.end_pos(n2)) > fwd(m.end_pos(n1), m.begin_pos(a)))
            return {{a, n1, n2}};
    }
    return std::nullopt;
}

struct Troika {
    int a1, a2, a3; // canonical: s1 t3 s2 t1 s3 t2 clockwise
};

// rotate roles so that s(a2) lies inside a1 and t(a3) lies inside a1
Troika canonical_troika(const CircularArcModel& m, int first, std::array<int, 3> arcs) {
    // try each member as a1
    for (int i = 0; i < 3; i++) {
        if (arcs[i] != first && first != -1) continue;
        int a1 = arcs[i], x = arcs[(i + 1) % 3], y = arcs[(i + 2) % 3];
        bool sx = m.pos_inside(a1, m.begin_pos(x));
        bool sy = m.pos_inside(a1, m.begin_pos(y));
        int a2 = -1, a3 = -1;
        if (sx && !sy) a2 = x, a3 = y;
        else if (sy && !sx) a2 = y, a3 = x;
        else continue;
        if (m.pos_inside(a1, m.end_pos(a3))) return {a1, a2, a3};
    }
    throw std::logic_error("cover triple without canonical rotation");
}

CircularArcModel restore_duplicates(const CircularArcModel& reduced, int kept_new, int count) {
    CircularArcModel out = reduced;
    for (int i = 0; i < count; i++) out = duplicate_arc(out, kept_new);
    return out;
}

// B_i: the arc of the first beginning clockwise from t(A_i); by properness it
// misses A_i and meets the other two cover arcs.
Certificate six_arc_certificate(const CircularArcModel& u1, const Troika& t,
                                const std::vector<int>& orig_ids) {
    int sz = u1.size();
    std::array<int, 3> A{t.a1, t.a2, t.a3};
    std::array<int, 3> B{};
    for (int i = 0; i < 3; i++) {
        int p = u1.end_pos(A[i]);
        int b = -1;
        for (int s = 1; s < sz; s++) {
            const Extreme& e = u1.at((p + s) % sz);
            if (e.kind == ExtremeKind::Beginning) {
                b = e.arc;
                break;
            }
        }
        if (b == -1 || u1.arcs_intersect(b, A[i]))
            throw std::logic_error("witness arc next to a cover arc is not disjoint from it");
        B[i] = b;
    }
    Certificate cert;
    cert.kind = Certificate::Kind::Forbidden;
    bool disjoint = !u1.arcs_intersect(B[0], B[1]) && !u1.arcs_intersect(B[0], B[2]) &&
                    !u1.arcs_intersect(B[1], B[2]);
    if (disjoint) {
        cert.obstruction =
            Obstruction{ForbiddenKind::S3,
                        {orig_ids[A[0]], orig_ids[A[1]], orig_ids[A[2]],
                         orig_ids[B[0]], orig_ids[B[1]], orig_ids[B[2]]}};
    } else {
        int bi = -1, bj = -1;
        for (int i = 0; i < 3 && bi == -1; i++)
            for (int j = i + 1; j < 3; j++)
                if (u1.arcs_intersect(B[i], B[j])) {
                    bi = B[i];
                    bj = B[j];
                    break;
                }
        cert.obstruction = Obstruction{
            ForbiddenKind::W4,
            {orig_ids[A[0]], orig_ids[A[1]], orig_ids[A[2]], orig_ids[bi], orig_ids[bj]}};
    }
    return cert;
}

bool covers_circle(const CircularArcModel& m, std::array<int, 3> arcs) {
    Bits u = m.segments(arcs[0]);
    u |= m.segments(arcs[1]);
    u |= m.segments(arcs[2]);
    return u.full();
}

} // namespace

Certificate phca_from_pca(const CircularArcModel& m) {
    if (!is_proper_model(m)) throw std::invalid_argument("phca_from_pca needs a proper model");
    Certificate cert;
    if (m.arc_count() == 0) {
        cert.kind = Certificate::Kind::Positive;
        cert.model = m;
        return cert;
    }
    UkView view = u_k(m, 1);
    const CircularArcModel& u1 = view.reduced;
    int removed = (int)view.removed_universal.size();
    int kept_new = view.kept_universal ? view.id_map[*view.kept_universal] : -1;

    auto cover = pca_three_cover(u1);
    if (!cover) {
        // U_1 is NCA with no three-arc cover, hence HCA
        cert.kind = Certificate::Kind::Positive;
        cert.model = restore_duplicates(u1, kept_new, removed);
        return cert;
    }
    if (!covers_circle(u1, *cover)) throw std::logic_error("sweep returned a non-covering triple");

    bool universal_in_cover =
        kept_new != -1 && (cover->at(0) == kept_new || cover->at(1) == kept_new || cover->at(2) == kept_new);
    if (!universal_in_cover)
        return six_arc_certificate(u1, canonical_troika(u1, -1, *cover), view.orig_ids);

    Troika t = canonical_troika(u1, kept_new, *cover);
    int sz = u1.size();
    int s1 = u1.begin_pos(t.a1), t1 = u1.end_pos(t.a1);
    auto fwd = [&](int p) { return ((p - s1) % sz + sz) % sz; };
    int window = fwd(t1);
    // R: first beginning inside (s1, t1); L: last ending inside (s1, t1)
    int R = -1, Rpos = -1, L = -1, Lpos = -1;
    for (int i = 1; i < window; i++) {
        const Extreme& e = u1.at((s1 + i) % sz);
        if (e.kind == ExtremeKind::Beginning && R == -1) {
            R = e.arc;
            Rpos = i;
        }
        if (e.kind == ExtremeKind::Ending) {
            L = e.arc;
            Lpos = i;
        }
    }
    if (R == -1 || Lpos < Rpos) {
        // every ending precedes every beginning inside A_1: U_0 is a PIG
        // model; replace A_1 by its complement and restore duplicates
        std::vector<Extreme> ord = u1.order();
        ord[s1].kind = ExtremeKind::Ending;
        ord[t1].kind = ExtremeKind::Beginning;
        CircularArcModel flipped(std::move(ord));
        cert.kind = Certificate::Kind::Positive;
        cert.model = restore_duplicates(flipped, t.a1, removed);
        return cert;
    }
    if (L == -1 || (L == t.a3 && R == t.a2)) throw std::logic_error("inconsistent window scan");
    std::array<int, 3> troika;
    if (L == t.a3) troika = {R, t.a2, t.a3};
    else if (R == t.a2) troika = {L, t.a2, t.a3};
    else if (u1.arcs_intersect(L, t.a2)) troika = {t.a2, L, R};
    else if (u1.arcs_intersect(R, t.a3)) troika = {t.a3, L, R};
    else {
        cert.kind = Certificate::Kind::Forbidden;
        cert.obstruction = Obstruction{ForbiddenKind::W4,
                                       {view.orig_ids[t.a1], view.orig_ids[t.a2],
                                        view.orig_ids[t.a3], view.orig_ids[L], view.orig_ids[R]}};
        return cert;
    }
    if (!covers_circle(u1, troika)) throw std::logic_error("re-dispatched triple does not cover");
    return six_arc_certificate(u1, canonical_troika(u1, -1, troika), view.orig_ids);
}

} // namespace carc
