#include "carc/cliques.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "carc/nhca.hpp"
#include "carc/oracle.hpp"

namespace carc {

CliqueMatrix clique_matrix(const Graph& g) {
    CliqueMatrix q;
    q.cliques = maximal_cliques(g);
    q.cols = g.vertex_count();
    q.m.assign(q.cliques.size(), std::vector<uint8_t>(q.cols, 0));
    for (size_t i = 0; i < q.cliques.size(); i++)
        for (int v : q.cliques[i]) q.m[i][v] = 1;
    return q;
}

std::vector<std::pair<int, std::vector<int>>> clique_segments(const CircularArcModel& m) {
    if (authenticate_nhca(m).kind != CoverCheck::Kind::Ok)
        throw std::invalid_argument("clique_segments needs an NHCA model");
    std::vector<std::pair<int, std::vector<int>>> out;
    int sz = m.size();
    for (int p = 0; p < sz; p++) {
        if (m.at(p).kind != ExtremeKind::Beginning) continue;
        if (m.at((p + 1) % sz).kind != ExtremeKind::Ending) continue;
        std::vector<int> arcs;
        for (int a = 0; a < m.arc_count(); a++)
            if (m.covers_segment(a, p)) arcs.push_back(a);
        out.push_back({p, std::move(arcs)});
    }
    return out;
}

namespace {

// Backtracking search for a line order making every constraint row's ones
// consecutive.  `rows` are bitmasks over the lines being ordered.
struct ConsecutiveSearch {
    int lines;
    std::vector<std::vector<uint8_t>> has; // constraint x line
    std::vector<int> total;
    std::vector<int> placed_cnt;
    std::vector<uint8_t> open, closed;
    std::vector<int> order;
    std::vector<uint8_t> used;

    bool solve(int depth) {
        int k = (int)has.size();
        if (depth == lines) return true;
        for (int c = 0; c < lines; c++) {
            if (used[c]) continue;
            // skip duplicate candidates at this depth
            bool dup = false;
            for (int c2 = 0; c2 < c && !dup; c2++) {
                if (used[c2]) continue;
                bool same = true;
                for (int r = 0; r < k && same; r++)
                    if (has[r][c] != has[r][c2]) same = false;
                dup = same;
            }
            if (dup) continue;
            bool ok = true;
            for (int r = 0; r < k && ok; r++) {
                if (has[r][c]) {
                    if (closed[r]) ok = false;
                } else if (open[r] && placed_cnt[r] < total[r]) {
                    ok = false; // an unfinished block may not be interrupted
                }
            }
            if (!ok) continue;
            std::vector<uint8_t> save_open = open, save_closed = closed;
            for (int r = 0; r < k; r++) {
                if (has[r][c]) {
                    open[r] = 1;
                    placed_cnt[r]++;
                } else if (open[r]) {
                    open[r] = 0;
                    closed[r] = 1;
                }
            }
            used[c] = 1;
            order.push_back(c);
            if (solve(depth + 1)) return true;
            order.pop_back();
            used[c] = 0;
            open = save_open;
            closed = save_closed;
            for (int r = 0; r < k; r++)
                if (has[r][c]) placed_cnt[r]--;
        }
        return false;
    }
};

std::optional<std::vector<int>> consecutive_order(const BinaryMatrix& rows, int lines) {
    ConsecutiveSearch s;
    s.lines = lines;
    s.has = rows;
    s.total.assign(rows.size(), 0);
    for (size_t r = 0; r < rows.size(); r++)
        s.total[r] = (int)std::count(rows[r].begin(), rows[r].end(), (uint8_t)1);
    s.placed_cnt.assign(rows.size(), 0);
    s.open.assign(rows.size(), 0);
    s.closed.assign(rows.size(), 0);
    s.used.assign(lines, 0);
    if (s.solve(0)) return s.order;
    return std::nullopt;
}

BinaryMatrix transpose(const BinaryMatrix& m) {
    if (m.empty()) return {};
    BinaryMatrix t(m[0].size(), std::vector<uint8_t>(m.size()));
    for (size_t i = 0; i < m.size(); i++)
        for (size_t j = 0; j < m[i].size(); j++) t[j][i] = m[i][j];
    return t;
}

bool run_ok_linear(const std::vector<uint8_t>& row, const std::vector<int>& order) {
    int first = -1, last = -1, cnt = 0;
    for (size_t i = 0; i < order.size(); i++)
        if (row[order[i]]) {
            if (first < 0) first = (int)i;
            last = (int)i;
            cnt++;
        }
    return cnt == 0 || last - first + 1 == cnt;
}

bool run_ok_circular(const std::vector<uint8_t>& row, const std::vector<int>& order) {
    int k = (int)order.size();
    int trans = 0, any = 0;
    for (int i = 0; i < k; i++) {
        int a = row[order[i]];
        int b = row[order[(i + 1) % k]];
        any |= a;
        if (!a && b) trans++;
    }
    return !any || trans <= 1;
}

} // namespace

std::optional<std::vector<int>> ones_property(const BinaryMatrix& m, OnesAxis axis, OnesMode mode) {
    BinaryMatrix rows = axis == OnesAxis::Rows ? m : transpose(m);
    int lines = rows.empty() ? (axis == OnesAxis::Rows ? (m.empty() ? 0 : (int)m[0].size()) : (int)m.size())
                             : (int)rows[0].size();
    if (rows.empty() || lines == 0) {
        std::vector<int> id(lines);
        std::iota(id.begin(), id.end(), 0);
        return id;
    }
    BinaryMatrix work = rows;
    if (mode == OnesMode::Circular) {
        // Tucker reduction: complement every row with a one in the pivot line
        for (auto& r : work)
            if (r[0])
                for (auto& b : r) b ^= 1;
    }
    return consecutive_order(work, lines);
}

std::optional<std::vector<int>> ones_property_exhaustive(const BinaryMatrix& m, OnesAxis axis, OnesMode mode) {
    BinaryMatrix rows = axis == OnesAxis::Rows ? m : transpose(m);
    int lines = rows.empty() ? (axis == OnesAxis::Rows ? (m.empty() ? 0 : (int)m[0].size()) : (int)m.size())
                             : (int)rows[0].size();
    if (rows.empty() || lines == 0) {
        std::vector<int> id(lines);
        std::iota(id.begin(), id.end(), 0);
        return id;
    }
    if (lines > 10) throw std::invalid_argument("exhaustive ones-property capped at 10 lines");
    std::vector<int> perm(lines);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const auto& r : rows) {
            if (mode == OnesMode::Consecutive ? !run_ok_linear(r, perm) : !run_ok_circular(r, perm)) {
                ok = false;
                break;
            }
        }
        if (ok) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

bool phca_via_matrix(const Graph& g) {
    CliqueMatrix q = clique_matrix(g);
    return ones_property(q.m, OnesAxis::Rows, OnesMode::Circular).has_value() &&
           ones_property(q.m, OnesAxis::Columns, OnesMode::Circular).has_value();
}

} // namespace carc
